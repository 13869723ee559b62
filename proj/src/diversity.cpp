// Copyright 2026 The lexdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexdiv/diversity.hpp"

#include "lexdiv/errors.hpp"

namespace lexdiv {

namespace {

std::unordered_map<std::string, std::uint64_t> type_counts(
    const Corpus& corpus) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const Sentence& sentence : corpus.sentences) {
    for (const std::string& token : sentence) {
      counts[token] += 1;
    }
  }
  return counts;
}

void require_tokens(const Corpus& corpus, std::uint64_t minimum,
                    const char* metric) {
  if (corpus.token_count < minimum) {
    throw EmptyCorpusError(std::string(metric) + " requires at least " +
                           std::to_string(minimum) + " tokens, corpus '" +
                           corpus.label + "' has " +
                           std::to_string(corpus.token_count));
  }
}

}  // namespace

FrequencySpectrum spectrum_from_counts(
    const std::unordered_map<std::string, std::uint64_t>& counts) {
  FrequencySpectrum fs;
  for (const auto& [token, count] : counts) {
    fs.spectrum[count] += 1;
  }
  fs.type_count = counts.size();
  for (const auto& [m, v] : fs.spectrum) {
    fs.m1 += m * v;
    fs.m2 += m * m * v;
  }
  return fs;
}

FrequencySpectrum frequency_spectrum(const Corpus& corpus) {
  require_tokens(corpus, 1, "frequency_spectrum");
  return spectrum_from_counts(type_counts(corpus));
}

double ttr(const Corpus& corpus) {
  require_tokens(corpus, 1, "ttr");
  const FrequencySpectrum fs = frequency_spectrum(corpus);
  return static_cast<double>(fs.type_count) / static_cast<double>(fs.m1);
}

double yules_k(const FrequencySpectrum& fs) {
  if (fs.m1 < 2) {
    throw EmptyCorpusError("yules_k requires at least 2 tokens");
  }
  const double m1 = static_cast<double>(fs.m1);
  const double m2 = static_cast<double>(fs.m2);
  return 1e4 * (m2 - m1) / (m1 * m1);
}

double yules_k(const Corpus& corpus) {
  require_tokens(corpus, 2, "yules_k");
  return yules_k(frequency_spectrum(corpus));
}

double yules_i(const FrequencySpectrum& fs) {
  if (fs.m1 < 2) {
    throw EmptyCorpusError("yules_i requires at least 2 tokens");
  }
  if (fs.m2 == fs.m1) {
    // Every type is a singleton; K = 0 and I has no defined value.
    throw UndefinedResultError(
        "yules_i undefined: all types occur exactly once (K = 0)");
  }
  const double m1 = static_cast<double>(fs.m1);
  return m1 * m1 / (static_cast<double>(fs.m2) - m1);
}

double yules_i(const Corpus& corpus) {
  require_tokens(corpus, 2, "yules_i");
  return yules_i(frequency_spectrum(corpus));
}

MtldPass::MtldPass(double threshold) : threshold_(threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw DomainError("MTLD threshold must lie in (0, 1)");
  }
}

void MtldPass::add(std::string_view token) {
  ++total_tokens_;
  ++segment_tokens_;
  segment_types_.insert(std::string(token));
  const double running_ttr = static_cast<double>(segment_types_.size()) /
                             static_cast<double>(segment_tokens_);
  if (running_ttr < threshold_) {
    factors_ += 1.0;
    segment_tokens_ = 0;
    segment_types_.clear();
  }
}

double MtldPass::finish() const {
  if (total_tokens_ == 0) {
    throw EmptyCorpusError("mtld requires at least 1 token");
  }
  double factors = factors_;
  if (segment_tokens_ > 0) {
    const double remaining_ttr = static_cast<double>(segment_types_.size()) /
                                 static_cast<double>(segment_tokens_);
    factors += (1.0 - remaining_ttr) / (1.0 - threshold_);
  }
  if (factors == 0.0) {
    throw UndefinedResultError(
        "mtld undefined: factor count is zero (running TTR never crossed the "
        "threshold and the stream ended with TTR = 1)");
  }
  return static_cast<double>(total_tokens_) / factors;
}

MtldResult mtld(const Corpus& corpus, double threshold) {
  require_tokens(corpus, 1, "mtld");
  MtldPass forward(threshold);
  MtldPass backward(threshold);
  for (const Sentence& sentence : corpus.sentences) {
    for (const std::string& token : sentence) {
      forward.add(token);
    }
  }
  for (auto sent = corpus.sentences.rbegin(); sent != corpus.sentences.rend();
       ++sent) {
    for (auto tok = sent->rbegin(); tok != sent->rend(); ++tok) {
      backward.add(*tok);
    }
  }
  MtldResult result;
  result.forward = forward.finish();
  result.backward = backward.finish();
  result.mtld = 0.5 * (result.forward + result.backward);
  return result;
}

DiversityReport diversity_report_from_parts(const FrequencySpectrum& spectrum,
                                            const MtldPass& forward,
                                            const MtldPass& backward,
                                            double mtld_threshold) {
  if (spectrum.m1 == 0) {
    throw EmptyCorpusError("diversity_report requires a non-empty corpus");
  }
  DiversityReport report;
  report.token_count = spectrum.m1;
  report.type_count = spectrum.type_count;
  report.ttr = static_cast<double>(spectrum.type_count) /
               static_cast<double>(spectrum.m1);
  report.ttr_scaled = 1000.0 * report.ttr;
  report.mtld_threshold = mtld_threshold;

  if (spectrum.m1 >= 2) {
    report.yules_k = yules_k(spectrum);
    try {
      report.yules_i = yules_i(spectrum);
    } catch (const UndefinedResultError& e) {
      report.yules_undefined_reason = "all_types_singleton";
    }
  } else {
    report.yules_undefined_reason = "single_token_corpus";
  }

  try {
    MtldResult m;
    m.forward = forward.finish();
    m.backward = backward.finish();
    m.mtld = 0.5 * (m.forward + m.backward);
    report.mtld = m;
  } catch (const UndefinedResultError& e) {
    report.mtld_undefined_reason = "zero_factor_count";
  }
  return report;
}

DiversityReport diversity_report(const Corpus& corpus, double mtld_threshold) {
  require_tokens(corpus, 1, "diversity_report");
  MtldPass forward(mtld_threshold);
  MtldPass backward(mtld_threshold);
  for (const Sentence& sentence : corpus.sentences) {
    for (const std::string& token : sentence) {
      forward.add(token);
    }
  }
  for (auto sent = corpus.sentences.rbegin(); sent != corpus.sentences.rend();
       ++sent) {
    for (auto tok = sent->rbegin(); tok != sent->rend(); ++tok) {
      backward.add(*tok);
    }
  }
  return diversity_report_from_parts(frequency_spectrum(corpus), forward,
                                     backward, mtld_threshold);
}

}  // namespace lexdiv
