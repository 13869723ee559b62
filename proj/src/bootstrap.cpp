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

#include "lexdiv/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "lexdiv/errors.hpp"
#include "lexdiv/rng.hpp"

namespace lexdiv {

namespace {

double metric_on_sentences(const std::vector<const Sentence*>& sentences,
                           const BootstrapConfig& config) {
  switch (config.metric) {
    case LdMetric::Ttr: {
      std::unordered_map<std::string, std::uint64_t> counts;
      std::uint64_t tokens = 0;
      for (const Sentence* s : sentences) {
        for (const std::string& t : *s) counts[t] += 1;
        tokens += s->size();
      }
      return static_cast<double>(counts.size()) / static_cast<double>(tokens);
    }
    case LdMetric::YulesI: {
      std::unordered_map<std::string, std::uint64_t> counts;
      for (const Sentence* s : sentences) {
        for (const std::string& t : *s) counts[t] += 1;
      }
      return yules_i(spectrum_from_counts(counts));
    }
    case LdMetric::Mtld: {
      MtldPass forward(config.mtld_threshold);
      MtldPass backward(config.mtld_threshold);
      for (const Sentence* s : sentences) {
        for (const std::string& t : *s) forward.add(t);
      }
      for (auto sent = sentences.rbegin(); sent != sentences.rend(); ++sent) {
        for (auto tok = (*sent)->rbegin(); tok != (*sent)->rend(); ++tok) {
          backward.add(*tok);
        }
      }
      return 0.5 * (forward.finish() + backward.finish());
    }
  }
  throw Error("unknown metric");
}

double metric_on_corpus(const Corpus& corpus, const BootstrapConfig& config) {
  std::vector<const Sentence*> sentences;
  sentences.reserve(corpus.size());
  for (const Sentence& s : corpus.sentences) sentences.push_back(&s);
  return metric_on_sentences(sentences, config);
}

std::vector<const Sentence*> resample(const Corpus& corpus,
                                      std::mt19937_64& rng) {
  std::vector<const Sentence*> sample;
  sample.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::size_t idx =
        static_cast<std::size_t>(bounded_uniform(rng, corpus.size()));
    sample.push_back(&corpus.sentences[idx]);
  }
  return sample;
}

double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

const char* ld_metric_name(LdMetric metric) {
  switch (metric) {
    case LdMetric::Ttr:
      return "ttr";
    case LdMetric::YulesI:
      return "yules_i";
    case LdMetric::Mtld:
      return "mtld";
  }
  return "unknown";
}

BootstrapResult bootstrap_compare(const Corpus& a, const Corpus& b,
                                  const BootstrapConfig& config) {
  if (a.empty() || b.empty()) {
    throw EmptyCorpusError("bootstrap_compare requires non-empty corpora");
  }
  if (config.iterations == 0) {
    throw DomainError("bootstrap iterations must be positive");
  }

  BootstrapResult result;
  result.iterations = config.iterations;
  result.seed = config.seed;
  result.low_iteration_warning = config.iterations < kMinReliableIterations;
  // Undefined on the full corpora is a hard error, not a degenerate sample.
  result.observed_delta =
      metric_on_corpus(a, config) - metric_on_corpus(b, config);

  std::vector<double> deltas;
  deltas.reserve(config.iterations);
  for (std::uint32_t iter = 0; iter < config.iterations; ++iter) {
    // Paired substreams keyed by iteration index keep results deterministic
    // and independent of evaluation order.
    std::mt19937_64 rng_a(substream_seed(config.seed, 2ULL * iter));
    std::mt19937_64 rng_b(substream_seed(config.seed, 2ULL * iter + 1));
    try {
      const double metric_a = metric_on_sentences(resample(a, rng_a), config);
      const double metric_b = metric_on_sentences(resample(b, rng_b), config);
      deltas.push_back(metric_a - metric_b);
    } catch (const UndefinedResultError&) {
      ++result.degenerate_samples;
    }
  }
  if (result.degenerate_samples * 10 > config.iterations) {
    throw UndefinedResultError(
        "bootstrap aborted: metric undefined on more than 10% of resamples (" +
        std::to_string(result.degenerate_samples) + " of " +
        std::to_string(config.iterations) + ")");
  }

  // Two-sided sign test on the bootstrap distribution: the fraction of
  // deltas whose sign opposes (or zeroes against) the observed delta,
  // doubled and clamped.
  if (result.observed_delta == 0.0) {
    result.p_value = 1.0;
  } else {
    std::size_t opposing = 0;
    for (double d : deltas) {
      if (result.observed_delta > 0.0 ? d <= 0.0 : d >= 0.0) ++opposing;
    }
    result.p_value = std::min(
        1.0, 2.0 * static_cast<double>(opposing) /
                 static_cast<double>(deltas.empty() ? 1 : deltas.size()));
  }

  std::sort(deltas.begin(), deltas.end());
  result.ci_low = percentile(deltas, 0.025);
  result.ci_high = percentile(deltas, 0.975);
  return result;
}

}  // namespace lexdiv
