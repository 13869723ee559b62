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

#ifndef LEXDIV_DIVERSITY_HPP_
#define LEXDIV_DIVERSITY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "lexdiv/corpus.hpp"

namespace lexdiv {

inline constexpr double kDefaultMtldThreshold = 0.72;

// V(m): number of types occurring exactly m times.
// M1 = total tokens = sum m*V(m); M2 = sum m^2*V(m).
struct FrequencySpectrum {
  std::map<std::uint64_t, std::uint64_t> spectrum;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::uint64_t type_count = 0;
};

FrequencySpectrum frequency_spectrum(const Corpus& corpus);
FrequencySpectrum spectrum_from_counts(
    const std::unordered_map<std::string, std::uint64_t>& counts);

// Type/token ratio. Throws EmptyCorpusError on an empty corpus.
double ttr(const Corpus& corpus);

// K = 10^4 (M2 - M1) / M1^2. Requires at least two tokens.
double yules_k(const Corpus& corpus);
double yules_k(const FrequencySpectrum& spectrum);

// I = M1^2 / (M2 - M1) = 10^4 / K. Throws UndefinedResultError when K = 0
// (every type is a singleton).
double yules_i(const Corpus& corpus);
double yules_i(const FrequencySpectrum& spectrum);

// One directional MTLD pass over a token stream. Running TTR of the current
// factor segment is tracked; when it drops below the threshold a full factor
// is counted and the segment resets. At end of stream the leftover segment
// contributes (1 - TTR_remaining) / (1 - threshold) of a factor.
class MtldPass {
 public:
  explicit MtldPass(double threshold = kDefaultMtldThreshold);

  void add(std::string_view token);

  // Tokens seen / total factor count. Throws UndefinedResultError when the
  // factor count is zero (stream never crossed the threshold and ended with
  // segment TTR exactly 1) or when no tokens were seen.
  double finish() const;

  std::uint64_t token_count() const { return total_tokens_; }

 private:
  double threshold_;
  double factors_ = 0.0;
  std::uint64_t total_tokens_ = 0;
  std::uint64_t segment_tokens_ = 0;
  std::unordered_set<std::string> segment_types_;
};

struct MtldResult {
  double mtld = 0.0;  // mean of forward and backward
  double forward = 0.0;
  double backward = 0.0;
};

// MTLD over the flattened token stream in corpus order, forward and
// backward. Throws UndefinedResultError in the degenerate zero-factor case.
MtldResult mtld(const Corpus& corpus, double threshold = kDefaultMtldThreshold);

struct DiversityReport {
  double ttr = 0.0;
  double ttr_scaled = 0.0;  // ttr * 1000
  std::optional<double> yules_k;
  std::optional<double> yules_i;
  std::optional<MtldResult> mtld;
  double mtld_threshold = kDefaultMtldThreshold;
  std::uint64_t token_count = 0;
  std::uint64_t type_count = 0;
  // Reason codes for fields left unset, e.g. "all_types_singleton".
  std::string yules_undefined_reason;
  std::string mtld_undefined_reason;
};

// Computes all metrics for one corpus; undefined Yule's I / MTLD are carried
// as empty optionals with reason codes, never as sentinel numbers.
DiversityReport diversity_report(const Corpus& corpus,
                                 double mtld_threshold = kDefaultMtldThreshold);

// Streaming variant assembled from pre-accumulated state; used by the CLI so
// memory stays O(vocabulary), never O(corpus tokens).
DiversityReport diversity_report_from_parts(const FrequencySpectrum& spectrum,
                                            const MtldPass& forward,
                                            const MtldPass& backward,
                                            double mtld_threshold);

}  // namespace lexdiv

#endif  // LEXDIV_DIVERSITY_HPP_
