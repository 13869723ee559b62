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

#ifndef LEXDIV_BOOTSTRAP_HPP_
#define LEXDIV_BOOTSTRAP_HPP_

#include <cstdint>
#include <string>

#include "lexdiv/corpus.hpp"
#include "lexdiv/diversity.hpp"

namespace lexdiv {

enum class LdMetric { Ttr, YulesI, Mtld };

const char* ld_metric_name(LdMetric metric);

struct BootstrapConfig {
  std::uint32_t iterations = 1000;
  std::uint64_t seed = 0;
  LdMetric metric = LdMetric::Ttr;
  double mtld_threshold = kDefaultMtldThreshold;
};

// Below this iteration count a p-value is reported with a warning flag.
inline constexpr std::uint32_t kMinReliableIterations = 100;

struct BootstrapResult {
  double observed_delta = 0.0;  // metric(a) - metric(b) on the full corpora
  double p_value = 1.0;
  double ci_low = 0.0;   // 95% percentile interval of resampled deltas
  double ci_high = 0.0;
  std::uint32_t iterations = 0;
  std::uint64_t seed = 0;
  // Resamples where the metric was undefined; excluded from the statistics.
  std::uint32_t degenerate_samples = 0;
  bool low_iteration_warning = false;
  // Fixed convention, recorded so results are self-describing.
  std::string p_value_method = "two-sided-sign-proportion";

  bool significant(double alpha = 0.05) const { return p_value < alpha; }
};

// Paired sentence-level bootstrap: each iteration resamples |a| sentences
// from a and |b| from b with replacement (independent per-iteration PRNG
// substreams keyed by iteration index, so results are deterministic given
// the seed and independent of evaluation order) and records the metric
// delta. p = min(1, 2 * fraction of deltas whose sign opposes or zeroes the
// observed delta); p = 1 when the observed delta is 0. Throws if the metric
// is undefined on a full corpus or on more than 10% of iterations.
BootstrapResult bootstrap_compare(const Corpus& a, const Corpus& b,
                                  const BootstrapConfig& config = {});

}  // namespace lexdiv

#endif  // LEXDIV_BOOTSTRAP_HPP_
