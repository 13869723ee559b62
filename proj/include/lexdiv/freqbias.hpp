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

#ifndef LEXDIV_FREQBIAS_HPP_
#define LEXDIV_FREQBIAS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "lexdiv/vocab.hpp"

namespace lexdiv {

// The six exacerbation/decay classes over the reference (HT) vocabulary.
// First coordinate: frequent ("+", probability above threshold) or not
// ("-"). Second: frequency in the MT output increased ("+"), decreased or
// unchanged ("-"), or vanished ("0").
enum class BiasClass : int { PP = 0, PM = 1, MP = 2, MM = 3, PZ = 4, MZ = 5 };

inline constexpr int kBiasClassCount = 6;
inline constexpr std::array<const char*, kBiasClassCount> kBiasClassNames = {
    "++", "+-", "-+", "--", "+0", "-0"};

struct BiasClassConfig {
  enum class ThresholdRule { HtMean } threshold_rule = ThresholdRule::HtMean;
  // Reporting scale applied to accumulated differences (probability sums).
  double diff_scale = 1e4;
};

struct BiasClassification {
  std::array<std::uint64_t, kBiasClassCount> counts = {};
  std::array<double, kBiasClassCount> acc_diffs = {};  // already diff_scaled
  std::uint64_t novel_count = 0;  // MT types absent from HT, kept separate
  double novel_mass = 0.0;        // sum of their p_MT, diff_scaled
  double threshold = 0.0;
  double diff_scale = 0.0;
  std::uint64_t ht_type_count = 0;

  std::uint64_t count(BiasClass c) const {
    return counts[static_cast<int>(c)];
  }
  double acc_diff(BiasClass c) const {
    return acc_diffs[static_cast<int>(c)];
  }
};

// Classifies one HT type given its probabilities in both corpora.
// p_ht must be positive: HT-absent words are novel, not classed (throws
// DomainError). Ties: p_ht == threshold counts as non-frequent; p_mt == p_ht
// goes to the "-" direction with zero accumulated contribution.
BiasClass classify_word(double p_ht, double p_mt, double threshold);

// Classifies every HT type against the MT profile and accumulates
// |p_MT - p_HT| * diff_scale per class. The six classes partition the HT
// vocabulary; MT-only types are reported as novel_count / novel_mass.
BiasClassification classify_corpora(const VocabProfile& ht,
                                    const VocabProfile& mt,
                                    const BiasClassConfig& config = {});

// Per-class accumulated absolute frequency differences; for the zero
// classes the difference is p_HT itself.
std::map<std::string, double> accumulated_differences(
    const VocabProfile& ht, const VocabProfile& mt,
    const BiasClassConfig& config = {});

}  // namespace lexdiv

#endif  // LEXDIV_FREQBIAS_HPP_
