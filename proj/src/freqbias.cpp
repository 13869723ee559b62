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

#include "lexdiv/freqbias.hpp"

#include <cmath>

#include "lexdiv/errors.hpp"

namespace lexdiv {

BiasClass classify_word(double p_ht, double p_mt, double threshold) {
  if (!(p_ht > 0.0)) {
    throw DomainError(
        "classify_word requires p_ht > 0; HT-absent words are novel words");
  }
  // p_ht exactly at the threshold counts as non-frequent.
  const bool frequent = p_ht > threshold;
  if (p_mt == 0.0) return frequent ? BiasClass::PZ : BiasClass::MZ;
  if (p_mt > p_ht) return frequent ? BiasClass::PP : BiasClass::MP;
  // Covers p_mt == p_ht: "-" direction, zero contribution.
  return frequent ? BiasClass::PM : BiasClass::MM;
}

BiasClassification classify_corpora(const VocabProfile& ht,
                                    const VocabProfile& mt,
                                    const BiasClassConfig& config) {
  if (ht.entries.empty() || mt.entries.empty()) {
    throw EmptyCorpusError("classify_corpora requires non-empty profiles");
  }
  BiasClassification bc;
  bc.diff_scale = config.diff_scale;
  bc.ht_type_count = ht.type_count;
  // Mean of a probability distribution over its own support.
  bc.threshold = 1.0 / static_cast<double>(ht.type_count);

  for (const auto& [word, entry] : ht.entries) {
    const auto mt_it = mt.entries.find(word);
    const double p_mt =
        mt_it == mt.entries.end() ? 0.0 : mt_it->second.probability;
    const BiasClass cls = classify_word(entry.probability, p_mt, bc.threshold);
    bc.counts[static_cast<int>(cls)] += 1;
    bc.acc_diffs[static_cast<int>(cls)] +=
        std::abs(p_mt - entry.probability) * config.diff_scale;
  }
  for (const auto& [word, entry] : mt.entries) {
    if (!ht.entries.contains(word)) {
      bc.novel_count += 1;
      bc.novel_mass += entry.probability * config.diff_scale;
    }
  }
  return bc;
}

std::map<std::string, double> accumulated_differences(
    const VocabProfile& ht, const VocabProfile& mt,
    const BiasClassConfig& config) {
  const BiasClassification bc = classify_corpora(ht, mt, config);
  std::map<std::string, double> diffs;
  for (int i = 0; i < kBiasClassCount; ++i) {
    diffs[kBiasClassNames[i]] = bc.acc_diffs[i];
  }
  return diffs;
}

}  // namespace lexdiv
