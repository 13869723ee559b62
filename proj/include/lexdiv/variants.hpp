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

#ifndef LEXDIV_VARIANTS_HPP_
#define LEXDIV_VARIANTS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lexdiv/corpus.hpp"

namespace lexdiv {

// User-declared set of translation variants of one source word. Matching is
// exact on normalized surface forms; morphological variants are distinct
// outcomes by design.
struct VariantSet {
  std::string source_word;           // documentation only
  std::vector<std::string> variants;  // non-empty, pairwise distinct
};

struct VariantCell {
  std::uint64_t count = 0;
  // count / total count of the set within that corpus; all zero when the
  // whole set is absent.
  double relative_frequency = 0.0;

  bool operator==(const VariantCell&) const = default;
};

struct VariantProfile {
  std::string source_word;
  // corpus label -> variant -> cell
  std::map<std::string, std::map<std::string, VariantCell>> per_corpus;
};

// Counts occurrences of each variant type per corpus. Absent variants yield
// zero-count cells (present, not omitted).
VariantProfile variant_profile(std::span<const Corpus> corpora,
                               const VariantSet& vs);

// JSON file: [{"source_word": ..., "variants": [...]}, ...]. Throws Error
// with a parse location on malformed input, and validates the VariantSet
// invariants (non-empty, distinct variants).
std::vector<VariantSet> load_variant_sets(const std::filesystem::path& path);

}  // namespace lexdiv

#endif  // LEXDIV_VARIANTS_HPP_
