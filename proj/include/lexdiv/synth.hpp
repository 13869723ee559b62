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

#ifndef LEXDIV_SYNTH_HPP_
#define LEXDIV_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lexdiv/corpus.hpp"
#include "lexdiv/variants.hpp"

namespace lexdiv {

// Synthetic HT/MT pair generator. The "human" side samples tokens from a
// Zipf distribution over a ranked vocabulary partitioned into fixed-size
// variant groups. The "machine" side greedily rewrites every token to the
// most frequent member of its group, mimicking a decoder that always picks
// the most frequent alternative. The result exhibits the signature
// frequency-bias pattern: lower lexical diversity, rare variants vanishing,
// head variants exacerbated.
struct SynthConfig {
  std::size_t sentences = 1000;
  std::size_t min_sentence_len = 5;
  std::size_t max_sentence_len = 25;
  std::size_t vocab_size = 1000;
  std::size_t group_size = 4;   // variants per group; heads are group minima
  double zipf_exponent = 1.1;
  std::uint64_t seed = 0;
  std::size_t planted_variant_sets = 5;  // taken from the top-ranked groups
};

struct SynthPair {
  Corpus ht;
  Corpus mt;
  std::vector<VariantSet> variant_sets;
};

SynthPair generate_ht_mt(const SynthConfig& config);

}  // namespace lexdiv

#endif  // LEXDIV_SYNTH_HPP_
