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

#ifndef LEXDIV_VOCAB_HPP_
#define LEXDIV_VOCAB_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "lexdiv/corpus.hpp"

namespace lexdiv {

struct VocabEntry {
  std::uint64_t raw_count = 0;
  // Sum over occurrences of 1/len(sentence). Each occurrence contributes
  // independently, so the total over all types equals the sentence count.
  double length_weighted = 0.0;
  double probability = 0.0;
};

struct VocabProfile {
  std::unordered_map<std::string, VocabEntry> entries;
  std::size_t type_count = 0;
  std::uint64_t token_count = 0;
};

// Streaming builder: O(vocabulary) state, sentences fed one at a time.
class VocabAccumulator {
 public:
  void add_sentence(std::span<const std::string> tokens);

  // Normalizes length-weighted frequencies into probabilities.
  // Throws EmptyCorpusError if no tokens were seen.
  VocabProfile finish() const;

  std::uint64_t token_count() const { return token_count_; }
  std::size_t sentence_count() const { return sentence_count_; }

 private:
  std::unordered_map<std::string, VocabEntry> entries_;
  std::uint64_t token_count_ = 0;
  std::size_t sentence_count_ = 0;
};

// Per-type probability frequencies of a corpus: each occurrence weighted
// by 1/sentence_length, then the weights normalized to a distribution.
VocabProfile build_vocab_profile(const Corpus& corpus);

// Number of distinct types (0 for an empty corpus).
std::size_t vocab_size(const Corpus& corpus);

}  // namespace lexdiv

#endif  // LEXDIV_VOCAB_HPP_
