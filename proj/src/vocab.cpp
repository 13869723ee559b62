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

#include "lexdiv/vocab.hpp"

#include <unordered_set>

#include "lexdiv/errors.hpp"

namespace lexdiv {

void VocabAccumulator::add_sentence(std::span<const std::string> tokens) {
  if (tokens.empty()) return;
  const double weight = 1.0 / static_cast<double>(tokens.size());
  for (const std::string& token : tokens) {
    VocabEntry& entry = entries_[token];
    entry.raw_count += 1;
    entry.length_weighted += weight;
  }
  token_count_ += tokens.size();
  sentence_count_ += 1;
}

VocabProfile VocabAccumulator::finish() const {
  if (token_count_ == 0) {
    throw EmptyCorpusError("cannot build a vocabulary profile of an empty corpus");
  }
  double total_weight = 0.0;
  for (const auto& [token, entry] : entries_) {
    total_weight += entry.length_weighted;
  }
  VocabProfile profile;
  profile.entries = entries_;
  profile.type_count = entries_.size();
  profile.token_count = token_count_;
  for (auto& [token, entry] : profile.entries) {
    entry.probability = entry.length_weighted / total_weight;
  }
  return profile;
}

VocabProfile build_vocab_profile(const Corpus& corpus) {
  VocabAccumulator acc;
  for (const Sentence& sentence : corpus.sentences) {
    acc.add_sentence(sentence);
  }
  return acc.finish();
}

std::size_t vocab_size(const Corpus& corpus) {
  std::unordered_set<std::string> types;
  for (const Sentence& sentence : corpus.sentences) {
    types.insert(sentence.begin(), sentence.end());
  }
  return types.size();
}

}  // namespace lexdiv
