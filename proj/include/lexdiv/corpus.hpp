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

#ifndef LEXDIV_CORPUS_HPP_
#define LEXDIV_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lexdiv/tokenizer.hpp"

namespace lexdiv {

using Sentence = std::vector<std::string>;

// An ordered sequence of tokenized sentences. Invariants: no sentence is
// empty; token_count equals the sum of sentence lengths.
struct Corpus {
  std::vector<Sentence> sentences;
  std::size_t token_count = 0;
  std::string label;
  // Empty lines filtered out at load time.
  std::size_t dropped_lines = 0;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

// Builds a Corpus from already-tokenized sentences: drops empty ones,
// computes token_count.
Corpus make_corpus(std::vector<Sentence> sentences, std::string label = {});

// Reads a UTF-8 text file, one sentence per line (LF or CRLF), tokenizes
// each line and drops empty lines. Throws IoError on a missing file and
// DecodeError (with line number) on invalid UTF-8.
Corpus load_corpus(const std::filesystem::path& path,
                   const TokenizerConfig& config = {}, std::string label = {});

// Sentence-index-aligned source/target pair.
struct ParallelCorpus {
  Corpus source;
  Corpus target;
};

}  // namespace lexdiv

#endif  // LEXDIV_CORPUS_HPP_
