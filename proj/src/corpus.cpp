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

#include "lexdiv/corpus.hpp"

#include <utility>

#include "lexdiv/errors.hpp"
#include "lexdiv/io.hpp"

namespace lexdiv {

Corpus make_corpus(std::vector<Sentence> sentences, std::string label) {
  Corpus corpus;
  corpus.label = std::move(label);
  corpus.sentences.reserve(sentences.size());
  for (auto& sentence : sentences) {
    if (sentence.empty()) {
      ++corpus.dropped_lines;
      continue;
    }
    corpus.token_count += sentence.size();
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path,
                   const TokenizerConfig& config, std::string label) {
  Corpus corpus;
  corpus.label = std::move(label);
  LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    Sentence tokens = tokenize(line, config);
    if (tokens.empty()) {
      ++corpus.dropped_lines;
      continue;
    }
    corpus.token_count += tokens.size();
    corpus.sentences.push_back(std::move(tokens));
  }
  return corpus;
}

}  // namespace lexdiv
