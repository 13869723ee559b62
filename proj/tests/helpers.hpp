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

#ifndef LEXDIV_TESTS_HELPERS_HPP_
#define LEXDIV_TESTS_HELPERS_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "lexdiv/corpus.hpp"

namespace lexdiv::testing {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("lexdiv_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::filesystem::path write_file(const std::filesystem::path& path,
                                        const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

inline Corpus corpus_of(std::vector<std::vector<std::string>> sentences,
                        std::string label = "test") {
  return make_corpus(std::move(sentences), std::move(label));
}

// Flat token list as a single-sentence corpus.
inline Corpus flat_corpus(std::vector<std::string> tokens,
                          std::string label = "test") {
  return corpus_of({std::move(tokens)}, std::move(label));
}

// Random corpus over a small alphabet: up to max_tokens tokens spread over
// sentences of length 1..8.
inline Corpus random_corpus(std::mt19937_64& rng, std::size_t max_tokens,
                            std::size_t alphabet_size,
                            std::string label = "random") {
  std::size_t remaining = 1 + rng() % max_tokens;
  std::vector<std::vector<std::string>> sentences;
  while (remaining > 0) {
    std::size_t len = std::min<std::size_t>(remaining, 1 + rng() % 8);
    std::vector<std::string> sentence;
    for (std::size_t i = 0; i < len; ++i) {
      sentence.push_back("t" + std::to_string(rng() % alphabet_size));
    }
    remaining -= len;
    sentences.push_back(std::move(sentence));
  }
  return corpus_of(std::move(sentences), std::move(label));
}

inline std::vector<std::string> flatten(const Corpus& corpus) {
  std::vector<std::string> tokens;
  for (const auto& sentence : corpus.sentences) {
    tokens.insert(tokens.end(), sentence.begin(), sentence.end());
  }
  return tokens;
}

}  // namespace lexdiv::testing

#endif  // LEXDIV_TESTS_HELPERS_HPP_
