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

#include "lexdiv/tokenizer.hpp"

#include <doctest.h>

#include <random>

using namespace lexdiv;

namespace {

// Hand-written reference splitter: split on maximal whitespace runs.
std::vector<std::string> reference_split(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t') {
      if (!current.empty()) {
        out.push_back(current);
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

TEST_CASE("whitespace splitting") {
  CHECK(tokenize("The cat sat") == std::vector<std::string>{"The", "cat", "sat"});
  CHECK(tokenize("") == std::vector<std::string>{});
  CHECK(tokenize("   \t  ") == std::vector<std::string>{});
  // Maximal whitespace runs collapse.
  CHECK(tokenize("The  cat") == std::vector<std::string>{"The", "cat"});
}

TEST_CASE("matches reference splitter on random lines") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "ab c\tde ";
  for (int trial = 0; trial < 200; ++trial) {
    std::string line;
    const std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) {
      line += alphabet[rng() % alphabet.size()];
    }
    CHECK(tokenize(line) == reference_split(line));
  }
}

TEST_CASE("lowercase is ASCII-only") {
  TokenizerConfig config{.lowercase = true};
  CHECK(tokenize("The CAT", config) == std::vector<std::string>{"the", "cat"});
  // Multi-byte UTF-8 passes through untouched.
  CHECK(tokenize("Caf\xC3\xA9", config) ==
        std::vector<std::string>{"caf\xC3\xA9"});
}

TEST_CASE("punctuation stripping") {
  TokenizerConfig config{.strip_punctuation = true};
  CHECK(tokenize("Hello, world!", config) ==
        std::vector<std::string>{"Hello", "world"});
  // Interior punctuation survives; all-punctuation tokens are dropped.
  CHECK(tokenize("state-of-the-art -- yes", config) ==
        std::vector<std::string>{"state-of-the-art", "yes"});
}

TEST_CASE("determinism") {
  TokenizerConfig config{.lowercase = true, .strip_punctuation = true};
  const std::string line = "A line, with SOME punctuation... and Tabs\there.";
  CHECK(tokenize(line, config) == tokenize(line, config));
}

TEST_CASE("utf8 validation") {
  CHECK(is_valid_utf8("plain ascii"));
  CHECK(is_valid_utf8("caf\xC3\xA9"));
  CHECK(is_valid_utf8("\xE2\x82\xAC"));          // three-byte
  CHECK(is_valid_utf8("\xF0\x9F\x99\x82"));      // four-byte
  CHECK_FALSE(is_valid_utf8("\xC3"));            // truncated
  CHECK_FALSE(is_valid_utf8("\xFF\xFE"));        // invalid leads
  CHECK_FALSE(is_valid_utf8("\xC0\xAF"));        // overlong
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));    // surrogate
}
