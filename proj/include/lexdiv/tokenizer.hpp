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

#ifndef LEXDIV_TOKENIZER_HPP_
#define LEXDIV_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lexdiv {

// Deterministic: same config + same line -> same token sequence.
struct TokenizerConfig {
  // Lowercases ASCII letters only; multi-byte UTF-8 sequences pass through.
  bool lowercase = false;
  // Strips leading/trailing ASCII punctuation from each token; tokens that
  // become empty are dropped.
  bool strip_punctuation = false;

  bool operator==(const TokenizerConfig&) const = default;
};

// Splits on maximal runs of ASCII whitespace, then applies the config's
// normalizations. An empty or all-whitespace line yields an empty vector.
std::vector<std::string> tokenize(std::string_view line,
                                  const TokenizerConfig& config = {});

// True if `text` is well-formed UTF-8.
bool is_valid_utf8(std::string_view text);

}  // namespace lexdiv

#endif  // LEXDIV_TOKENIZER_HPP_
