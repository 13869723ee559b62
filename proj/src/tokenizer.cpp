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

#include <cctype>

namespace lexdiv {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_ascii_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c);
}

std::string normalize(std::string_view raw, const TokenizerConfig& config) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  if (config.strip_punctuation) {
    while (begin < end && is_ascii_punct(raw[begin])) ++begin;
    while (end > begin && is_ascii_punct(raw[end - 1])) --end;
  }
  std::string token(raw.substr(begin, end - begin));
  if (config.lowercase) {
    for (char& c : token) {
      unsigned char uc = static_cast<unsigned char>(c);
      if (uc < 0x80) c = static_cast<char>(std::tolower(uc));
    }
  }
  return token;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view line,
                                  const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < n && !is_space(line[i])) ++i;
    if (i > start) {
      std::string token = normalize(line.substr(start, i - start), config);
      if (!token.empty()) tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = text[i];
    std::size_t len;
    unsigned int cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cont = text[i + k];
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range code points.
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

}  // namespace lexdiv
