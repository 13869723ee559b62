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

#ifndef LEXDIV_IO_HPP_
#define LEXDIV_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "lexdiv/corpus.hpp"
#include "lexdiv/diversity.hpp"
#include "lexdiv/vocab.hpp"

namespace lexdiv {

// Forward line reader over a UTF-8 text file. Strips the trailing '\r' of
// CRLF endings and validates UTF-8 per line (DecodeError carries the
// 1-based line number). Memory stays O(one line).
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);

  bool next(std::string& line);
  std::size_t line_number() const { return line_number_; }

 private:
  std::ifstream in_;
  std::filesystem::path path_;
  std::size_t line_number_ = 0;
};

// Reads lines in reverse file order by scanning fixed-size blocks from the
// end. Used for the backward MTLD pass so large corpora never have to be
// held in memory.
class ReverseLineReader {
 public:
  explicit ReverseLineReader(const std::filesystem::path& path);

  bool next(std::string& line);

 private:
  bool fill();

  std::ifstream in_;
  std::filesystem::path path_;
  std::uint64_t remaining_ = 0;   // bytes of file not yet consumed
  std::string pending_;           // partial line carried across blocks
  std::vector<std::string> lines_;  // current block, ready to pop
};

// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest_hex(const std::filesystem::path& path);

// Streaming analyses: single (or double, for MTLD) pass over the file with
// O(vocabulary + one sentence) memory.
VocabProfile streaming_vocab_profile(const std::filesystem::path& path,
                                     const TokenizerConfig& config = {});

DiversityReport streaming_diversity_report(
    const std::filesystem::path& path, const TokenizerConfig& config = {},
    double mtld_threshold = kDefaultMtldThreshold);

void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines);

}  // namespace lexdiv

#endif  // LEXDIV_IO_HPP_
