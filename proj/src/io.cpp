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

#include "lexdiv/io.hpp"

#include <algorithm>
#include <cstdio>

#include "lexdiv/errors.hpp"

namespace lexdiv {

namespace {

constexpr std::size_t kReverseBlockSize = 64 * 1024;

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

LineReader::LineReader(const std::filesystem::path& path)
    : in_(path, std::ios::binary), path_(path) {
  if (!in_) {
    throw IoError("cannot open file: " + path.string());
  }
}

bool LineReader::next(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_number_;
  strip_cr(line);
  if (!is_valid_utf8(line)) {
    throw DecodeError("invalid UTF-8 byte sequence in " + path_.string() +
                          " at line " + std::to_string(line_number_),
                      line_number_);
  }
  return true;
}

ReverseLineReader::ReverseLineReader(const std::filesystem::path& path)
    : in_(path, std::ios::binary), path_(path) {
  if (!in_) {
    throw IoError("cannot open file: " + path.string());
  }
  in_.seekg(0, std::ios::end);
  remaining_ = static_cast<std::uint64_t>(in_.tellg());
  if (remaining_ > 0) {
    // A trailing newline terminates the last line, it does not start one.
    in_.seekg(static_cast<std::streamoff>(remaining_ - 1));
    if (in_.get() == '\n') --remaining_;
  }
}

bool ReverseLineReader::fill() {
  if (remaining_ == 0) return false;
  const std::size_t block_size = static_cast<std::size_t>(
      std::min<std::uint64_t>(kReverseBlockSize, remaining_));
  std::string buf(block_size, '\0');
  in_.seekg(static_cast<std::streamoff>(remaining_ - block_size));
  in_.read(buf.data(), static_cast<std::streamsize>(block_size));
  if (!in_) {
    throw IoError("read failure in " + path_.string());
  }
  remaining_ -= block_size;
  buf += pending_;
  pending_.clear();

  // buf is contiguous file text whose right edge is a complete line end.
  // Everything after the first newline is a finished line; the piece before
  // it still continues leftwards into unread bytes (unless none remain).
  std::size_t start = 0;
  std::vector<std::string> segments;
  for (std::size_t i = 0; i < buf.size(); ++i) {
    if (buf[i] == '\n') {
      segments.push_back(buf.substr(start, i - start));
      start = i + 1;
    }
  }
  segments.push_back(buf.substr(start));
  if (remaining_ > 0) {
    if (segments.size() == 1) {
      // No newline in this block; the fragment keeps growing leftwards.
      pending_ = std::move(segments.front());
      return true;
    }
    pending_ = std::move(segments.front());
    segments.erase(segments.begin());
  }
  lines_ = std::move(segments);  // file order; popped from the back
  return true;
}

bool ReverseLineReader::next(std::string& line) {
  while (lines_.empty()) {
    if (!fill()) return false;
  }
  line = std::move(lines_.back());
  lines_.pop_back();
  strip_cr(line);
  return true;
}

std::string file_digest_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file for digest: " + path.string());
  }
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  char buffer[64 * 1024];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001B3ULL;
    }
    if (got < static_cast<std::streamsize>(sizeof(buffer))) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(hex);
}

VocabProfile streaming_vocab_profile(const std::filesystem::path& path,
                                     const TokenizerConfig& config) {
  LineReader reader(path);
  VocabAccumulator acc;
  std::string line;
  while (reader.next(line)) {
    acc.add_sentence(tokenize(line, config));
  }
  return acc.finish();
}

DiversityReport streaming_diversity_report(const std::filesystem::path& path,
                                           const TokenizerConfig& config,
                                           double mtld_threshold) {
  std::unordered_map<std::string, std::uint64_t> counts;
  MtldPass forward(mtld_threshold);
  {
    LineReader reader(path);
    std::string line;
    while (reader.next(line)) {
      for (const std::string& token : tokenize(line, config)) {
        counts[token] += 1;
        forward.add(token);
      }
    }
  }
  if (counts.empty()) {
    throw EmptyCorpusError("no tokens in " + path.string());
  }
  // Second pass in reverse file order for the backward MTLD stream; the
  // forward pass already validated the encoding.
  MtldPass backward(mtld_threshold);
  {
    ReverseLineReader reader(path);
    std::string line;
    while (reader.next(line)) {
      const std::vector<std::string> tokens = tokenize(line, config);
      for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        backward.add(*it);
      }
    }
  }
  return diversity_report_from_parts(spectrum_from_counts(counts), forward,
                                     backward, mtld_threshold);
}

void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path.string());
  }
  for (const std::string& line : lines) {
    out << line << '\n';
  }
  if (!out) {
    throw IoError("write failure: " + path.string());
  }
}

}  // namespace lexdiv
