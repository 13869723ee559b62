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

#ifndef LEXDIV_SPLIT_HPP_
#define LEXDIV_SPLIT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lexdiv/corpus.hpp"

namespace lexdiv {

struct SplitSpec {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t dev_size = 0;
  std::uint64_t seed = 0;
};

struct SplitResult {
  ParallelCorpus train;
  ParallelCorpus test;
  ParallelCorpus dev;
};

// Shuffles the aligned pairs with a deterministic seeded permutation and
// assigns them to train/test/dev in that order. Pairs where either side is
// empty are excluded before shuffling. Throws SizeError when the requested
// sizes exceed the available pair count.
SplitResult split_parallel(const ParallelCorpus& pc, const SplitSpec& spec);

// Raw (untokenized) line pairs, for file-level splitting that must preserve
// the original text byte-for-byte.
struct RawPairs {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::size_t dropped_pairs = 0;  // pairs excluded because a side was empty
};

// Loads two aligned files as raw lines; filters pairs where either side is
// empty (whitespace-only counts as empty). Throws IoError on missing files
// or mismatched line counts, DecodeError on invalid UTF-8.
RawPairs load_raw_pairs(const std::filesystem::path& source_path,
                        const std::filesystem::path& target_path);

struct RawSplitResult {
  RawPairs train;
  RawPairs test;
  RawPairs dev;
};

RawSplitResult split_raw_pairs(const RawPairs& pairs, const SplitSpec& spec);

}  // namespace lexdiv

#endif  // LEXDIV_SPLIT_HPP_
