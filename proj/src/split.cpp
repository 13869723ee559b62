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

#include "lexdiv/split.hpp"

#include <string>

#include "lexdiv/errors.hpp"
#include "lexdiv/io.hpp"
#include "lexdiv/rng.hpp"

namespace lexdiv {

namespace {

void check_sizes(const SplitSpec& spec, std::size_t available) {
  const std::size_t requested =
      spec.train_size + spec.test_size + spec.dev_size;
  if (requested > available) {
    throw SizeError("requested split sizes total " + std::to_string(requested) +
                        " but only " + std::to_string(available) +
                        " non-empty aligned pairs are available",
                    available);
  }
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

}  // namespace

SplitResult split_parallel(const ParallelCorpus& pc, const SplitSpec& spec) {
  if (pc.source.size() != pc.target.size()) {
    throw Error("parallel corpus sides have different sentence counts");
  }
  // Exclude pairs with an empty side before shuffling so sizes are exact.
  std::vector<std::size_t> kept;
  kept.reserve(pc.source.size());
  for (std::size_t i = 0; i < pc.source.size(); ++i) {
    if (!pc.source.sentences[i].empty() && !pc.target.sentences[i].empty()) {
      kept.push_back(i);
    }
  }
  check_sizes(spec, kept.size());

  const std::vector<std::size_t> perm =
      seeded_permutation(kept.size(), spec.seed);

  auto take = [&](std::size_t begin, std::size_t count, const char* tag) {
    std::vector<Sentence> src, trg;
    src.reserve(count);
    trg.reserve(count);
    for (std::size_t k = begin; k < begin + count; ++k) {
      const std::size_t idx = kept[perm[k]];
      src.push_back(pc.source.sentences[idx]);
      trg.push_back(pc.target.sentences[idx]);
    }
    ParallelCorpus out;
    out.source = make_corpus(std::move(src), pc.source.label + "." + tag);
    out.target = make_corpus(std::move(trg), pc.target.label + "." + tag);
    return out;
  };

  SplitResult result;
  result.train = take(0, spec.train_size, "train");
  result.test = take(spec.train_size, spec.test_size, "test");
  result.dev = take(spec.train_size + spec.test_size, spec.dev_size, "dev");
  return result;
}

RawPairs load_raw_pairs(const std::filesystem::path& source_path,
                        const std::filesystem::path& target_path) {
  LineReader src_reader(source_path);
  LineReader trg_reader(target_path);
  RawPairs pairs;
  std::string src_line, trg_line;
  while (true) {
    const bool has_src = src_reader.next(src_line);
    const bool has_trg = trg_reader.next(trg_line);
    if (has_src != has_trg) {
      throw IoError("aligned files have different line counts: " +
                    source_path.string() + " vs " + target_path.string());
    }
    if (!has_src) break;
    if (is_blank(src_line) || is_blank(trg_line)) {
      ++pairs.dropped_pairs;
      continue;
    }
    pairs.source.push_back(src_line);
    pairs.target.push_back(trg_line);
  }
  return pairs;
}

RawSplitResult split_raw_pairs(const RawPairs& pairs, const SplitSpec& spec) {
  check_sizes(spec, pairs.source.size());
  const std::vector<std::size_t> perm =
      seeded_permutation(pairs.source.size(), spec.seed);

  auto take = [&](std::size_t begin, std::size_t count) {
    RawPairs out;
    out.source.reserve(count);
    out.target.reserve(count);
    for (std::size_t k = begin; k < begin + count; ++k) {
      out.source.push_back(pairs.source[perm[k]]);
      out.target.push_back(pairs.target[perm[k]]);
    }
    return out;
  };

  RawSplitResult result;
  result.train = take(0, spec.train_size);
  result.test = take(spec.train_size, spec.test_size);
  result.dev = take(spec.train_size + spec.test_size, spec.dev_size);
  return result;
}

}  // namespace lexdiv
