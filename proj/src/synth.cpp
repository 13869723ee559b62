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

#include "lexdiv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lexdiv/errors.hpp"
#include "lexdiv/rng.hpp"

namespace lexdiv {

namespace {

std::string rank_word(std::size_t rank) {
  std::string digits = std::to_string(rank);
  return "w" + std::string(6 - std::min<std::size_t>(6, digits.size()), '0') +
         digits;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SynthPair generate_ht_mt(const SynthConfig& config) {
  if (config.vocab_size == 0 || config.sentences == 0 ||
      config.group_size == 0 ||
      config.min_sentence_len == 0 ||
      config.max_sentence_len < config.min_sentence_len) {
    throw DomainError("invalid synthetic generator configuration");
  }

  // Cumulative Zipf weights over ranks 1..V.
  std::vector<double> cumulative(config.vocab_size);
  double total = 0.0;
  for (std::size_t r = 0; r < config.vocab_size; ++r) {
    total += std::pow(static_cast<double>(r + 1), -config.zipf_exponent);
    cumulative[r] = total;
  }

  std::mt19937_64 rng(config.seed);
  std::vector<Sentence> ht_sentences, mt_sentences;
  ht_sentences.reserve(config.sentences);
  mt_sentences.reserve(config.sentences);
  const std::size_t len_range =
      config.max_sentence_len - config.min_sentence_len + 1;

  for (std::size_t s = 0; s < config.sentences; ++s) {
    const std::size_t len =
        config.min_sentence_len +
        static_cast<std::size_t>(bounded_uniform(rng, len_range));
    Sentence ht_sentence, mt_sentence;
    ht_sentence.reserve(len);
    mt_sentence.reserve(len);
    for (std::size_t t = 0; t < len; ++t) {
      const double u = uniform_unit(rng) * total;
      const std::size_t rank = static_cast<std::size_t>(
          std::lower_bound(cumulative.begin(), cumulative.end(), u) -
          cumulative.begin());
      ht_sentence.push_back(rank_word(rank));
      // Greedy rewrite: every token becomes the most frequent member of its
      // variant group (ranks are frequency order, so the group minimum).
      mt_sentence.push_back(rank_word(rank - rank % config.group_size));
    }
    ht_sentences.push_back(std::move(ht_sentence));
    mt_sentences.push_back(std::move(mt_sentence));
  }

  SynthPair pair;
  pair.ht = make_corpus(std::move(ht_sentences), "synthetic-ht");
  pair.mt = make_corpus(std::move(mt_sentences), "synthetic-mt");

  for (std::size_t g = 0; g < config.planted_variant_sets; ++g) {
    const std::size_t head = g * config.group_size;
    if (head >= config.vocab_size) break;
    VariantSet vs;
    vs.source_word = "source-" + std::to_string(g);
    for (std::size_t k = 0;
         k < config.group_size && head + k < config.vocab_size; ++k) {
      vs.variants.push_back(rank_word(head + k));
    }
    pair.variant_sets.push_back(std::move(vs));
  }
  return pair;
}

}  // namespace lexdiv
