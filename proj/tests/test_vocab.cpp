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

#include "lexdiv/vocab.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lexdiv/errors.hpp"

using namespace lexdiv;
using lexdiv::testing::corpus_of;
using lexdiv::testing::random_corpus;

namespace {

double probability_mass(const VocabProfile& profile) {
  double total = 0.0;
  for (const auto& [type, entry] : profile.entries) total += entry.probability;
  return total;
}

}  // namespace

TEST_CASE("hand-computed length weighting") {
  // [["a","b"], ["a"]]: a = 0.5 + 1 = 1.5, b = 0.5; probabilities 0.75/0.25.
  VocabProfile profile = build_vocab_profile(corpus_of({{"a", "b"}, {"a"}}));
  CHECK(profile.type_count == 2);
  CHECK(profile.token_count == 3);
  CHECK(profile.entries.at("a").raw_count == 2);
  CHECK(profile.entries.at("a").length_weighted == doctest::Approx(1.5));
  CHECK(profile.entries.at("b").length_weighted == doctest::Approx(0.5));
  CHECK(profile.entries.at("a").probability == doctest::Approx(0.75));
  CHECK(profile.entries.at("b").probability == doctest::Approx(0.25));
}

TEST_CASE("single token corpus") {
  VocabProfile profile = build_vocab_profile(corpus_of({{"x"}}));
  CHECK(profile.entries.at("x").probability == doctest::Approx(1.0));
}

TEST_CASE("empty corpus is an error") {
  Corpus empty;
  CHECK_THROWS_AS(build_vocab_profile(empty), EmptyCorpusError);
}

TEST_CASE("probability mass is 1 on random corpora") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus corpus = random_corpus(rng, 200, 20);
    VocabProfile profile = build_vocab_profile(corpus);
    CHECK(std::abs(probability_mass(profile) - 1.0) < 1e-9);
    // Per-occurrence weighting: total length-weight equals sentence count.
    double weight = 0.0;
    for (const auto& [type, entry] : profile.entries) {
      weight += entry.length_weighted;
    }
    CHECK(weight == doctest::Approx(static_cast<double>(corpus.size())));
  }
}

TEST_CASE("sentence-order permutation invariance") {
  std::mt19937_64 rng(12);
  Corpus corpus = random_corpus(rng, 150, 10);
  auto shuffled_sentences = corpus.sentences;
  std::shuffle(shuffled_sentences.begin(), shuffled_sentences.end(), rng);
  VocabProfile a = build_vocab_profile(corpus);
  VocabProfile b = build_vocab_profile(corpus_of(std::move(shuffled_sentences)));
  REQUIRE(a.type_count == b.type_count);
  for (const auto& [type, entry] : a.entries) {
    CHECK(b.entries.at(type).raw_count == entry.raw_count);
    CHECK(b.entries.at(type).probability ==
          doctest::Approx(entry.probability).epsilon(1e-12));
  }
}

TEST_CASE("token-renaming equivariance") {
  std::mt19937_64 rng(13);
  Corpus corpus = random_corpus(rng, 150, 10);
  auto renamed_sentences = corpus.sentences;
  for (auto& sentence : renamed_sentences) {
    for (auto& token : sentence) token = "X_" + token;  // a bijection
  }
  VocabProfile a = build_vocab_profile(corpus);
  VocabProfile b = build_vocab_profile(corpus_of(std::move(renamed_sentences)));
  REQUIRE(a.type_count == b.type_count);
  for (const auto& [type, entry] : a.entries) {
    const VocabEntry& mapped = b.entries.at("X_" + type);
    CHECK(mapped.raw_count == entry.raw_count);
    CHECK(mapped.length_weighted == doctest::Approx(entry.length_weighted));
    CHECK(mapped.probability == doctest::Approx(entry.probability));
  }
}

TEST_CASE("vocab_size") {
  CHECK(vocab_size(corpus_of({{"a", "b"}, {"a"}})) == 2);
  CHECK(vocab_size(Corpus{}) == 0);
}
