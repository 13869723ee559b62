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

#ifndef LEXDIV_RNG_HPP_
#define LEXDIV_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace lexdiv {

// Identifier of the shuffle scheme, recorded in output manifests so splits
// stay reproducible across releases.
inline constexpr const char* kShuffleAlgorithmId = "mt19937_64-fisher-yates-v1";

// Unbiased draw from [0, bound) by rejection sampling. Bit-portable, unlike
// std::uniform_int_distribution whose output is implementation-defined.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates permutation of {0, ..., n-1} seeded deterministically.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

// Derives independent substream seeds from a root seed (splitmix64 steps),
// so parallel consumers stay deterministic per stream index.
std::uint64_t substream_seed(std::uint64_t root_seed, std::uint64_t stream);

}  // namespace lexdiv

#endif  // LEXDIV_RNG_HPP_
