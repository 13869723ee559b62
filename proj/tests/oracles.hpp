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
//
// Brute-force reference implementations written directly from the metric
// definitions. Deliberately independent of the library code paths: naive
// containers, naive scans, no shared helpers.

#ifndef LEXDIV_TESTS_ORACLES_HPP_
#define LEXDIV_TESTS_ORACLES_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lexdiv::testing {

inline std::map<std::string, int> oracle_counts(
    const std::vector<std::string>& tokens) {
  std::map<std::string, int> counts;
  for (const auto& t : tokens) counts[t] += 1;
  return counts;
}

inline double oracle_ttr(const std::vector<std::string>& tokens) {
  std::set<std::string> types(tokens.begin(), tokens.end());
  return static_cast<double>(types.size()) / static_cast<double>(tokens.size());
}

// V(m) = number of types occurring exactly m times.
inline std::map<int, int> oracle_spectrum(
    const std::vector<std::string>& tokens) {
  std::map<int, int> spectrum;
  for (const auto& [type, count] : oracle_counts(tokens)) {
    spectrum[count] += 1;
  }
  return spectrum;
}

inline double oracle_yules_k(const std::vector<std::string>& tokens) {
  double m1 = 0.0, m2 = 0.0;
  for (const auto& [m, v] : oracle_spectrum(tokens)) {
    m1 += static_cast<double>(m) * v;
    m2 += static_cast<double>(m) * m * v;
  }
  return 1e4 * (m2 - m1) / (m1 * m1);
}

// Empty optional when K = 0 (all types singletons).
inline std::optional<double> oracle_yules_i(
    const std::vector<std::string>& tokens) {
  double m1 = 0.0, m2 = 0.0;
  for (const auto& [m, v] : oracle_spectrum(tokens)) {
    m1 += static_cast<double>(m) * v;
    m2 += static_cast<double>(m) * m * v;
  }
  if (m2 == m1) return std::nullopt;
  return m1 * m1 / (m2 - m1);
}

// One directional factor count; distinct types of the current segment are
// recounted from scratch at every step.
inline double oracle_mtld_factors(const std::vector<std::string>& tokens,
                                  double threshold) {
  double factors = 0.0;
  std::vector<std::string> segment;
  for (const auto& token : tokens) {
    segment.push_back(token);
    std::set<std::string> distinct(segment.begin(), segment.end());
    double running = static_cast<double>(distinct.size()) /
                     static_cast<double>(segment.size());
    if (running < threshold) {
      factors += 1.0;
      segment.clear();
    }
  }
  if (!segment.empty()) {
    std::set<std::string> distinct(segment.begin(), segment.end());
    double running = static_cast<double>(distinct.size()) /
                     static_cast<double>(segment.size());
    factors += (1.0 - running) / (1.0 - threshold);
  }
  return factors;
}

// Empty optional in the degenerate zero-factor case.
inline std::optional<double> oracle_mtld(const std::vector<std::string>& tokens,
                                         double threshold) {
  const double fwd = oracle_mtld_factors(tokens, threshold);
  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  const double bwd = oracle_mtld_factors(reversed, threshold);
  if (fwd == 0.0 || bwd == 0.0) return std::nullopt;
  const double n = static_cast<double>(tokens.size());
  return 0.5 * (n / fwd + n / bwd);
}

// Length-normalized probability of every type, computed by direct loops
// over the sentences.
inline std::map<std::string, double> oracle_probabilities(
    const std::vector<std::vector<std::string>>& sentences) {
  std::map<std::string, double> weighted;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence) {
      weighted[token] += 1.0 / static_cast<double>(sentence.size());
    }
  }
  double total = 0.0;
  for (const auto& [type, w] : weighted) total += w;
  std::map<std::string, double> probs;
  for (const auto& [type, w] : weighted) probs[type] = w / total;
  return probs;
}

// Applies the six-class definitions literally over the union vocabulary.
// Returns class name ("++", "+-", "-+", "--", "+0", "-0") per HT type plus
// the novel MT-only types.
struct OracleBias {
  std::map<std::string, std::string> ht_classes;
  std::set<std::string> novel;
  double threshold = 0.0;
};

inline OracleBias oracle_bias(
    const std::vector<std::vector<std::string>>& ht_sentences,
    const std::vector<std::vector<std::string>>& mt_sentences) {
  const auto p_ht = oracle_probabilities(ht_sentences);
  const auto p_mt = oracle_probabilities(mt_sentences);

  OracleBias result;
  // The probabilities sum to 1 by construction, so the mean normalized
  // frequency is exactly 1/|V|; computing it directly avoids summation-order
  // rounding noise at tie points.
  const double mean = 1.0 / static_cast<double>(p_ht.size());
  result.threshold = mean;

  std::set<std::string> union_vocab;
  for (const auto& [t, p] : p_ht) union_vocab.insert(t);
  for (const auto& [t, p] : p_mt) union_vocab.insert(t);

  for (const auto& type : union_vocab) {
    const bool in_ht = p_ht.count(type) > 0;
    const bool in_mt = p_mt.count(type) > 0;
    if (!in_ht) {
      result.novel.insert(type);
      continue;
    }
    const double ht = p_ht.at(type);
    const double mt = in_mt ? p_mt.at(type) : 0.0;
    std::string cls;
    cls += ht > mean ? '+' : '-';
    if (mt == 0.0) {
      cls += '0';
    } else if (mt > ht) {
      cls += '+';
    } else {
      cls += '-';
    }
    result.ht_classes[type] = cls;
  }
  return result;
}

}  // namespace lexdiv::testing

#endif  // LEXDIV_TESTS_ORACLES_HPP_
