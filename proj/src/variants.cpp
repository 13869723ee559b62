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

#include "lexdiv/variants.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "lexdiv/errors.hpp"

namespace lexdiv {

VariantProfile variant_profile(std::span<const Corpus> corpora,
                               const VariantSet& vs) {
  if (vs.variants.empty()) {
    throw DomainError("variant set '" + vs.source_word + "' has no variants");
  }
  VariantProfile profile;
  profile.source_word = vs.source_word;
  const std::unordered_set<std::string> wanted(vs.variants.begin(),
                                               vs.variants.end());
  for (const Corpus& corpus : corpora) {
    std::map<std::string, VariantCell> cells;
    for (const std::string& variant : vs.variants) {
      cells[variant] = VariantCell{};
    }
    std::uint64_t total = 0;
    for (const Sentence& sentence : corpus.sentences) {
      for (const std::string& token : sentence) {
        if (wanted.contains(token)) {
          cells[token].count += 1;
          ++total;
        }
      }
    }
    if (total > 0) {
      for (auto& [variant, cell] : cells) {
        cell.relative_frequency =
            static_cast<double>(cell.count) / static_cast<double>(total);
      }
    }
    profile.per_corpus[corpus.label] = std::move(cells);
  }
  return profile;
}

std::vector<VariantSet> load_variant_sets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open variant set file: " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("malformed variant set JSON in " + path.string() + ": " +
                e.what());
  }
  if (!doc.is_array()) {
    throw Error("variant set file must contain a JSON array: " +
                path.string());
  }
  std::vector<VariantSet> sets;
  for (const auto& item : doc) {
    VariantSet vs;
    try {
      vs.source_word = item.at("source_word").get<std::string>();
      vs.variants = item.at("variants").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error("invalid variant set entry in " + path.string() + ": " +
                  e.what());
    }
    if (vs.variants.empty()) {
      throw Error("variant set '" + vs.source_word + "' in " + path.string() +
                  " has no variants");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& v : vs.variants) {
      if (!seen.insert(v).second) {
        throw Error("variant set '" + vs.source_word + "' in " +
                    path.string() + " repeats variant '" + v + "'");
      }
    }
    sets.push_back(std::move(vs));
  }
  return sets;
}

}  // namespace lexdiv
