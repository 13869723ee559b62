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

#ifndef LEXDIV_REPORT_IO_HPP_
#define LEXDIV_REPORT_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lexdiv/bootstrap.hpp"
#include "lexdiv/diversity.hpp"
#include "lexdiv/freqbias.hpp"
#include "lexdiv/tokenizer.hpp"
#include "lexdiv/variants.hpp"

namespace lexdiv {

inline constexpr const char* kToolVersion = "0.1.0";

// Everything needed to rerun an analysis byte-identically: tool version,
// tokenizer config, input digests, seeds and metric parameters. The
// timestamp honors SOURCE_DATE_EPOCH so pinned reruns reproduce exactly.
struct RunManifest {
  std::string command;
  TokenizerConfig tokenizer;
  struct Input {
    std::string label;
    std::string path;
    std::string digest;  // FNV-1a 64, hex
  };
  std::vector<Input> inputs;
  std::map<std::string, std::string> params;
  std::string created_at;  // ISO 8601 UTC

  static std::string current_timestamp();
};

nlohmann::json to_json(const RunManifest& manifest);
nlohmann::json to_json(const TokenizerConfig& config);
nlohmann::json to_json(const DiversityReport& report, const std::string& label);
nlohmann::json to_json(const BiasClassification& bc, const std::string& label);
nlohmann::json to_json(const BootstrapResult& result);
nlohmann::json to_json(const VariantProfile& profile);

// Metric values formatted with '.' decimal separator and 4 decimal places,
// matching report-table precision. JSON output keeps full precision.
std::string format_metric(double value);

// CSV rows; header + rows, RFC-style quoting of labels.
std::string diversity_csv_header();
std::string diversity_csv_row(const DiversityReport& report,
                              const std::string& label);
std::string freqbias_csv_header();
// kind is "counts", "counts_normalized" or "acc_diff".
std::vector<std::string> freqbias_csv_rows(const BiasClassification& bc,
                                           const std::string& label);
std::string variants_csv_header();
std::vector<std::string> variants_csv_rows(const VariantProfile& profile);

std::string csv_escape(const std::string& field);

}  // namespace lexdiv

#endif  // LEXDIV_REPORT_IO_HPP_
