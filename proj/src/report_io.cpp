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

#include "lexdiv/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>

#include "lexdiv/rng.hpp"

namespace lexdiv {

std::string RunManifest::current_timestamp() {
  std::time_t t;
  // SOURCE_DATE_EPOCH pins the timestamp for reproducible reruns.
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json to_json(const TokenizerConfig& config) {
  return {{"lowercase", config.lowercase},
          {"strip_punctuation", config.strip_punctuation},
          {"split_rule", "whitespace"}};
}

nlohmann::json to_json(const RunManifest& manifest) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& input : manifest.inputs) {
    inputs.push_back({{"label", input.label},
                      {"path", input.path},
                      {"digest_fnv1a64", input.digest}});
  }
  return {{"tool_version", kToolVersion},
          {"command", manifest.command},
          {"tokenizer", to_json(manifest.tokenizer)},
          {"shuffle_algorithm", kShuffleAlgorithmId},
          {"inputs", inputs},
          {"params", manifest.params},
          {"created_at", manifest.created_at}};
}

nlohmann::json to_json(const DiversityReport& report,
                       const std::string& label) {
  nlohmann::json j = {{"label", label},
                      {"ttr", report.ttr},
                      {"ttr_scaled", report.ttr_scaled},
                      {"mtld_threshold", report.mtld_threshold},
                      {"token_count", report.token_count},
                      {"type_count", report.type_count}};
  j["yules_k"] = report.yules_k ? nlohmann::json(*report.yules_k)
                                : nlohmann::json(nullptr);
  j["yules_i"] = report.yules_i ? nlohmann::json(*report.yules_i)
                                : nlohmann::json(nullptr);
  if (!report.yules_undefined_reason.empty()) {
    j["yules_undefined_reason"] = report.yules_undefined_reason;
  }
  if (report.mtld) {
    j["mtld"] = report.mtld->mtld;
    j["mtld_forward"] = report.mtld->forward;
    j["mtld_backward"] = report.mtld->backward;
  } else {
    j["mtld"] = nullptr;
    j["mtld_undefined_reason"] = report.mtld_undefined_reason;
  }
  return j;
}

nlohmann::json to_json(const BiasClassification& bc, const std::string& label) {
  nlohmann::json counts, counts_normalized, diffs;
  for (int i = 0; i < kBiasClassCount; ++i) {
    counts[kBiasClassNames[i]] = bc.counts[i];
    counts_normalized[kBiasClassNames[i]] =
        static_cast<double>(bc.counts[i]) /
        static_cast<double>(bc.ht_type_count);
    diffs[kBiasClassNames[i]] = bc.acc_diffs[i];
  }
  return {{"label", label},
          {"counts", counts},
          {"counts_normalized", counts_normalized},
          {"acc_diffs", diffs},
          {"novel_count", bc.novel_count},
          {"novel_mass", bc.novel_mass},
          {"threshold", bc.threshold},
          {"diff_scale", bc.diff_scale},
          {"ht_type_count", bc.ht_type_count}};
}

nlohmann::json to_json(const BootstrapResult& result) {
  return {{"observed_delta", result.observed_delta},
          {"p_value", result.p_value},
          {"ci_low", result.ci_low},
          {"ci_high", result.ci_high},
          {"iterations", result.iterations},
          {"seed", result.seed},
          {"degenerate_samples", result.degenerate_samples},
          {"low_iteration_warning", result.low_iteration_warning},
          {"p_value_method", result.p_value_method},
          {"significant_at_0.05", result.significant()}};
}

nlohmann::json to_json(const VariantProfile& profile) {
  nlohmann::json per_corpus;
  for (const auto& [corpus_label, cells] : profile.per_corpus) {
    nlohmann::json corpus_json;
    for (const auto& [variant, cell] : cells) {
      corpus_json[variant] = {{"count", cell.count},
                              {"relative_frequency", cell.relative_frequency}};
    }
    per_corpus[corpus_label] = corpus_json;
  }
  return {{"source_word", profile.source_word}, {"per_corpus", per_corpus}};
}

std::string format_metric(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string escaped = "\"";
  for (char c : field) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

std::string diversity_csv_header() {
  // Column order follows the report tables: Yule's I, TTR x1000, MTLD.
  return "label,yules_i,ttr_scaled,mtld";
}

std::string diversity_csv_row(const DiversityReport& report,
                              const std::string& label) {
  std::string row = csv_escape(label);
  row += ',';
  row += report.yules_i ? format_metric(*report.yules_i) : "";
  row += ',';
  row += format_metric(report.ttr_scaled);
  row += ',';
  row += report.mtld ? format_metric(report.mtld->mtld) : "";
  return row;
}

std::string freqbias_csv_header() {
  return "label,kind,++,+-,-+,--,+0,-0,novel_count,novel_mass,threshold,"
         "diff_scale";
}

std::vector<std::string> freqbias_csv_rows(const BiasClassification& bc,
                                           const std::string& label) {
  const std::string prefix = csv_escape(label);
  const std::string suffix = "," + std::to_string(bc.novel_count) + "," +
                             format_metric(bc.novel_mass) + "," +
                             format_metric(bc.threshold) + "," +
                             format_metric(bc.diff_scale);
  std::string counts = prefix + ",counts";
  std::string normalized = prefix + ",counts_normalized";
  std::string diffs = prefix + ",acc_diff";
  for (int i = 0; i < kBiasClassCount; ++i) {
    counts += "," + std::to_string(bc.counts[i]);
    normalized += "," + format_metric(static_cast<double>(bc.counts[i]) /
                                      static_cast<double>(bc.ht_type_count));
    diffs += "," + format_metric(bc.acc_diffs[i]);
  }
  return {counts + suffix, normalized + suffix, diffs + suffix};
}

std::string variants_csv_header() {
  return "source_word,variant,corpus_label,count,relative_frequency";
}

std::vector<std::string> variants_csv_rows(const VariantProfile& profile) {
  std::vector<std::string> rows;
  for (const auto& [corpus_label, cells] : profile.per_corpus) {
    for (const auto& [variant, cell] : cells) {
      rows.push_back(csv_escape(profile.source_word) + "," +
                     csv_escape(variant) + "," + csv_escape(corpus_label) +
                     "," + std::to_string(cell.count) + "," +
                     format_metric(cell.relative_frequency));
    }
  }
  return rows;
}

}  // namespace lexdiv
