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
// Command-line front end: split / vocab / ld / freqbias / signif /
// variants / report / synth. Exit codes: 0 success, 1 partial failure,
// 2 usage or input error; signif additionally returns 3 when the
// difference is significant at 0.05.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexdiv/bootstrap.hpp"
#include "lexdiv/corpus.hpp"
#include "lexdiv/diversity.hpp"
#include "lexdiv/errors.hpp"
#include "lexdiv/freqbias.hpp"
#include "lexdiv/io.hpp"
#include "lexdiv/report_io.hpp"
#include "lexdiv/rng.hpp"
#include "lexdiv/split.hpp"
#include "lexdiv/synth.hpp"
#include "lexdiv/variants.hpp"
#include "lexdiv/vocab.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitError = 2;
constexpr int kExitSignificant = 3;

struct CommonOpts {
  bool lowercase = false;
  bool strip_punct = false;
  std::string format = "csv";
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_format = true) {
  cmd->add_flag("--lowercase", opts->lowercase, "Lowercase ASCII letters");
  cmd->add_flag("--strip-punct", opts->strip_punct,
                "Strip leading/trailing ASCII punctuation from tokens");
  if (with_format) {
    cmd->add_option("--format", opts->format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", opts->output,
                    "Output file (default: stdout)");
  }
}

lexdiv::TokenizerConfig tokenizer_of(const CommonOpts& opts) {
  return {.lowercase = opts.lowercase, .strip_punctuation = opts.strip_punct};
}

struct LabeledInput {
  std::string label;
  std::string path;
};

// Pairs positional files with --label flags; unlabeled files fall back to
// their filename stem.
std::vector<LabeledInput> pair_labels(const std::vector<std::string>& files,
                                      const std::vector<std::string>& labels) {
  if (labels.size() > files.size()) {
    throw lexdiv::Error("more --label flags than input files");
  }
  std::vector<LabeledInput> inputs;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string label =
        i < labels.size() ? labels[i] : fs::path(files[i]).stem().string();
    inputs.push_back({std::move(label), files[i]});
  }
  return inputs;
}

void write_text(const std::string& path_or_empty, const std::string& text) {
  if (path_or_empty.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path_or_empty, std::ios::binary);
  if (!out) {
    throw lexdiv::IoError("cannot open output file: " + path_or_empty);
  }
  out << text;
}

lexdiv::RunManifest make_manifest(const std::string& command,
                                  const lexdiv::TokenizerConfig& tokenizer,
                                  const std::vector<LabeledInput>& inputs) {
  lexdiv::RunManifest manifest;
  manifest.command = command;
  manifest.tokenizer = tokenizer;
  for (const auto& input : inputs) {
    manifest.inputs.push_back(
        {input.label, input.path, lexdiv::file_digest_hex(input.path)});
  }
  manifest.created_at = lexdiv::RunManifest::current_timestamp();
  return manifest;
}

// JSON reports embed the manifest; CSV reports written to a file get a
// sibling <file>.manifest.json instead.
void emit_report(const CommonOpts& opts, json report_json,
                 const std::string& csv_text,
                 const lexdiv::RunManifest& manifest) {
  if (opts.format == "json") {
    report_json["manifest"] = lexdiv::to_json(manifest);
    write_text(opts.output, report_json.dump(2) + "\n");
  } else {
    write_text(opts.output, csv_text);
    if (!opts.output.empty()) {
      write_text(opts.output + ".manifest.json",
                 lexdiv::to_json(manifest).dump(2) + "\n");
    }
  }
}

// ---------------------------------------------------------------- split --

struct SplitOpts {
  std::string src, trg, out_prefix = "split";
  std::size_t train = 0, test = 0, dev = 0;
  std::uint64_t seed = 0;
};

int run_split(const SplitOpts& opts) {
  lexdiv::RawPairs pairs = lexdiv::load_raw_pairs(opts.src, opts.trg);
  lexdiv::SplitSpec spec{opts.train, opts.test, opts.dev, opts.seed};
  lexdiv::RawSplitResult split = lexdiv::split_raw_pairs(pairs, spec);

  const std::string prefix = opts.out_prefix;
  lexdiv::write_lines(prefix + ".train.src", split.train.source);
  lexdiv::write_lines(prefix + ".train.trg", split.train.target);
  lexdiv::write_lines(prefix + ".test.src", split.test.source);
  lexdiv::write_lines(prefix + ".test.trg", split.test.target);
  lexdiv::write_lines(prefix + ".dev.src", split.dev.source);
  lexdiv::write_lines(prefix + ".dev.trg", split.dev.target);

  lexdiv::RunManifest manifest =
      make_manifest("split", {}, {{"source", opts.src}, {"target", opts.trg}});
  manifest.params["seed"] = std::to_string(opts.seed);
  manifest.params["train_size"] = std::to_string(opts.train);
  manifest.params["test_size"] = std::to_string(opts.test);
  manifest.params["dev_size"] = std::to_string(opts.dev);
  manifest.params["dropped_pairs"] = std::to_string(pairs.dropped_pairs);
  write_text(prefix + ".manifest.json",
             lexdiv::to_json(manifest).dump(2) + "\n");

  std::cout << "split\ttrain\ttest\tdev\tdropped\n"
            << "pairs\t" << opts.train << "\t" << opts.test << "\t" << opts.dev
            << "\t" << pairs.dropped_pairs << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- vocab --

int run_vocab(const CommonOpts& common,
              const std::vector<LabeledInput>& inputs) {
  const lexdiv::TokenizerConfig tokenizer = tokenizer_of(common);
  json rows = json::array();
  std::string csv = "label,type_count,token_count\n";
  for (const auto& input : inputs) {
    lexdiv::VocabProfile profile =
        lexdiv::streaming_vocab_profile(input.path, tokenizer);
    rows.push_back({{"label", input.label},
                    {"type_count", profile.type_count},
                    {"token_count", profile.token_count}});
    csv += lexdiv::csv_escape(input.label) + "," +
           std::to_string(profile.type_count) + "," +
           std::to_string(profile.token_count) + "\n";
  }
  emit_report(common, json{{"vocab", rows}}, csv,
              make_manifest("vocab", tokenizer, inputs));
  return kExitOk;
}

// ------------------------------------------------------------------- ld --

int run_ld(const CommonOpts& common, const std::vector<LabeledInput>& inputs,
           double mtld_threshold) {
  const lexdiv::TokenizerConfig tokenizer = tokenizer_of(common);
  json rows = json::array();
  std::string csv = lexdiv::diversity_csv_header() + "\n";
  for (const auto& input : inputs) {
    lexdiv::DiversityReport report =
        lexdiv::streaming_diversity_report(input.path, tokenizer,
                                           mtld_threshold);
    rows.push_back(lexdiv::to_json(report, input.label));
    csv += lexdiv::diversity_csv_row(report, input.label) + "\n";
  }
  lexdiv::RunManifest manifest = make_manifest("ld", tokenizer, inputs);
  manifest.params["mtld_threshold"] = lexdiv::format_metric(mtld_threshold);
  emit_report(common, json{{"diversity", rows}}, csv, manifest);
  return kExitOk;
}

// ------------------------------------------------------------- freqbias --

int run_freqbias(const CommonOpts& common, const LabeledInput& reference,
                 const std::vector<LabeledInput>& systems, double diff_scale) {
  const lexdiv::TokenizerConfig tokenizer = tokenizer_of(common);
  const lexdiv::VocabProfile ht =
      lexdiv::streaming_vocab_profile(reference.path, tokenizer);
  lexdiv::BiasClassConfig config;
  config.diff_scale = diff_scale;

  json rows = json::array();
  std::string csv = lexdiv::freqbias_csv_header() + "\n";
  for (const auto& system : systems) {
    lexdiv::VocabProfile mt =
        lexdiv::streaming_vocab_profile(system.path, tokenizer);
    lexdiv::BiasClassification bc = lexdiv::classify_corpora(ht, mt, config);
    rows.push_back(lexdiv::to_json(bc, system.label));
    for (const std::string& row : lexdiv::freqbias_csv_rows(bc, system.label)) {
      csv += row + "\n";
    }
  }
  std::vector<LabeledInput> all_inputs = {reference};
  all_inputs.insert(all_inputs.end(), systems.begin(), systems.end());
  lexdiv::RunManifest manifest =
      make_manifest("freqbias", tokenizer, all_inputs);
  manifest.params["diff_scale"] = lexdiv::format_metric(diff_scale);
  manifest.params["threshold_rule"] = "ht_mean";
  emit_report(common, json{{"freqbias", rows}}, csv, manifest);
  return kExitOk;
}

// --------------------------------------------------------------- signif --

int run_signif(const CommonOpts& common, const std::string& path_a,
               const std::string& path_b, const std::string& metric,
               std::uint32_t iterations, std::uint64_t seed,
               double mtld_threshold) {
  const lexdiv::TokenizerConfig tokenizer = tokenizer_of(common);
  lexdiv::BootstrapConfig config;
  config.iterations = iterations;
  config.seed = seed;
  config.mtld_threshold = mtld_threshold;
  if (metric == "ttr") {
    config.metric = lexdiv::LdMetric::Ttr;
  } else if (metric == "yules_i") {
    config.metric = lexdiv::LdMetric::YulesI;
  } else {
    config.metric = lexdiv::LdMetric::Mtld;
  }

  const lexdiv::Corpus a = lexdiv::load_corpus(path_a, tokenizer, "a");
  const lexdiv::Corpus b = lexdiv::load_corpus(path_b, tokenizer, "b");
  const lexdiv::BootstrapResult result =
      lexdiv::bootstrap_compare(a, b, config);
  if (result.low_iteration_warning) {
    std::cerr << "warning: fewer than " << lexdiv::kMinReliableIterations
              << " iterations; p-value is unreliable\n";
  }

  json out = lexdiv::to_json(result);
  out["metric"] = lexdiv::ld_metric_name(config.metric);
  out["status"] = result.significant() ? "significant" : "not_significant";
  lexdiv::RunManifest manifest = make_manifest(
      "signif", tokenizer, {{"a", path_a}, {"b", path_b}});
  manifest.params["metric"] = lexdiv::ld_metric_name(config.metric);
  manifest.params["iterations"] = std::to_string(iterations);
  manifest.params["seed"] = std::to_string(seed);
  out["manifest"] = lexdiv::to_json(manifest);
  write_text(common.output, out.dump(2) + "\n");
  return result.significant() ? kExitSignificant : kExitOk;
}

// ------------------------------------------------------------- variants --

int run_variants(const CommonOpts& common, const std::string& sets_path,
                 const std::vector<LabeledInput>& inputs) {
  const lexdiv::TokenizerConfig tokenizer = tokenizer_of(common);
  const std::vector<lexdiv::VariantSet> sets =
      lexdiv::load_variant_sets(sets_path);
  std::vector<lexdiv::Corpus> corpora;
  for (const auto& input : inputs) {
    corpora.push_back(lexdiv::load_corpus(input.path, tokenizer, input.label));
  }

  json profiles = json::array();
  std::string csv = lexdiv::variants_csv_header() + "\n";
  for (const auto& set : sets) {
    lexdiv::VariantProfile profile = lexdiv::variant_profile(corpora, set);
    profiles.push_back(lexdiv::to_json(profile));
    for (const std::string& row : lexdiv::variants_csv_rows(profile)) {
      csv += row + "\n";
    }
  }
  lexdiv::RunManifest manifest = make_manifest("variants", tokenizer, inputs);
  manifest.params["variant_sets"] = sets_path;
  emit_report(common, json{{"variants", profiles}}, csv, manifest);
  return kExitOk;
}

// --------------------------------------------------------------- report --

struct ReportInput {
  std::string label;
  std::string path;
};

struct ReportConfig {
  ReportInput reference;
  std::vector<ReportInput> systems;
  lexdiv::TokenizerConfig tokenizer;
  double mtld_threshold = lexdiv::kDefaultMtldThreshold;
  double diff_scale = 1e4;
  std::string variant_sets_path;  // optional
};

ReportConfig load_report_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw lexdiv::IoError("cannot open report config: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw lexdiv::Error(std::string("malformed report config: ") + e.what());
  }
  ReportConfig config;
  try {
    config.reference.label = doc.at("reference").at("label");
    config.reference.path = doc.at("reference").at("path");
    for (const auto& system : doc.at("systems")) {
      config.systems.push_back({system.at("label"), system.at("path")});
    }
    if (doc.contains("tokenizer")) {
      const auto& tok = doc["tokenizer"];
      config.tokenizer.lowercase = tok.value("lowercase", false);
      config.tokenizer.strip_punctuation =
          tok.value("strip_punctuation", false);
    }
    config.mtld_threshold =
        doc.value("mtld_threshold", lexdiv::kDefaultMtldThreshold);
    config.diff_scale = doc.value("diff_scale", 1e4);
    config.variant_sets_path = doc.value("variant_sets", "");
  } catch (const json::exception& e) {
    throw lexdiv::Error(std::string("invalid report config: ") + e.what());
  }
  return config;
}

// Per-corpus streaming analysis shared by the report pipeline: one forward
// pass accumulates vocabulary, spectrum counts, forward MTLD and variant
// counts; one reverse pass feeds backward MTLD. Memory stays O(vocabulary).
struct CorpusAnalysis {
  lexdiv::VocabProfile vocab;
  lexdiv::DiversityReport diversity;
  // variant token -> count (only tokens named by some variant set)
  std::unordered_map<std::string, std::uint64_t> variant_counts;
};

CorpusAnalysis analyze_file(const std::string& path,
                            const lexdiv::TokenizerConfig& tokenizer,
                            double mtld_threshold,
                            const std::unordered_set<std::string>& wanted) {
  CorpusAnalysis analysis;
  lexdiv::VocabAccumulator vocab_acc;
  std::unordered_map<std::string, std::uint64_t> counts;
  lexdiv::MtldPass forward(mtld_threshold);
  {
    lexdiv::LineReader reader(path);
    std::string line;
    while (reader.next(line)) {
      const std::vector<std::string> tokens = lexdiv::tokenize(line, tokenizer);
      for (const std::string& token : tokens) {
        counts[token] += 1;
        forward.add(token);
        if (wanted.contains(token)) analysis.variant_counts[token] += 1;
      }
      vocab_acc.add_sentence(tokens);
    }
  }
  lexdiv::MtldPass backward(mtld_threshold);
  {
    lexdiv::ReverseLineReader reader(path);
    std::string line;
    while (reader.next(line)) {
      const std::vector<std::string> tokens = lexdiv::tokenize(line, tokenizer);
      for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        backward.add(*it);
      }
    }
  }
  analysis.vocab = vocab_acc.finish();
  analysis.diversity = lexdiv::diversity_report_from_parts(
      lexdiv::spectrum_from_counts(counts), forward, backward, mtld_threshold);
  return analysis;
}

int run_report(const std::string& config_path, const std::string& out_dir) {
  const ReportConfig config = load_report_config(config_path);
  fs::create_directories(out_dir);

  std::vector<lexdiv::VariantSet> variant_sets;
  std::unordered_set<std::string> wanted_variants;
  if (!config.variant_sets_path.empty()) {
    variant_sets = lexdiv::load_variant_sets(config.variant_sets_path);
    for (const auto& set : variant_sets) {
      wanted_variants.insert(set.variants.begin(), set.variants.end());
    }
  }

  // Ordering fixed by declaration order: reference first, then systems.
  std::vector<ReportInput> all_inputs = {config.reference};
  all_inputs.insert(all_inputs.end(), config.systems.begin(),
                    config.systems.end());

  std::map<std::string, CorpusAnalysis> analyses;  // keyed by label
  json errors = json::array();
  for (const auto& input : all_inputs) {
    try {
      analyses[input.label] = analyze_file(
          input.path, config.tokenizer, config.mtld_threshold, wanted_variants);
    } catch (const lexdiv::Error& e) {
      errors.push_back({{"label", input.label}, {"error", e.what()}});
      std::cerr << "error analyzing '" << input.label << "': " << e.what()
                << "\n";
    }
  }
  if (!analyses.contains(config.reference.label)) {
    throw lexdiv::Error("reference corpus '" + config.reference.label +
                        "' could not be analyzed");
  }

  lexdiv::RunManifest manifest;
  manifest.command = "report";
  manifest.tokenizer = config.tokenizer;
  for (const auto& input : all_inputs) {
    std::string digest;
    try {
      digest = lexdiv::file_digest_hex(input.path);
    } catch (const lexdiv::Error&) {
      digest = "unavailable";
    }
    manifest.inputs.push_back({input.label, input.path, digest});
  }
  manifest.params["mtld_threshold"] =
      lexdiv::format_metric(config.mtld_threshold);
  manifest.params["diff_scale"] = lexdiv::format_metric(config.diff_scale);
  manifest.params["reference"] = config.reference.label;
  manifest.created_at = lexdiv::RunManifest::current_timestamp();

  // Diversity and vocabulary reports cover every input, reference included.
  json diversity_rows = json::array();
  json vocab_rows = json::array();
  std::string diversity_csv = lexdiv::diversity_csv_header() + "\n";
  std::string vocab_csv = "label,type_count,token_count\n";
  for (const auto& input : all_inputs) {
    const auto it = analyses.find(input.label);
    if (it == analyses.end()) continue;
    diversity_rows.push_back(lexdiv::to_json(it->second.diversity, input.label));
    diversity_csv +=
        lexdiv::diversity_csv_row(it->second.diversity, input.label) + "\n";
    vocab_rows.push_back({{"label", input.label},
                          {"type_count", it->second.vocab.type_count},
                          {"token_count", it->second.vocab.token_count}});
    vocab_csv += lexdiv::csv_escape(input.label) + "," +
                 std::to_string(it->second.vocab.type_count) + "," +
                 std::to_string(it->second.vocab.token_count) + "\n";
  }

  // Frequency-bias reports: each system against the reference.
  lexdiv::BiasClassConfig bias_config;
  bias_config.diff_scale = config.diff_scale;
  const lexdiv::VocabProfile& ht = analyses[config.reference.label].vocab;
  json freqbias_rows = json::array();
  std::string freqbias_csv = lexdiv::freqbias_csv_header() + "\n";
  for (const auto& system : config.systems) {
    const auto it = analyses.find(system.label);
    if (it == analyses.end()) continue;
    lexdiv::BiasClassification bc =
        lexdiv::classify_corpora(ht, it->second.vocab, bias_config);
    freqbias_rows.push_back(lexdiv::to_json(bc, system.label));
    for (const std::string& row :
         lexdiv::freqbias_csv_rows(bc, system.label)) {
      freqbias_csv += row + "\n";
    }
  }

  const fs::path out(out_dir);
  const json manifest_json = lexdiv::to_json(manifest);
  write_text((out / "manifest.json").string(), manifest_json.dump(2) + "\n");
  auto write_pair = [&](const std::string& stem, const json& body,
                        const std::string& csv) {
    json wrapped = body;
    wrapped["manifest_ref"] = "manifest.json";
    write_text((out / (stem + ".json")).string(), wrapped.dump(2) + "\n");
    write_text((out / (stem + ".csv")).string(), csv);
  };
  write_pair("diversity", json{{"diversity", diversity_rows}}, diversity_csv);
  write_pair("vocab", json{{"vocab", vocab_rows}}, vocab_csv);
  write_pair("freqbias", json{{"freqbias", freqbias_rows}}, freqbias_csv);

  if (!variant_sets.empty()) {
    json variant_profiles = json::array();
    std::string variants_csv = lexdiv::variants_csv_header() + "\n";
    for (const auto& set : variant_sets) {
      lexdiv::VariantProfile profile;
      profile.source_word = set.source_word;
      for (const auto& input : all_inputs) {
        const auto it = analyses.find(input.label);
        if (it == analyses.end()) continue;
        std::map<std::string, lexdiv::VariantCell> cells;
        std::uint64_t total = 0;
        for (const std::string& variant : set.variants) {
          const auto count_it = it->second.variant_counts.find(variant);
          const std::uint64_t count =
              count_it == it->second.variant_counts.end() ? 0
                                                          : count_it->second;
          cells[variant].count = count;
          total += count;
        }
        if (total > 0) {
          for (auto& [variant, cell] : cells) {
            cell.relative_frequency = static_cast<double>(cell.count) /
                                      static_cast<double>(total);
          }
        }
        profile.per_corpus[input.label] = std::move(cells);
      }
      variant_profiles.push_back(lexdiv::to_json(profile));
      for (const std::string& row : lexdiv::variants_csv_rows(profile)) {
        variants_csv += row + "\n";
      }
    }
    write_pair("variants", json{{"variants", variant_profiles}}, variants_csv);
  }

  if (!errors.empty()) {
    write_text((out / "errors.json").string(), errors.dump(2) + "\n");
    return kExitPartial;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- synth --

int run_synth(const lexdiv::SynthConfig& config, const std::string& out_ht,
              const std::string& out_mt, const std::string& out_variants) {
  const lexdiv::SynthPair pair = lexdiv::generate_ht_mt(config);
  auto dump_corpus = [](const lexdiv::Corpus& corpus, const std::string& path) {
    std::vector<std::string> lines;
    lines.reserve(corpus.size());
    for (const auto& sentence : corpus.sentences) {
      std::string line;
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        if (i > 0) line += ' ';
        line += sentence[i];
      }
      lines.push_back(std::move(line));
    }
    lexdiv::write_lines(path, lines);
  };
  dump_corpus(pair.ht, out_ht);
  dump_corpus(pair.mt, out_mt);
  if (!out_variants.empty()) {
    json sets = json::array();
    for (const auto& set : pair.variant_sets) {
      sets.push_back(
          {{"source_word", set.source_word}, {"variants", set.variants}});
    }
    write_text(out_variants, sets.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexical-diversity and frequency-bias analysis of translated "
               "corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lexdiv::kToolVersion);

  // split
  SplitOpts split_opts;
  CLI::App* split = app.add_subcommand(
      "split", "Shuffle and split a parallel corpus into train/test/dev");
  split->add_option("--src", split_opts.src, "Source-side file")->required();
  split->add_option("--trg", split_opts.trg, "Target-side file")->required();
  split->add_option("--train", split_opts.train, "Train pairs")->required();
  split->add_option("--test", split_opts.test, "Test pairs")->required();
  split->add_option("--dev", split_opts.dev, "Dev pairs")->required();
  split->add_option("--seed", split_opts.seed, "Shuffle seed")
      ->capture_default_str();
  split->add_option("--out-prefix", split_opts.out_prefix, "Output prefix")
      ->capture_default_str();

  // shared per-command state
  CommonOpts vocab_common, ld_common, freqbias_common, signif_common,
      variants_common;
  std::vector<std::string> vocab_files, ld_files, freqbias_files,
      variants_files;
  std::vector<std::string> vocab_labels, ld_labels, freqbias_labels,
      variants_labels;

  CLI::App* vocab = app.add_subcommand("vocab", "Vocabulary profile sizes");
  vocab->add_option("files", vocab_files, "Corpus files")->required();
  vocab->add_option("--label", vocab_labels, "Labels, one per file");
  add_common(vocab, &vocab_common);

  double mtld_threshold = lexdiv::kDefaultMtldThreshold;
  CLI::App* ld = app.add_subcommand(
      "ld", "Lexical diversity metrics (Yule's I, TTR x1000, MTLD)");
  ld->add_option("files", ld_files, "Corpus files")->required();
  ld->add_option("--label", ld_labels, "Labels, one per file");
  ld->add_option("--mtld-threshold", mtld_threshold, "MTLD factor threshold")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  add_common(ld, &ld_common);

  std::string freqbias_ref, freqbias_ref_label = "ht";
  double diff_scale = 1e4;
  CLI::App* freqbias = app.add_subcommand(
      "freqbias", "Six-class frequency exacerbation/decay analysis");
  freqbias->add_option("--ref", freqbias_ref, "Reference (HT) corpus file")
      ->required();
  freqbias->add_option("--ref-label", freqbias_ref_label, "Reference label")
      ->capture_default_str();
  freqbias->add_option("files", freqbias_files, "MT output files")->required();
  freqbias->add_option("--label", freqbias_labels, "Labels, one per file");
  freqbias->add_option("--diff-scale", diff_scale,
                       "Scale for accumulated differences")
      ->capture_default_str();
  add_common(freqbias, &freqbias_common);

  std::string signif_a, signif_b, signif_metric = "ttr";
  std::uint32_t signif_iterations = 1000;
  std::uint64_t signif_seed = 0;
  double signif_mtld_threshold = lexdiv::kDefaultMtldThreshold;
  CLI::App* signif = app.add_subcommand(
      "signif",
      "Pairwise bootstrap significance test (exit 3 = significant at 0.05)");
  signif->add_option("a", signif_a, "First corpus file")->required();
  signif->add_option("b", signif_b, "Second corpus file")->required();
  signif->add_option("--metric", signif_metric, "Diversity metric")
      ->check(CLI::IsMember({"ttr", "yules_i", "mtld"}))
      ->capture_default_str();
  signif->add_option("--iterations", signif_iterations, "Bootstrap iterations")
      ->capture_default_str();
  signif->add_option("--seed", signif_seed, "Resampling seed")
      ->capture_default_str();
  signif->add_option("--mtld-threshold", signif_mtld_threshold,
                     "MTLD factor threshold");
  add_common(signif, &signif_common, /*with_format=*/false);
  signif->add_option("-o,--output", signif_common.output,
                     "Output file (default: stdout)");

  std::string variant_sets_path;
  CLI::App* variants = app.add_subcommand(
      "variants", "Relative frequencies of translation-variant sets");
  variants->add_option("--sets", variant_sets_path, "Variant set JSON file")
      ->required();
  variants->add_option("files", variants_files, "Corpus files")->required();
  variants->add_option("--label", variants_labels, "Labels, one per file");
  add_common(variants, &variants_common);

  std::string report_config_path, report_out_dir = "report";
  CLI::App* report = app.add_subcommand(
      "report", "Run every analysis for an HT + N MT bundle");
  report->add_option("--config", report_config_path, "Bundle config JSON")
      ->required();
  report->add_option("--out", report_out_dir, "Output directory")
      ->capture_default_str();

  lexdiv::SynthConfig synth_config;
  std::string synth_ht = "synth.ht.txt", synth_mt = "synth.mt.txt",
              synth_variants;
  CLI::App* synth = app.add_subcommand(
      "synth",
      "Generate a synthetic HT/MT pair (greedy most-frequent-variant MT)");
  synth->add_option("--sentences", synth_config.sentences, "Sentence count")
      ->capture_default_str();
  synth->add_option("--vocab", synth_config.vocab_size, "Vocabulary size")
      ->capture_default_str();
  synth->add_option("--group-size", synth_config.group_size,
                    "Variants per group")
      ->capture_default_str();
  synth->add_option("--zipf", synth_config.zipf_exponent, "Zipf exponent")
      ->capture_default_str();
  synth->add_option("--min-len", synth_config.min_sentence_len,
                    "Minimum sentence length")
      ->capture_default_str();
  synth->add_option("--max-len", synth_config.max_sentence_len,
                    "Maximum sentence length")
      ->capture_default_str();
  synth->add_option("--seed", synth_config.seed, "Generator seed")
      ->capture_default_str();
  synth->add_option("--out-ht", synth_ht, "HT output file")
      ->capture_default_str();
  synth->add_option("--out-mt", synth_mt, "MT output file")
      ->capture_default_str();
  synth->add_option("--out-variants", synth_variants,
                    "Planted variant sets JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (split->parsed()) return run_split(split_opts);
    if (vocab->parsed()) {
      return run_vocab(vocab_common, pair_labels(vocab_files, vocab_labels));
    }
    if (ld->parsed()) {
      return run_ld(ld_common, pair_labels(ld_files, ld_labels),
                    mtld_threshold);
    }
    if (freqbias->parsed()) {
      return run_freqbias(freqbias_common,
                          {freqbias_ref_label, freqbias_ref},
                          pair_labels(freqbias_files, freqbias_labels),
                          diff_scale);
    }
    if (signif->parsed()) {
      return run_signif(signif_common, signif_a, signif_b, signif_metric,
                        signif_iterations, signif_seed, signif_mtld_threshold);
    }
    if (variants->parsed()) {
      return run_variants(variants_common, variant_sets_path,
                          pair_labels(variants_files, variants_labels));
    }
    if (report->parsed()) return run_report(report_config_path, report_out_dir);
    if (synth->parsed()) {
      return run_synth(synth_config, synth_ht, synth_mt, synth_variants);
    }
  } catch (const lexdiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
