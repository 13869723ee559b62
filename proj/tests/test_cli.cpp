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
// End-to-end tests driving the installed binary.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"

using json = nlohmann::json;
using lexdiv::testing::TempDir;
using lexdiv::testing::write_file;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& workdir) {
  const std::string out_file = workdir + "/.out";
  const std::string cmd = "cd '" + workdir + "' && SOURCE_DATE_EPOCH=1700000000 " +
                          std::string(LEXDIV_BIN) + " " + args + " > '" +
                          out_file + "' 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t count = 0;
  for (char c : text) {
    if (c == '\n') ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("split command") {
  TempDir dir;
  std::string src, trg;
  for (int i = 0; i < 10; ++i) {
    src += "s" + std::to_string(i) + "\n";
    trg += "t" + std::to_string(i) + "\n";
  }
  write_file(dir.file("en.txt"), src);
  write_file(dir.file("fr.txt"), trg);

  const std::string args =
      "split --src en.txt --trg fr.txt --train 6 --test 3 --dev 1 --seed 42";
  RunResult result = run(args, dir.path().string());
  CHECK(result.exit_code == 0);
  CHECK(line_count(slurp(dir.file("split.train.src"))) == 6);
  CHECK(line_count(slurp(dir.file("split.test.trg"))) == 3);
  CHECK(line_count(slurp(dir.file("split.dev.src"))) == 1);

  const std::string train_before = slurp(dir.file("split.train.src"));
  const std::string manifest_before = slurp(dir.file("split.manifest.json"));
  RunResult rerun = run(args, dir.path().string());
  CHECK(rerun.exit_code == 0);
  CHECK(slurp(dir.file("split.train.src")) == train_before);
  CHECK(slurp(dir.file("split.manifest.json")) == manifest_before);

  // Oversized request: exit 2, message names the available count.
  RunResult oversized = run(
      "split --src en.txt --trg fr.txt --train 9 --test 3 --dev 1 --seed 1",
      dir.path().string());
  CHECK(oversized.exit_code == 2);
  CHECK(oversized.output.find("10") != std::string::npos);
}

TEST_CASE("ld command") {
  TempDir dir;
  write_file(dir.file("c.txt"), "a a b b\n");

  RunResult csv = run("ld c.txt --label toy", dir.path().string());
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("label,yules_i,ttr_scaled,mtld") != std::string::npos);
  CHECK(csv.output.find("toy,4.0000,500.0000,2.0000") != std::string::npos);

  RunResult js = run("ld c.txt --label toy --format json -o out.json",
                     dir.path().string());
  CHECK(js.exit_code == 0);
  json doc = json::parse(slurp(dir.file("out.json")));
  const json& row = doc["diversity"][0];
  CHECK(row["label"] == "toy");
  CHECK(row["yules_i"].get<double>() == doctest::Approx(4.0));
  CHECK(row["ttr_scaled"].get<double>() == doctest::Approx(500.0));
  CHECK(row["mtld"].get<double>() == doctest::Approx(2.0));
  CHECK(doc.contains("manifest"));

  // Undefined metrics surface as nulls with reason codes, not sentinels.
  write_file(dir.file("s.txt"), "a b c\n");
  RunResult singletons =
      run("ld s.txt --format json -o s.json", dir.path().string());
  CHECK(singletons.exit_code == 0);
  json sdoc = json::parse(slurp(dir.file("s.json")));
  CHECK(sdoc["diversity"][0]["yules_i"].is_null());
  CHECK(sdoc["diversity"][0]["yules_undefined_reason"] ==
        "all_types_singleton");

  write_file(dir.file("empty.txt"), "");
  CHECK(run("ld empty.txt", dir.path().string()).exit_code == 2);
}

TEST_CASE("freqbias command") {
  TempDir dir;
  write_file(dir.file("ht.txt"), "a b\na\n");
  write_file(dir.file("mt.txt"), "a\n");

  RunResult result = run("freqbias --ref ht.txt mt.txt --label sys1",
                         dir.path().string());
  CHECK(result.exit_code == 0);
  // counts row: ++ 1, -0 1, everything else 0.
  CHECK(result.output.find("sys1,counts,1,0,0,0,0,1") != std::string::npos);
  CHECK(result.output.find("sys1,acc_diff,2500.0000,0.0000,0.0000,0.0000,"
                           "0.0000,2500.0000") != std::string::npos);

  RunResult self = run("freqbias --ref ht.txt ht.txt --label self",
                       dir.path().string());
  CHECK(self.exit_code == 0);
  CHECK(self.output.find("self,acc_diff,0.0000,0.0000,0.0000,0.0000,0.0000,"
                         "0.0000") != std::string::npos);

  CHECK(run("freqbias mt.txt", dir.path().string()).exit_code == 2);
}

TEST_CASE("signif command") {
  TempDir dir;
  std::string diverse, repetitive;
  for (int i = 0; i < 200; ++i) {
    diverse += "w" + std::to_string(4 * i) + " w" + std::to_string(4 * i + 1) +
               " w" + std::to_string(4 * i + 2) + "\n";
    repetitive += "the the the\n";
  }
  write_file(dir.file("a.txt"), diverse);
  write_file(dir.file("b.txt"), repetitive);

  RunResult same =
      run("signif a.txt a.txt --seed 3 -o same.json", dir.path().string());
  CHECK(same.exit_code == 0);
  json same_doc = json::parse(slurp(dir.file("same.json")));
  CHECK(same_doc["status"] == "not_significant");
  CHECK(same_doc["observed_delta"].get<double>() == doctest::Approx(0.0));

  RunResult different =
      run("signif a.txt b.txt --seed 3 -o diff.json", dir.path().string());
  CHECK(different.exit_code == 3);
  json diff_doc = json::parse(slurp(dir.file("diff.json")));
  CHECK(diff_doc["status"] == "significant");
  CHECK(diff_doc["p_value"].get<double>() <= 0.05);

  RunResult low = run("signif a.txt a.txt --iterations 50 -o low.json",
                      dir.path().string());
  CHECK(low.exit_code == 0);
  CHECK(low.output.find("warning") != std::string::npos);

  // Determinism: same seed, bit-identical result objects.
  run("signif a.txt b.txt --seed 9 -o r1.json", dir.path().string());
  run("signif a.txt b.txt --seed 9 -o r2.json", dir.path().string());
  CHECK(slurp(dir.file("r1.json")) == slurp(dir.file("r2.json")));
}

TEST_CASE("variants command") {
  TempDir dir;
  write_file(dir.file("c.txt"), "imagen foto\nimagen\n");
  write_file(dir.file("sets.json"),
             R"([{"source_word": "picture", "variants": ["imagen"]},
                 {"source_word": "ghost", "variants": ["fantasma"]}])");

  RunResult result = run("variants --sets sets.json c.txt --label ht",
                         dir.path().string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("picture,imagen,ht,2,1.0000") != std::string::npos);
  // Absent variants still produce rows.
  CHECK(result.output.find("ghost,fantasma,ht,0,0.0000") != std::string::npos);

  write_file(dir.file("bad.json"), "{broken");
  RunResult bad = run("variants --sets bad.json c.txt", dir.path().string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("malformed") != std::string::npos);
}

TEST_CASE("report command") {
  TempDir dir;
  write_file(dir.file("ht.txt"), "a b\na\nc c\n");
  write_file(dir.file("mt1.txt"), "a\na a\nc c\n");
  write_file(dir.file("mt2.txt"), "a b\na b\n");
  write_file(dir.file("config.json"), R"({
    "reference": {"label": "ht", "path": "ht.txt"},
    "systems": [{"label": "mt1", "path": "mt1.txt"},
                {"label": "mt2", "path": "mt2.txt"}]
  })");

  RunResult result =
      run("report --config config.json --out out", dir.path().string());
  CHECK(result.exit_code == 0);
  // 1 HT row + 2 MT rows (+ header).
  CHECK(line_count(slurp(dir.file("out/diversity.csv"))) == 4);
  // 2 systems x 3 row kinds (+ header).
  CHECK(line_count(slurp(dir.file("out/freqbias.csv"))) == 7);
  CHECK(std::filesystem::exists(dir.file("out/manifest.json")));

  // Rerun with a pinned timestamp: byte-identical outputs.
  const std::string diversity_before = slurp(dir.file("out/diversity.csv"));
  const std::string manifest_before = slurp(dir.file("out/manifest.json"));
  const std::string freqbias_before = slurp(dir.file("out/freqbias.json"));
  RunResult rerun =
      run("report --config config.json --out out", dir.path().string());
  CHECK(rerun.exit_code == 0);
  CHECK(slurp(dir.file("out/diversity.csv")) == diversity_before);
  CHECK(slurp(dir.file("out/manifest.json")) == manifest_before);
  CHECK(slurp(dir.file("out/freqbias.json")) == freqbias_before);

  // One unreadable input: that row errors, others complete, exit 1.
  write_file(dir.file("config_bad.json"), R"({
    "reference": {"label": "ht", "path": "ht.txt"},
    "systems": [{"label": "mt1", "path": "mt1.txt"},
                {"label": "missing", "path": "no_such_file.txt"}]
  })");
  RunResult partial =
      run("report --config config_bad.json --out out2", dir.path().string());
  CHECK(partial.exit_code == 1);
  CHECK(line_count(slurp(dir.file("out2/diversity.csv"))) == 3);
  CHECK(std::filesystem::exists(dir.file("out2/errors.json")));
}

TEST_CASE("csv and json report identical values") {
  TempDir dir;
  write_file(dir.file("c.txt"), "x x y z z z\nx w\n");
  run("ld c.txt --label c --format csv -o r.csv", dir.path().string());
  run("ld c.txt --label c --format json -o r.json", dir.path().string());

  const std::string csv = slurp(dir.file("r.csv"));
  json doc = json::parse(slurp(dir.file("r.json")));
  const json& row = doc["diversity"][0];
  char expected[128];
  std::snprintf(expected, sizeof(expected), "c,%.4f,%.4f,%.4f",
                row["yules_i"].get<double>(), row["ttr_scaled"].get<double>(),
                row["mtld"].get<double>());
  CHECK(csv.find(expected) != std::string::npos);
}

TEST_CASE("synth command emits analyzable corpora") {
  TempDir dir;
  RunResult result = run(
      "synth --sentences 500 --vocab 200 --seed 5 --out-ht ht.txt --out-mt "
      "mt.txt --out-variants sets.json",
      dir.path().string());
  CHECK(result.exit_code == 0);
  CHECK(line_count(slurp(dir.file("ht.txt"))) == 500);
  CHECK(line_count(slurp(dir.file("mt.txt"))) == 500);
  RunResult ld = run("ld ht.txt mt.txt", dir.path().string());
  CHECK(ld.exit_code == 0);
}
