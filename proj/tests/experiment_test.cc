// Copyright 2026 The Lingmark Authors.
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

#include "lingmark/experiment.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "lingmark/error.h"
#include "testing/toy_world.h"

namespace lingmark {
namespace {

using testing::ToyWorld;

const ToyWorld& World() {
  static const ToyWorld world = ToyWorld::Make(4000, 5);
  return world;
}

ExperimentInputs Inputs() {
  const ToyWorld& w = World();
  return {w.table, w.lm, w.tagger, Tagset::Universal(), &w.synonyms};
}

ExperimentManifest Small() {
  ExperimentManifest m;
  m.key = 99;
  m.seed = 7;
  m.n_texts = 24;
  m.gen_length = 60;
  m.attack_rates = {0.2, 0.6};
  return m;
}

TEST(ManifestTest, ParseDefaultsAndPaths) {
  std::istringstream in(R"({
    "table_path": "t.json", "lm_path": "/abs/lm.json",
    "lexicon_path": "lex.tsv", "mode": "kgw", "gamma": 0.25,
    "delta_base": 2.0, "k": 3, "key": 18446744073709551615,
    "n_texts": 10, "gen_length": 50, "seed": 3,
    "attack": {"rates": [0.1, 0.5]}
  })");
  const auto m = ExperimentManifest::Parse(in, "/data");
  EXPECT_EQ(m.table_path, "/data/t.json");
  EXPECT_EQ(m.lm_path, "/abs/lm.json");
  EXPECT_EQ(m.mode, WatermarkMode::kStatic);
  EXPECT_EQ(m.gamma, 0.25);
  EXPECT_EQ(*m.delta_base, 2.0);
  EXPECT_EQ(m.key, 18446744073709551615ULL);
  EXPECT_EQ(m.temperature, 0.7);
  EXPECT_EQ(m.fpr, 0.05);
  EXPECT_EQ(m.attack_rates, (std::vector<double>{0.1, 0.5}));

  std::istringstream again(m.ToJson());
  const auto round = ExperimentManifest::Parse(again);
  EXPECT_EQ(round.ToJson(), m.ToJson());
}

TEST(ManifestTest, CalibratedAndErrors) {
  std::istringstream in(R"({"table_path": "t", "lm_path": "l",
    "lexicon_path": "x", "mode": "stela", "gamma": 0.5,
    "delta_base": "calibrated", "k": 2, "key": 1, "n_texts": 1,
    "gen_length": 1, "seed": 0})");
  EXPECT_FALSE(ExperimentManifest::Parse(in).delta_base.has_value());

  std::istringstream missing(R"({"lm_path": "l"})");
  EXPECT_THROW(ExperimentManifest::Parse(missing), ConfigError);
  std::istringstream typed(R"({"table_path": 5})");
  EXPECT_THROW(ExperimentManifest::Parse(typed), ConfigError);
  std::istringstream junk("[");
  EXPECT_THROW(ExperimentManifest::Parse(junk), ConfigError);
  EXPECT_THROW(ExperimentManifest::ParseFile("/nonexistent.json"), ConfigError);
}

TEST(DeriveSeedTest, Distinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s) {
    for (std::uint64_t i = 0; i < 100; ++i) seen.insert(DeriveSeed(1, s, i));
  }
  EXPECT_EQ(seen.size(), 400u);
  EXPECT_EQ(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 3));
}

TEST(RunExperimentTest, DeterministicAcrossThreadCounts) {
  const auto a = RunExperiment(Small(), Inputs(), 1);
  const auto b = RunExperiment(Small(), Inputs(), 3);
  const auto c = RunExperiment(Small(), Inputs(), 1);
  EXPECT_EQ(a.ToJson(), b.ToJson());
  EXPECT_EQ(a.ToCsv(), b.ToCsv());
  EXPECT_EQ(a.ToJson(), c.ToJson());
}

TEST(RunExperimentTest, ReportContents) {
  const auto r = RunExperiment(Small(), Inputs(), 2);
  EXPECT_EQ(r.rows.size(), 24u * 4);
  EXPECT_DOUBLE_EQ(r.delta_base, CalibratedDelta(World().table));
  for (const auto& row : r.rows) EXPECT_EQ(row.scored_tokens, 60u);
  EXPECT_GT(r.weighted.tpr_at_fpr, 0.9);
  EXPECT_NEAR(r.category_shares[0] + r.category_shares[1] +
                  r.category_shares[2],
              1.0, 1e-9);

  const auto doc = nlohmann::json::parse(r.ToJson());
  EXPECT_EQ(doc["version"], 1);
  EXPECT_TRUE(doc["detectors"]["weighted"].contains("tpr_at_fpr"));
  EXPECT_TRUE(doc["detectors"]["weighted"].contains("best_f1"));
  EXPECT_TRUE(doc["detectors"]["uniform"].contains("positive_mean_z"));
  EXPECT_EQ(doc["attacks"].size(), 2u);
  EXPECT_EQ(doc["manifest"]["n_texts"], 24);
  EXPECT_TRUE(doc["quality"].contains("nll_watermarked"));

  std::istringstream csv(r.ToCsv());
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header,
            "kind,rate,index,scored_tokens,green_count,z_uniform,z_weighted,nll");
  std::size_t lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  EXPECT_EQ(lines, r.rows.size());
}

TEST(RunExperimentTest, NoSignalWithoutBias) {
  ExperimentManifest m = Small();
  m.delta_base = 0.0;
  m.n_texts = 200;
  m.attack_rates.clear();
  const auto r = RunExperiment(m, Inputs(), 0);
  EXPECT_NEAR(r.weighted.tpr_at_fpr, 0.05, 0.05);
  EXPECT_NEAR(r.uniform.tpr_at_fpr, 0.05, 0.05);
}

TEST(RunExperimentTest, ConfigErrors) {
  ExperimentManifest m = Small();
  m.k = 3;
  EXPECT_THROW(RunExperiment(m, Inputs(), 1), ConfigError);
  ExperimentInputs no_synonyms = Inputs();
  no_synonyms.synonyms = nullptr;
  EXPECT_THROW(RunExperiment(Small(), no_synonyms, 1), ConfigError);
  ExperimentManifest files = Small();
  files.table_path = "/nonexistent/table.json";
  files.lm_path = "/nonexistent/lm.json";
  files.lexicon_path = "/nonexistent/lexicon.tsv";
  EXPECT_THROW(RunExperiment(files, 1), ConfigError);
}

TEST(RunExperimentTest, LoadsArtifactsFromDisk) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lingmark_experiment_test";
  fs::create_directories(dir);
  const ToyWorld& w = World();
  SaveTableFile(w.table, (dir / "table.json").string());
  w.lm.SaveFile((dir / "lm.json").string());
  {
    std::ofstream lex(dir / "lexicon.tsv");
    w.tagger.Write(lex);
    std::ofstream syn(dir / "synonyms.tsv");
    WriteSynonyms(syn, w.synonyms);
  }
  ExperimentManifest m = Small();
  m.table_path = (dir / "table.json").string();
  m.lm_path = (dir / "lm.json").string();
  m.lexicon_path = (dir / "lexicon.tsv").string();
  m.synonyms_path = (dir / "synonyms.tsv").string();
  const auto from_disk = RunExperiment(m, 2);
  ExperimentManifest in_memory = Small();
  in_memory.table_path = m.table_path;
  in_memory.lm_path = m.lm_path;
  in_memory.lexicon_path = m.lexicon_path;
  in_memory.synonyms_path = m.synonyms_path;
  EXPECT_EQ(from_disk.ToCsv(), RunExperiment(in_memory, Inputs(), 1).ToCsv());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace lingmark
