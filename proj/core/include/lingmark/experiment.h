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

#ifndef LINGMARK_EXPERIMENT_H_
#define LINGMARK_EXPERIMENT_H_

// End-to-end evaluation: generate watermarked and unwatermarked texts with
// the toy LM, score both detectors, optionally attack the watermarked texts,
// and summarize. Reports are a pure function of the manifest and inputs;
// the thread count never changes the output.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lingmark/eval.h"
#include "lingmark/indeterminacy.h"
#include "lingmark/tagged_corpus.h"
#include "lingmark/toy_lm.h"
#include "lingmark/watermark.h"

namespace lingmark {

struct ExperimentManifest {
  std::string table_path;
  std::string lm_path;
  std::string lexicon_path;
  std::string synonyms_path;  // needed only when attack_rates is non-empty
  std::string tagset;         // empty: built-in tagset named by the table
  WatermarkMode mode = WatermarkMode::kAdaptive;
  double gamma = kDefaultGamma;
  std::optional<double> delta_base;  // nullopt: calibrated from the table
  int k = 2;
  std::uint64_t key = 0;
  double temperature = kDefaultTemperature;
  std::size_t n_texts = 100;
  std::size_t gen_length = 200;  // scored tokens per text
  std::vector<double> attack_rates;
  std::uint64_t seed = 0;
  double fpr = 0.05;
  double threshold = 4.0;

  // Relative paths are resolved against `base_dir`. Throws ConfigError on
  // a missing or ill-typed field.
  static ExperimentManifest Parse(std::istream& in,
                                  const std::string& base_dir = {});
  static ExperimentManifest ParseFile(const std::string& path);
  std::string ToJson() const;
};

struct ExperimentInputs {
  const LambdaTable& table;
  const ToyLM& lm;
  const LexiconTagger& tagger;
  const Tagset& tagset;
  const SynonymMap* synonyms = nullptr;
};

struct DetectorSummary {
  double tpr_at_fpr = 0.0;
  double best_f1 = 0.0;
  double positive_mean = 0.0;
  double positive_std = 0.0;
  double negative_mean = 0.0;
  double negative_std = 0.0;
  double positive_detect_rate = 0.0;  // fraction above the threshold
  double negative_detect_rate = 0.0;
};

struct AttackSummary {
  double rate = 0.0;
  DetectorSummary uniform;
  DetectorSummary weighted;
};

struct TextRow {
  std::string kind;  // "watermarked", "null" or "attacked"
  double rate = 0.0;
  std::size_t index = 0;
  std::size_t scored_tokens = 0;
  std::size_t green_count = 0;
  double z_uniform = 0.0;
  double z_weighted = 0.0;
  double nll = 0.0;
};

struct ExperimentReport {
  ExperimentManifest manifest;
  double delta_base = 0.0;  // resolved
  DetectorSummary uniform;
  DetectorSummary weighted;
  std::vector<AttackSummary> attacks;
  double nll_watermarked = 0.0;
  double nll_null = 0.0;
  std::array<double, 3> category_shares{};
  std::vector<TextRow> rows;

  // Positive and negative scores of the requested detector.
  ScorePair Scores(bool weighted) const;
  ScorePair AttackedScores(double rate, bool weighted) const;

  std::string ToJson() const;
  std::string ToCsv() const;
};

// Seed of the `index`-th text in stream `stream`.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                         std::uint64_t index);

// `threads` == 0 uses the hardware concurrency.
ExperimentReport RunExperiment(const ExperimentManifest& manifest,
                               const ExperimentInputs& inputs,
                               unsigned threads = 0);

// Loads every artifact named by the manifest. Missing files raise
// ConfigError.
ExperimentReport RunExperiment(const ExperimentManifest& manifest,
                               unsigned threads = 0);

}  // namespace lingmark

#endif  // LINGMARK_EXPERIMENT_H_
