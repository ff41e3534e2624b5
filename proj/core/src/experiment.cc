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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "lingmark/detector.h"
#include "lingmark/error.h"

namespace lingmark {
namespace {

using json = nlohmann::json;

constexpr std::uint64_t kWatermarkedStream = 1;
constexpr std::uint64_t kNullStream = 2;
constexpr std::uint64_t kAttackStreamBase = 100;

struct TextResult {
  TextRow watermarked;
  TextRow null;
  std::vector<TextRow> attacked;
  std::array<double, 3> abs_contribution{};
};

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

double StdDev(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double mean = Mean(values);
  double sq = 0.0;
  for (const double v : values) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / static_cast<double>(values.size() - 1));
}

double DetectRate(const std::vector<double>& values, double threshold) {
  std::size_t hits = 0;
  for (const double v : values) hits += Decide(v, threshold) ? 1 : 0;
  return values.empty() ? 0.0
                        : static_cast<double>(hits) /
                              static_cast<double>(values.size());
}

DetectorSummary Summarize(const ScorePair& scores, double fpr,
                          double threshold) {
  DetectorSummary s;
  s.tpr_at_fpr = TprAtFpr(scores, fpr);
  s.best_f1 = BestF1(scores);
  s.positive_mean = Mean(scores.positives);
  s.positive_std = StdDev(scores.positives);
  s.negative_mean = Mean(scores.negatives);
  s.negative_std = StdDev(scores.negatives);
  s.positive_detect_rate = DetectRate(scores.positives, threshold);
  s.negative_detect_rate = DetectRate(scores.negatives, threshold);
  return s;
}

json SummaryJson(const DetectorSummary& s, double fpr) {
  return {{"fpr", fpr},
          {"tpr_at_fpr", s.tpr_at_fpr},
          {"best_f1", s.best_f1},
          {"positive_mean_z", s.positive_mean},
          {"positive_std_z", s.positive_std},
          {"negative_mean_z", s.negative_mean},
          {"negative_std_z", s.negative_std},
          {"positive_detect_rate", s.positive_detect_rate},
          {"negative_detect_rate", s.negative_detect_rate}};
}

std::string FormatDouble(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string Resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

void CheckReadable(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("manifest has no ") + what);
  if (!std::filesystem::exists(path)) {
    throw ConfigError(std::string(what) + " '" + path + "' does not exist");
  }
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                         std::uint64_t index) {
  return SplitMix64(SplitMix64(master ^ SplitMix64(stream)) + index);
}

ExperimentManifest ExperimentManifest::Parse(std::istream& in,
                                             const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("manifest must be a JSON object");

  ExperimentManifest m;
  try {
    auto path = [&](const char* field, bool required) -> std::string {
      if (!doc.contains(field)) {
        if (required) {
          throw ConfigError(std::string("manifest is missing '") + field + "'");
        }
        return {};
      }
      return Resolve(doc.at(field).get<std::string>(), base_dir);
    };
    m.table_path = path("table_path", true);
    m.lm_path = path("lm_path", true);
    m.lexicon_path = path("lexicon_path", true);
    m.synonyms_path = path("synonyms_path", false);
    m.tagset = doc.value("tagset", std::string());
    m.mode = ParseWatermarkMode(doc.at("mode").get<std::string>());
    m.gamma = doc.at("gamma").get<double>();
    const json& delta = doc.at("delta_base");
    if (delta.is_string()) {
      if (delta.get<std::string>() != "calibrated") {
        throw ConfigError("delta_base must be a number or \"calibrated\"");
      }
    } else {
      m.delta_base = delta.get<double>();
    }
    m.k = doc.at("k").get<int>();
    m.key = doc.at("key").get<std::uint64_t>();
    m.temperature = doc.value("temperature", kDefaultTemperature);
    m.n_texts = doc.at("n_texts").get<std::size_t>();
    m.gen_length = doc.at("gen_length").get<std::size_t>();
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.fpr = doc.value("fpr", 0.05);
    m.threshold = doc.value("threshold", kDefaultThreshold);
    if (doc.contains("attack")) {
      m.attack_rates = doc.at("attack").at("rates").get<std::vector<double>>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad manifest field: ") + e.what());
  }
  if (m.n_texts == 0 || m.gen_length == 0) {
    throw ConfigError("n_texts and gen_length must be positive");
  }
  for (const double rate : m.attack_rates) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw ConfigError("attack rates must lie in [0, 1]");
    }
  }
  return m;
}

ExperimentManifest ExperimentManifest::ParseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open manifest '" + path + "'");
  return Parse(in, std::filesystem::path(path).parent_path().string());
}

std::string ExperimentManifest::ToJson() const {
  json doc = {{"table_path", table_path},
              {"lm_path", lm_path},
              {"lexicon_path", lexicon_path},
              {"synonyms_path", synonyms_path},
              {"tagset", tagset},
              {"mode", WatermarkModeName(mode)},
              {"gamma", gamma},
              {"k", k},
              {"key", key},
              {"temperature", temperature},
              {"n_texts", n_texts},
              {"gen_length", gen_length},
              {"seed", seed},
              {"fpr", fpr},
              {"threshold", threshold},
              {"attack", {{"rates", attack_rates}}}};
  if (delta_base) {
    doc["delta_base"] = *delta_base;
  } else {
    doc["delta_base"] = "calibrated";
  }
  return doc.dump();
}

ScorePair ExperimentReport::Scores(bool weighted) const {
  ScorePair pair;
  for (const auto& row : rows) {
    const double z = weighted ? row.z_weighted : row.z_uniform;
    if (row.kind == "watermarked") pair.positives.push_back(z);
    if (row.kind == "null") pair.negatives.push_back(z);
  }
  return pair;
}

ScorePair ExperimentReport::AttackedScores(double rate, bool weighted) const {
  ScorePair pair;
  for (const auto& row : rows) {
    const double z = weighted ? row.z_weighted : row.z_uniform;
    if (row.kind == "attacked" && row.rate == rate) pair.positives.push_back(z);
    if (row.kind == "null") pair.negatives.push_back(z);
  }
  return pair;
}

std::string ExperimentReport::ToJson() const {
  json doc;
  doc["version"] = 1;
  doc["manifest"] = json::parse(manifest.ToJson());
  doc["delta_base"] = delta_base;
  doc["primary_detector"] =
      manifest.mode == WatermarkMode::kAdaptive ? "weighted" : "uniform";
  doc["detectors"] = {{"uniform", SummaryJson(uniform, manifest.fpr)},
                      {"weighted", SummaryJson(weighted, manifest.fpr)}};
  json attack_list = json::array();
  for (const auto& a : attacks) {
    attack_list.push_back({{"rate", a.rate},
                           {"uniform", SummaryJson(a.uniform, manifest.fpr)},
                           {"weighted", SummaryJson(a.weighted, manifest.fpr)}});
  }
  doc["attacks"] = std::move(attack_list);
  doc["quality"] = {{"nll_watermarked", nll_watermarked},
                    {"nll_null", nll_null},
                    {"ppl_watermarked", std::exp(nll_watermarked)},
                    {"ppl_null", std::exp(nll_null)}};
  json shares;
  for (const auto category : {WordCategory::kContent, WordCategory::kFunction,
                              WordCategory::kOther}) {
    shares[std::string(CategoryName(category))] =
        category_shares[static_cast<std::size_t>(category)];
  }
  doc["category_shares"] = std::move(shares);
  return doc.dump(2) + "\n";
}

std::string ExperimentReport::ToCsv() const {
  std::ostringstream out;
  out << "kind,rate,index,scored_tokens,green_count,z_uniform,z_weighted,nll\n";
  for (const auto& row : rows) {
    out << row.kind << ',' << FormatDouble(row.rate) << ',' << row.index << ','
        << row.scored_tokens << ',' << row.green_count << ','
        << FormatDouble(row.z_uniform) << ',' << FormatDouble(row.z_weighted)
        << ',' << FormatDouble(row.nll) << '\n';
  }
  return out.str();
}

ExperimentReport RunExperiment(const ExperimentManifest& manifest,
                               const ExperimentInputs& inputs,
                               unsigned threads) {
  if (manifest.k != inputs.table.k()) {
    throw ConfigError("manifest k=" + std::to_string(manifest.k) +
                      " does not match table k=" +
                      std::to_string(inputs.table.k()));
  }
  if (!manifest.attack_rates.empty() && inputs.synonyms == nullptr) {
    throw ConfigError("attack rates given without a synonym map");
  }
  if (inputs.synonyms != nullptr) {
    ValidateSynonyms(*inputs.synonyms, inputs.tagger);
  }

  WatermarkConfig config;
  config.gamma = manifest.gamma;
  config.k = manifest.k;
  config.mode = manifest.mode;
  config.key = WatermarkKey{manifest.key};
  config.temperature = manifest.temperature;
  config.delta_base = manifest.delta_base
                          ? *manifest.delta_base
                          : (manifest.mode == WatermarkMode::kAdaptive
                                 ? CalibratedDelta(inputs.table)
                                 : kDefaultStaticDelta);
  config.Validate();
  const DetectorConfig detector{config.key, config.gamma, config.k};

  const Vocabulary& vocab = inputs.lm.vocab();
  const std::size_t total_length =
      manifest.gen_length + static_cast<std::size_t>(manifest.k - 1);

  auto score = [&](std::span<const TokenId> tokens,
                   std::span<const std::string> words, TextResult* sink) {
    const DetectionReport report =
        ZWeighted(tokens, words, vocab.size(), inputs.tagger, inputs.table,
                  inputs.tagset, detector);
    if (sink != nullptr) {
      for (const auto& t : report.per_token) {
        sink->abs_contribution[static_cast<std::size_t>(
            inputs.tagset.CategoryOf(t.tag))] += std::abs(t.contribution);
      }
    }
    return report;
  };
  auto fill = [](TextRow& row, const DetectionReport& report) {
    row.scored_tokens = report.scored_tokens;
    row.green_count = report.green_count;
    row.z_uniform = report.z_uniform;
    row.z_weighted = report.z_weighted;
  };

  std::vector<TextResult> results(manifest.n_texts);
  auto process = [&](std::size_t i) {
    TextResult& result = results[i];
    const GenerationRecord marked =
        Generate(inputs.lm, inputs.tagger, inputs.table, config, {},
                 total_length, DeriveSeed(manifest.seed, kWatermarkedStream, i));
    const std::vector<std::string> marked_words = vocab.Decode(marked.tokens);
    result.watermarked.kind = "watermarked";
    result.watermarked.index = i;
    fill(result.watermarked, score(marked.tokens, marked_words, &result));
    result.watermarked.nll = Nll(inputs.lm, marked.tokens);

    const GenerationRecord plain = GenerateUnwatermarked(
        inputs.lm, config.temperature, {}, total_length,
        DeriveSeed(manifest.seed, kNullStream, i));
    const std::vector<std::string> plain_words = vocab.Decode(plain.tokens);
    result.null.kind = "null";
    result.null.index = i;
    fill(result.null, score(plain.tokens, plain_words, nullptr));
    result.null.nll = Nll(inputs.lm, plain.tokens);

    for (std::size_t r = 0; r < manifest.attack_rates.size(); ++r) {
      AttackConfig attack{*inputs.synonyms, manifest.attack_rates[r],
                          DeriveSeed(manifest.seed, kAttackStreamBase + r, i)};
      const std::vector<std::string> words =
          SynonymAttack(marked_words, attack);
      const std::vector<TokenId> tokens = vocab.Encode(words);
      TextRow row;
      row.kind = "attacked";
      row.rate = attack.rate;
      row.index = i;
      fill(row, score(tokens, words, nullptr));
      row.nll = Nll(inputs.lm, tokens);
      result.attacked.push_back(row);
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(manifest.n_texts)));
  if (workers == 1) {
    for (std::size_t i = 0; i < manifest.n_texts; ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < manifest.n_texts; i = next++) {
          try {
            process(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentReport report;
  report.manifest = manifest;
  report.delta_base = config.delta_base;
  std::vector<double> nll_marked;
  std::vector<double> nll_null;
  std::array<double, 3> contribution{};
  for (const auto& result : results) report.rows.push_back(result.watermarked);
  for (const auto& result : results) report.rows.push_back(result.null);
  for (std::size_t r = 0; r < manifest.attack_rates.size(); ++r) {
    for (const auto& result : results) report.rows.push_back(result.attacked[r]);
  }
  for (const auto& result : results) {
    nll_marked.push_back(result.watermarked.nll);
    nll_null.push_back(result.null.nll);
    for (std::size_t c = 0; c < contribution.size(); ++c) {
      contribution[c] += result.abs_contribution[c];
    }
  }
  report.nll_watermarked = Mean(nll_marked);
  report.nll_null = Mean(nll_null);
  const double total = contribution[0] + contribution[1] + contribution[2];
  if (total > 0.0) {
    for (std::size_t c = 0; c < contribution.size(); ++c) {
      report.category_shares[c] = contribution[c] / total;
    }
  }

  report.uniform =
      Summarize(report.Scores(false), manifest.fpr, manifest.threshold);
  report.weighted =
      Summarize(report.Scores(true), manifest.fpr, manifest.threshold);
  for (const double rate : manifest.attack_rates) {
    AttackSummary a;
    a.rate = rate;
    a.uniform = Summarize(report.AttackedScores(rate, false), manifest.fpr,
                          manifest.threshold);
    a.weighted = Summarize(report.AttackedScores(rate, true), manifest.fpr,
                           manifest.threshold);
    report.attacks.push_back(a);
  }
  return report;
}

ExperimentReport RunExperiment(const ExperimentManifest& manifest,
                               unsigned threads) {
  CheckReadable(manifest.table_path, "table_path");
  CheckReadable(manifest.lm_path, "lm_path");
  CheckReadable(manifest.lexicon_path, "lexicon_path");
  if (!manifest.attack_rates.empty()) {
    CheckReadable(manifest.synonyms_path, "synonyms_path");
  }

  const LambdaTable table = LoadTableFile(manifest.table_path);
  const ToyLM lm = ToyLM::LoadFile(manifest.lm_path);
  const Tagset& tagset =
      Tagset::Builtin(manifest.tagset.empty() ? table.tagset_id()
                                              : manifest.tagset);
  std::ifstream lexicon_in(manifest.lexicon_path);
  const LexiconTagger tagger = LexiconTagger::Read(lexicon_in, tagset);

  std::optional<SynonymMap> synonyms;
  if (!manifest.synonyms_path.empty()) {
    std::ifstream in(manifest.synonyms_path);
    if (!in) {
      throw ConfigError("cannot open synonyms '" + manifest.synonyms_path + "'");
    }
    synonyms = ReadSynonyms(in);
  }
  const ExperimentInputs inputs{table, lm, tagger, tagset,
                                synonyms ? &*synonyms : nullptr};
  return RunExperiment(manifest, inputs, threads);
}

}  // namespace lingmark
