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

#include "lingmark/detector.h"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "lingmark/error.h"

namespace lingmark {
namespace {

void Validate(const DetectorConfig& config) {
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw ConfigError("gamma must lie in (0, 1)");
  }
  if (config.k < 2) throw ConfigError("context size k must be >= 2");
}

bool Scored(std::span<const TokenId> tokens, std::size_t i) {
  return !Vocabulary::IsBoundary(tokens[i]);
}

}  // namespace

double ZUniform(std::span<const TokenId> tokens, std::size_t vocab_size,
                const DetectorConfig& config) {
  Validate(config);
  std::size_t scored = 0;
  std::size_t green = 0;
  for (std::size_t i = static_cast<std::size_t>(config.k - 1);
       i < tokens.size(); ++i) {
    if (!Scored(tokens, i)) continue;
    ++scored;
    if (IsGreen(config.key, tokens[i - 1], tokens[i], vocab_size,
                config.gamma)) {
      ++green;
    }
  }
  if (scored == 0) throw Error("nothing to score");
  const double t = static_cast<double>(scored);
  return (static_cast<double>(green) - config.gamma * t) /
         std::sqrt(t * (config.gamma * (1.0 - config.gamma)));
}

DetectionReport ZWeighted(std::span<const TokenId> tokens,
                          std::span<const std::string> words,
                          std::size_t vocab_size, const Tagger& tagger,
                          const LambdaTable& table, const Tagset& tagset,
                          const DetectorConfig& config) {
  Validate(config);
  if (tokens.size() != words.size()) {
    throw ConfigError("token ids and words have different lengths");
  }
  const std::vector<PosTag> tags = tagger.Tag(words);
  const auto width = static_cast<std::size_t>(config.k - 1);
  const double gamma = config.gamma;

  DetectionReport report;
  for (std::size_t i = width; i < tokens.size(); ++i) {
    if (!Scored(tokens, i)) continue;
    TokenScore score;
    score.position = i;
    score.token = tokens[i];
    score.tag = tags[i];
    score.weight = table.Lookup(std::span(tags).subspan(i - width, width));
    score.green =
        IsGreen(config.key, tokens[i - 1], tokens[i], vocab_size, gamma);

    ++report.scored_tokens;
    report.sum_w += score.weight;
    report.sum_w2 += score.weight * score.weight;
    if (score.green) {
      ++report.green_count;
      report.green_weight += score.weight;
    }
    report.per_token.push_back(std::move(score));
  }
  if (report.scored_tokens == 0) throw Error("nothing to score");

  const double t = static_cast<double>(report.scored_tokens);
  const double variance = gamma * (1.0 - gamma);
  report.z_uniform = (static_cast<double>(report.green_count) - gamma * t) /
                     std::sqrt(t * variance);

  if (report.sum_w2 == 0.0) {
    report.zero_weight = true;
    report.z_weighted = 0.0;
    return report;
  }
  const double sigma = std::sqrt(variance * report.sum_w2);
  report.z_weighted = (report.green_weight - gamma * report.sum_w) / sigma;

  double total = 0.0;
  std::array<double, 3> by_category{};
  for (auto& score : report.per_token) {
    score.contribution =
        score.weight * ((score.green ? 1.0 : 0.0) - gamma) / sigma;
    const auto category =
        static_cast<std::size_t>(tagset.CategoryOf(score.tag));
    by_category[category] += std::abs(score.contribution);
    total += std::abs(score.contribution);
  }
  if (total > 0.0) {
    for (std::size_t c = 0; c < by_category.size(); ++c) {
      report.category_shares[c] = by_category[c] / total;
    }
  }
  return report;
}

Detector::Detector(const Vocabulary& vocab, const Tagger& tagger,
                   const LambdaTable& table, const Tagset& tagset,
                   DetectorConfig config)
    : vocab_(vocab),
      tagger_(tagger),
      table_(table),
      tagset_(tagset),
      config_(config) {
  Validate(config_);
}

DetectionReport Detector::Score(std::span<const std::string> words) const {
  const std::vector<TokenId> tokens = vocab_.Encode(words);
  return ZWeighted(tokens, words, vocab_.size(), tagger_, table_, tagset_,
                   config_);
}

DetectionReport Detector::Score(std::span<const TokenId> tokens) const {
  const std::vector<std::string> words = vocab_.Decode(tokens);
  return ZWeighted(tokens, words, vocab_.size(), tagger_, table_, tagset_,
                   config_);
}

std::string ReportToJson(const DetectionReport& report, bool verbose) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["scored_tokens"] = report.scored_tokens;
  doc["green_count"] = report.green_count;
  doc["green_weight"] = report.green_weight;
  doc["sum_w"] = report.sum_w;
  doc["sum_w2"] = report.sum_w2;
  doc["z_uniform"] = report.z_uniform;
  doc["z_weighted"] = report.z_weighted;
  doc["zero_weight"] = report.zero_weight;
  nlohmann::json shares;
  for (const auto category : {WordCategory::kContent, WordCategory::kFunction,
                              WordCategory::kOther}) {
    shares[std::string(CategoryName(category))] = report.share(category);
  }
  doc["category_shares"] = shares;
  if (verbose) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto& score : report.per_token) {
      tokens.push_back({{"position", score.position},
                        {"token", score.token},
                        {"tag", score.tag},
                        {"weight", score.weight},
                        {"green", score.green},
                        {"contribution", score.contribution}});
    }
    doc["per_token"] = std::move(tokens);
  }
  return doc.dump();
}

}  // namespace lingmark
