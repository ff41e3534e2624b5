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

#include "lingmark/watermark.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lingmark/error.h"

namespace lingmark {
namespace {

struct Watermarking {
  const Tagger& tagger;
  const LambdaTable& table;
  const WatermarkConfig& config;
};

PosContext CurrentContext(const Tagger& tagger, const Vocabulary& vocab,
                          std::span<const TokenId> sequence, int k) {
  const std::size_t width = static_cast<std::size_t>(k - 1);
  // A context-free tagger only needs the words inside the context window.
  const std::span<const TokenId> window =
      tagger.context_free() ? sequence.last(width) : sequence;
  const std::vector<std::string> words = vocab.Decode(window);
  std::vector<PosTag> tags = tagger.Tag(words);
  return PosContext(tags.end() - static_cast<std::ptrdiff_t>(width),
                    tags.end());
}

GenerationRecord Run(const LanguageModel& lm, const Watermarking* watermark,
                     double temperature, std::span<const TokenId> prompt,
                     std::size_t length, std::uint64_t rng_seed) {
  if (!(temperature > 0.0)) {
    throw ConfigError("temperature must be > 0");
  }
  const Vocabulary& vocab = lm.vocab();
  const int k = watermark ? watermark->config.k : 2;
  if (watermark && !prompt.empty() &&
      prompt.size() < static_cast<std::size_t>(k - 1)) {
    throw ConfigError("prompt has " + std::to_string(prompt.size()) +
                      " tokens; at least k-1 = " + std::to_string(k - 1) +
                      " are needed");
  }

  std::vector<TokenId> sequence(prompt.begin(), prompt.end());
  sequence.reserve(prompt.size() + length);
  GenerationRecord record;
  record.tokens.reserve(length);
  record.steps.reserve(length);
  TokenSampler sampler(rng_seed);

  for (std::size_t step = 0; step < length; ++step) {
    LogitsVector logits = lm.Logits(sequence);
    if (logits.size() != vocab.size()) {
      throw Error("language model returned " + std::to_string(logits.size()) +
                  " logits for a vocabulary of " +
                  std::to_string(vocab.size()));
    }

    GenerationStep info;
    std::optional<GreenPartition> green;
    if (watermark && sequence.size() >= static_cast<std::size_t>(k - 1)) {
      const WatermarkConfig& config = watermark->config;
      info.context = CurrentContext(watermark->tagger, vocab, sequence, k);
      info.lambda = watermark->table.Lookup(info.context);
      info.delta = config.mode == WatermarkMode::kAdaptive
                       ? AdaptiveDelta(config.delta_base, info.lambda)
                       : config.delta_base;
      info.biased = true;
      green = Partition(config.key, sequence.back(), vocab.size(),
                        config.gamma);
      logits = ApplyBias(logits, *green, info.delta);
    }

    const ProbVector probs = Softmax(logits, temperature);
    info.token = sampler.Sample(probs);
    info.green = green && green->Contains(info.token);
    sequence.push_back(info.token);
    record.tokens.push_back(info.token);
    record.steps.push_back(std::move(info));
  }
  return record;
}

}  // namespace

WatermarkMode ParseWatermarkMode(std::string_view name) {
  if (name == "stela" || name == "adaptive") return WatermarkMode::kAdaptive;
  if (name == "kgw" || name == "static") return WatermarkMode::kStatic;
  throw ConfigError("unknown watermark mode '" + std::string(name) +
                    "' (expected stela or kgw)");
}

std::string_view WatermarkModeName(WatermarkMode mode) {
  return mode == WatermarkMode::kAdaptive ? "stela" : "kgw";
}

void WatermarkConfig::Validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ConfigError("gamma must lie in (0, 1)");
  }
  if (!(delta_base >= 0.0) || !std::isfinite(delta_base)) {
    throw ConfigError("delta must be a finite value >= 0");
  }
  if (k < 2) throw ConfigError("context size k must be >= 2");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw ConfigError("temperature must be > 0");
  }
}

double CalibratedDelta(const LambdaTable& table, double target_strength) {
  if (!(table.mean_lambda() > 0.0)) {
    throw ConfigError("cannot calibrate delta: table mean lambda is 0");
  }
  return target_strength / table.mean_lambda();
}

ProbVector Softmax(std::span<const double> logits, double temperature) {
  if (!(temperature > 0.0)) throw ConfigError("temperature must be > 0");
  if (logits.empty()) throw Error("softmax of an empty logit vector");
  for (const double l : logits) {
    if (!std::isfinite(l)) throw Error("non-finite logit");
  }
  const double max = *std::max_element(logits.begin(), logits.end());
  ProbVector probs(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp((logits[i] - max) / temperature);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

double AdaptiveDelta(double delta_base, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ConfigError("lambda " + std::to_string(lambda) + " outside [0, 1]");
  }
  return delta_base * lambda;
}

LogitsVector ApplyBias(std::span<const double> logits,
                       const GreenPartition& green, double delta) {
  LogitsVector biased(logits.begin(), logits.end());
  if (delta == 0.0) return biased;
  for (const TokenId id : green.green()) {
    if (id < biased.size()) biased[id] += delta;
  }
  return biased;
}

double TokenSampler::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

TokenId TokenSampler::Sample(std::span<const double> probs) {
  double total = 0.0;
  for (std::size_t i = Vocabulary::kNumSpecial; i < probs.size(); ++i) {
    total += probs[i];
  }
  if (!(total > 0.0)) {
    throw Error("no probability mass on non-special tokens");
  }
  const double target = NextUniform() * total;
  double cumulative = 0.0;
  std::size_t last = Vocabulary::kNumSpecial;
  for (std::size_t i = Vocabulary::kNumSpecial; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last = i;
    if (target < cumulative) return static_cast<TokenId>(i);
  }
  return static_cast<TokenId>(last);
}

GenerationRecord Generate(const LanguageModel& lm, const Tagger& tagger,
                          const LambdaTable& table,
                          const WatermarkConfig& config,
                          std::span<const TokenId> prompt, std::size_t length,
                          std::uint64_t rng_seed) {
  config.Validate();
  const Watermarking watermark{tagger, table, config};
  return Run(lm, &watermark, config.temperature, prompt, length, rng_seed);
}

GenerationRecord GenerateUnwatermarked(const LanguageModel& lm,
                                       double temperature,
                                       std::span<const TokenId> prompt,
                                       std::size_t length,
                                       std::uint64_t rng_seed) {
  return Run(lm, nullptr, temperature, prompt, length, rng_seed);
}

}  // namespace lingmark
