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

#ifndef LINGMARK_WATERMARK_H_
#define LINGMARK_WATERMARK_H_

// Watermark insertion over any logit-producing language model: the static
// green-list bias and its adaptive variant whose strength follows the
// indeterminacy of the current POS context.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingmark/greenlist.h"
#include "lingmark/indeterminacy.h"
#include "lingmark/tagged_corpus.h"
#include "lingmark/vocabulary.h"

namespace lingmark {

using LogitsVector = std::vector<double>;
using ProbVector = std::vector<double>;

// Contract: Logits() returns vocab().size() finite values and is a pure
// function of the prefix.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual const Vocabulary& vocab() const = 0;
  virtual LogitsVector Logits(std::span<const TokenId> prefix) const = 0;
};

enum class WatermarkMode {
  kStatic,    // fixed delta on every step
  kAdaptive,  // delta * lambda(context)
};

// Accepts "kgw"/"static" and "stela"/"adaptive".
WatermarkMode ParseWatermarkMode(std::string_view name);
std::string_view WatermarkModeName(WatermarkMode mode);

inline constexpr double kDefaultGamma = 0.5;
inline constexpr double kDefaultStaticDelta = 2.0;
inline constexpr double kDefaultTemperature = 0.7;

struct WatermarkConfig {
  double gamma = kDefaultGamma;
  double delta_base = kDefaultStaticDelta;
  int k = 2;
  WatermarkMode mode = WatermarkMode::kAdaptive;
  WatermarkKey key;
  double temperature = kDefaultTemperature;

  // Throws ConfigError if any field is out of range.
  void Validate() const;
};

// target_strength / mean_lambda, so the average adaptive bias matches a
// static bias of `target_strength`.
double CalibratedDelta(const LambdaTable& table,
                       double target_strength = kDefaultStaticDelta);

// Max-subtracted softmax of logits / temperature. Throws ConfigError on
// temperature <= 0 and Error on non-finite logits.
ProbVector Softmax(std::span<const double> logits, double temperature = 1.0);

// delta_base * lambda; throws ConfigError when lambda is outside [0, 1].
double AdaptiveDelta(double delta_base, double lambda);

// Adds `delta` to every green entry. A zero delta returns an exact copy.
LogitsVector ApplyBias(std::span<const double> logits,
                       const GreenPartition& green, double delta);

// Multinomial draws from a std::mt19937_64 stream. Uniforms are built from
// the top 53 bits of each draw so results do not depend on the standard
// library's distribution implementations.
class TokenSampler {
 public:
  explicit TokenSampler(std::uint64_t seed) : engine_(seed) {}

  double NextUniform();
  // Draws an index with probability proportional to `probs`, never
  // returning special vocabulary ids.
  TokenId Sample(std::span<const double> probs);

 private:
  std::mt19937_64 engine_;
};

struct GenerationStep {
  TokenId token = 0;
  PosContext context;
  double lambda = 0.0;
  double delta = 0.0;
  bool biased = false;  // false for warm-up steps without a previous token
                        // or a full context, and for unwatermarked runs
  bool green = false;
};

struct GenerationRecord {
  std::vector<TokenId> tokens;  // generated tokens only, prompt excluded
  std::vector<GenerationStep> steps;

  bool operator==(const GenerationRecord& other) const {
    return tokens == other.tokens;
  }
};

// Generates `length` watermarked tokens after `prompt`. The prompt must be
// empty or hold at least k-1 tokens. With an empty prompt the first k-1
// tokens are sampled without bias so that biased positions coincide with
// the positions the detector scores. Reproducible from (inputs, rng_seed).
GenerationRecord Generate(const LanguageModel& lm, const Tagger& tagger,
                          const LambdaTable& table,
                          const WatermarkConfig& config,
                          std::span<const TokenId> prompt, std::size_t length,
                          std::uint64_t rng_seed);

// Plain temperature sampling with the same sampler and step structure.
GenerationRecord GenerateUnwatermarked(const LanguageModel& lm,
                                       double temperature,
                                       std::span<const TokenId> prompt,
                                       std::size_t length,
                                       std::uint64_t rng_seed);

}  // namespace lingmark

#endif  // LINGMARK_WATERMARK_H_
