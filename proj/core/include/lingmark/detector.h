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

#ifndef LINGMARK_DETECTOR_H_
#define LINGMARK_DETECTOR_H_

// Model-free detection. Both statistics score positions k..T of the given
// text (1-based), skipping sentence-boundary tokens:
//
//   z  = (|s|_G - gamma T) / sqrt(T gamma (1 - gamma))
//   z' = (W_G - gamma sum w) / sqrt(gamma (1 - gamma) sum w^2)
//
// where w_t is the table lambda of the POS context preceding token t and
// W_G sums the weights of green tokens.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lingmark/greenlist.h"
#include "lingmark/indeterminacy.h"
#include "lingmark/tagged_corpus.h"
#include "lingmark/vocabulary.h"

namespace lingmark {

inline constexpr double kDefaultThreshold = 4.0;

struct DetectorConfig {
  WatermarkKey key;
  double gamma = 0.5;
  int k = 2;
};

struct TokenScore {
  std::size_t position = 0;  // 0-based index into the text
  TokenId token = 0;
  PosTag tag;
  double weight = 0.0;
  bool green = false;
  double contribution = 0.0;  // this token's additive share of z'
};

struct DetectionReport {
  std::size_t scored_tokens = 0;
  std::size_t green_count = 0;
  double green_weight = 0.0;  // W_G
  double sum_w = 0.0;
  double sum_w2 = 0.0;
  double z_uniform = 0.0;
  double z_weighted = 0.0;
  // Set when every scored weight is 0; z_weighted is then reported as 0.
  bool zero_weight = false;
  std::vector<TokenScore> per_token;
  // Indexed by WordCategory. Shares of the absolute per-token
  // contributions; all zero when nothing contributed.
  std::array<double, 3> category_shares{};

  double share(WordCategory category) const {
    return category_shares[static_cast<std::size_t>(category)];
  }
};

// Throws Error("nothing to score") when no position qualifies.
double ZUniform(std::span<const TokenId> tokens, std::size_t vocab_size,
                const DetectorConfig& config);

// Tags `words`, looks up one weight per scored position and fills the full
// report (z_uniform included). `tokens` and `words` must align.
DetectionReport ZWeighted(std::span<const TokenId> tokens,
                          std::span<const std::string> words,
                          std::size_t vocab_size, const Tagger& tagger,
                          const LambdaTable& table, const Tagset& tagset,
                          const DetectorConfig& config);

// Strict: true iff z > threshold.
inline bool Decide(double z, double threshold = kDefaultThreshold) {
  return z > threshold;
}

// Bundles everything verification needs: the public key, the vocabulary,
// a tagger and the lambda table. No model access.
class Detector {
 public:
  Detector(const Vocabulary& vocab, const Tagger& tagger,
           const LambdaTable& table, const Tagset& tagset,
           DetectorConfig config);

  DetectionReport Score(std::span<const std::string> words) const;
  DetectionReport Score(std::span<const TokenId> tokens) const;

  const DetectorConfig& config() const { return config_; }

 private:
  const Vocabulary& vocab_;
  const Tagger& tagger_;
  const LambdaTable& table_;
  const Tagset& tagset_;
  DetectorConfig config_;
};

// JSON object with every report field; per_token only when `verbose`.
std::string ReportToJson(const DetectionReport& report, bool verbose = false);

}  // namespace lingmark

#endif  // LINGMARK_DETECTOR_H_
