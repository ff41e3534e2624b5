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

#ifndef LINGMARK_GREENLIST_H_
#define LINGMARK_GREENLIST_H_

// Keyed green/red vocabulary partition seeded by the preceding token.
//
// Every token i gets the score
//
//   s     = key ^ prev ^ (i * 0x9E3779B97F4A7C15)
//   score = splitmix64_finalize(s + 0x9E3779B97F4A7C15)
//
// (all arithmetic mod 2^64) and the floor(gamma * |V|) tokens with the
// smallest (score, id) pairs form the green list. The mix is fixed bit for
// bit so any implementation can reproduce a partition from the public
// parameters.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lingmark/vocabulary.h"

namespace lingmark {

struct WatermarkKey {
  std::uint64_t value = 0;

  bool operator==(const WatermarkKey&) const = default;
};

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t SplitMix64(std::uint64_t state) {
  std::uint64_t z = state + kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t GreenScore(WatermarkKey key, TokenId prev,
                                   TokenId token) {
  return SplitMix64(key.value ^ static_cast<std::uint64_t>(prev) ^
                    (static_cast<std::uint64_t>(token) * kGoldenGamma));
}

// floor(gamma * vocab_size). Throws ConfigError unless 0 < gamma < 1 and
// vocab_size >= 2.
std::size_t GreenListSize(std::size_t vocab_size, double gamma);

class GreenPartition {
 public:
  GreenPartition(std::vector<TokenId> green, double gamma,
                 std::size_t vocab_size);

  // Ascending token ids.
  const std::vector<TokenId>& green() const { return green_; }
  bool Contains(TokenId token) const {
    return token < mask_.size() && mask_[token];
  }
  std::size_t size() const { return green_.size(); }
  double gamma() const { return gamma_; }
  std::size_t vocab_size() const { return mask_.size(); }

 private:
  std::vector<TokenId> green_;
  std::vector<bool> mask_;
  double gamma_;
};

GreenPartition Partition(WatermarkKey key, TokenId prev,
                         std::size_t vocab_size, double gamma);

// Membership of a single token without materializing the partition: O(|V|).
bool IsGreen(WatermarkKey key, TokenId prev, TokenId token,
             std::size_t vocab_size, double gamma);

}  // namespace lingmark

#endif  // LINGMARK_GREENLIST_H_
