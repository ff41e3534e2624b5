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

#include "lingmark/greenlist.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lingmark/error.h"

namespace lingmark {
namespace {

void CheckToken(TokenId token, std::size_t vocab_size, const char* what) {
  if (token >= vocab_size) {
    throw ConfigError(std::string(what) + " id " + std::to_string(token) +
                      " outside vocabulary of size " +
                      std::to_string(vocab_size));
  }
}

}  // namespace

std::size_t GreenListSize(std::size_t vocab_size, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ConfigError("gamma must lie in (0, 1), got " + std::to_string(gamma));
  }
  if (vocab_size < 2) {
    throw ConfigError("vocabulary must have at least 2 tokens");
  }
  // The small guard keeps e.g. 0.29 * 100 from flooring to 28.
  return static_cast<std::size_t>(
      std::floor(gamma * static_cast<double>(vocab_size) + 1e-9));
}

GreenPartition::GreenPartition(std::vector<TokenId> green, double gamma,
                               std::size_t vocab_size)
    : green_(std::move(green)), mask_(vocab_size, false), gamma_(gamma) {
  std::sort(green_.begin(), green_.end());
  for (const TokenId id : green_) {
    CheckToken(id, vocab_size, "green token");
    mask_[id] = true;
  }
}

GreenPartition Partition(WatermarkKey key, TokenId prev,
                         std::size_t vocab_size, double gamma) {
  const std::size_t green_size = GreenListSize(vocab_size, gamma);
  CheckToken(prev, vocab_size, "previous token");

  std::vector<std::pair<std::uint64_t, TokenId>> ranked(vocab_size);
  for (std::size_t i = 0; i < vocab_size; ++i) {
    const auto id = static_cast<TokenId>(i);
    ranked[i] = {GreenScore(key, prev, id), id};
  }
  auto cut = ranked.begin() + static_cast<std::ptrdiff_t>(green_size);
  std::nth_element(ranked.begin(), cut, ranked.end());

  std::vector<TokenId> green;
  green.reserve(green_size);
  for (auto it = ranked.begin(); it != cut; ++it) green.push_back(it->second);
  return GreenPartition(std::move(green), gamma, vocab_size);
}

bool IsGreen(WatermarkKey key, TokenId prev, TokenId token,
             std::size_t vocab_size, double gamma) {
  const std::size_t green_size = GreenListSize(vocab_size, gamma);
  CheckToken(prev, vocab_size, "previous token");
  CheckToken(token, vocab_size, "token");

  const std::pair<std::uint64_t, TokenId> mine{GreenScore(key, prev, token),
                                               token};
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vocab_size && rank < green_size; ++i) {
    const auto id = static_cast<TokenId>(i);
    if (std::pair{GreenScore(key, prev, id), id} < mine) ++rank;
  }
  return rank < green_size;
}

}  // namespace lingmark
