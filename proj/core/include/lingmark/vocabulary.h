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

#ifndef LINGMARK_VOCABULARY_H_
#define LINGMARK_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lingmark {

using TokenId = std::uint32_t;

// Dense id <-> surface bijection. Ids 0..2 are reserved for the sentence
// boundary markers and the out-of-vocabulary token.
class Vocabulary {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";
  static constexpr TokenId kBosId = 0;
  static constexpr TokenId kEosId = 1;
  static constexpr TokenId kUnkId = 2;
  static constexpr std::size_t kNumSpecial = 3;

  Vocabulary();
  // Special tokens first, then `words` in order. Throws ConfigError on a
  // duplicate or a word that collides with a special token.
  explicit Vocabulary(std::span<const std::string> words);

  // Returns the existing id if the word is already present.
  TokenId Add(std::string_view word);

  std::size_t size() const { return surfaces_.size(); }
  const std::string& Surface(TokenId id) const;
  std::optional<TokenId> Find(std::string_view word) const;
  // Unknown words map to kUnkId.
  TokenId IdOf(std::string_view word) const;

  static bool IsSpecial(TokenId id) { return id < kNumSpecial; }
  static bool IsBoundary(TokenId id) { return id == kBosId || id == kEosId; }

  std::vector<TokenId> Encode(std::span<const std::string> words) const;
  std::vector<std::string> Decode(std::span<const TokenId> ids) const;

  // Surfaces in id order, specials included.
  const std::vector<std::string>& surfaces() const { return surfaces_; }

  bool operator==(const Vocabulary& other) const {
    return surfaces_ == other.surfaces_;
  }

 private:
  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace lingmark

#endif  // LINGMARK_VOCABULARY_H_
