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

#include "lingmark/vocabulary.h"

#include "lingmark/error.h"

namespace lingmark {

Vocabulary::Vocabulary() {
  for (const std::string_view special : {kBos, kEos, kUnk}) Add(special);
}

Vocabulary::Vocabulary(std::span<const std::string> words) : Vocabulary() {
  for (const auto& word : words) {
    if (ids_.contains(word)) {
      throw ConfigError("duplicate vocabulary entry '" + word + "'");
    }
    Add(word);
  }
}

TokenId Vocabulary::Add(std::string_view word) {
  if (word.empty()) throw ConfigError("vocabulary entries must be non-empty");
  const auto [it, inserted] =
      ids_.emplace(std::string(word), static_cast<TokenId>(surfaces_.size()));
  if (inserted) surfaces_.emplace_back(word);
  return it->second;
}

const std::string& Vocabulary::Surface(TokenId id) const {
  if (id >= surfaces_.size()) {
    throw ConfigError("token id " + std::to_string(id) +
                      " outside vocabulary of size " +
                      std::to_string(surfaces_.size()));
  }
  return surfaces_[id];
}

std::optional<TokenId> Vocabulary::Find(std::string_view word) const {
  const auto it = ids_.find(std::string(word));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::IdOf(std::string_view word) const {
  return Find(word).value_or(kUnkId);
}

std::vector<TokenId> Vocabulary::Encode(
    std::span<const std::string> words) const {
  std::vector<TokenId> ids;
  ids.reserve(words.size());
  for (const auto& word : words) ids.push_back(IdOf(word));
  return ids;
}

std::vector<std::string> Vocabulary::Decode(
    std::span<const TokenId> ids) const {
  std::vector<std::string> words;
  words.reserve(ids.size());
  for (const TokenId id : ids) words.push_back(Surface(id));
  return words;
}

}  // namespace lingmark
