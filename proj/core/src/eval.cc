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

#include "lingmark/eval.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "lingmark/error.h"
#include "lingmark/watermark.h"

namespace lingmark {
namespace {

void CheckNonEmpty(const ScorePair& scores) {
  if (scores.positives.empty() || scores.negatives.empty()) {
    throw ConfigError("metrics need at least one positive and one negative");
  }
}

}  // namespace

double TprAtFpr(const ScorePair& scores, double fpr) {
  CheckNonEmpty(scores);
  if (!(fpr > 0.0 && fpr < 1.0)) throw ConfigError("fpr must lie in (0, 1)");

  std::vector<double> negatives = scores.negatives;
  std::sort(negatives.begin(), negatives.end(), std::greater<>());
  const std::size_t n = negatives.size();
  const auto allowed = static_cast<std::size_t>(
      std::floor(fpr * static_cast<double>(n) + 1e-9));

  // In descending order the values strictly above negatives[i] are exactly
  // those before the first copy of negatives[i], so negatives[allowed] is
  // the smallest value with at most `allowed` negatives above it.
  const double threshold = negatives[std::min(allowed, n - 1)];

  std::size_t hits = 0;
  for (const double p : scores.positives) {
    if (p > threshold) ++hits;
  }
  return static_cast<double>(hits) /
         static_cast<double>(scores.positives.size());
}

double BestF1(const ScorePair& scores) {
  CheckNonEmpty(scores);
  struct Labeled {
    double score;
    bool positive;
  };
  std::vector<Labeled> all;
  all.reserve(scores.positives.size() + scores.negatives.size());
  for (const double s : scores.positives) all.push_back({s, true});
  for (const double s : scores.negatives) all.push_back({s, false});
  std::sort(all.begin(), all.end(),
            [](const Labeled& a, const Labeled& b) { return a.score > b.score; });

  const auto total_positive = static_cast<double>(scores.positives.size());
  double best = 0.0;
  double true_positive = 0.0;
  double predicted = 0.0;
  for (std::size_t i = 0; i < all.size();) {
    // Every score equal to the threshold is predicted positive.
    const double threshold = all[i].score;
    for (; i < all.size() && all[i].score == threshold; ++i) {
      predicted += 1.0;
      if (all[i].positive) true_positive += 1.0;
    }
    if (true_positive > 0.0) {
      best = std::max(best, 2.0 * true_positive / (predicted + total_positive));
    }
  }
  return best;
}

std::vector<std::string> SynonymAttack(std::span<const std::string> words,
                                       const AttackConfig& config) {
  if (!(config.rate >= 0.0 && config.rate <= 1.0)) {
    throw ConfigError("attack rate must lie in [0, 1]");
  }
  TokenSampler rng(config.seed);
  std::vector<std::string> out(words.begin(), words.end());
  for (auto& word : out) {
    const auto it = config.synonyms.find(word);
    if (it == config.synonyms.end() || it->second.empty()) continue;
    if (rng.NextUniform() >= config.rate) continue;
    const auto& alternatives = it->second;
    const std::size_t pick = std::min(
        alternatives.size() - 1,
        static_cast<std::size_t>(rng.NextUniform() *
                                 static_cast<double>(alternatives.size())));
    word = alternatives[pick];
  }
  return out;
}

void ValidateSynonyms(const SynonymMap& synonyms, const LexiconTagger& tagger) {
  for (const auto& [word, alternatives] : synonyms) {
    const PosTag& tag = tagger.TagOf(word);
    for (const auto& alternative : alternatives) {
      if (tagger.TagOf(alternative) != tag) {
        throw ConfigError("synonym '" + alternative + "' of '" + word +
                          "' is tagged " + tagger.TagOf(alternative) +
                          ", not " + tag);
      }
    }
  }
}

SynonymMap BuildTagSynonyms(const LexiconTagger& tagger,
                            std::size_t max_alternatives, std::uint64_t seed) {
  std::map<PosTag, std::vector<std::string>> by_tag;
  for (const auto& [word, tag] : tagger.lexicon()) by_tag[tag].push_back(word);
  for (auto& [tag, members] : by_tag) std::sort(members.begin(), members.end());

  TokenSampler rng(seed);
  SynonymMap synonyms;
  for (const auto& [tag, members] : by_tag) {
    if (members.size() < 2) continue;
    for (const auto& word : members) {
      std::vector<std::string> pool;
      for (const auto& other : members) {
        if (other != word) pool.push_back(other);
      }
      // Partial Fisher-Yates driven by the portable sampler.
      const std::size_t take = std::min(max_alternatives, pool.size());
      for (std::size_t i = 0; i < take; ++i) {
        const std::size_t remaining = pool.size() - i;
        const std::size_t j =
            i + std::min(remaining - 1,
                         static_cast<std::size_t>(
                             rng.NextUniform() * static_cast<double>(remaining)));
        std::swap(pool[i], pool[j]);
      }
      pool.resize(take);
      std::sort(pool.begin(), pool.end());
      synonyms.emplace(word, std::move(pool));
    }
  }
  return synonyms;
}

SynonymMap ReadSynonyms(std::istream& in) {
  SynonymMap synonyms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected 'word<TAB>alternatives'", line_no);
    }
    std::vector<std::string> alternatives;
    std::istringstream rest(line.substr(tab + 1));
    for (std::string alt; rest >> alt;) alternatives.push_back(alt);
    if (!synonyms.emplace(line.substr(0, tab), std::move(alternatives)).second) {
      throw ParseError("duplicate synonym entry", line_no);
    }
  }
  return synonyms;
}

void WriteSynonyms(std::ostream& out, const SynonymMap& synonyms) {
  for (const auto& [word, alternatives] : synonyms) {
    out << word << '\t';
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
      out << (i ? " " : "") << alternatives[i];
    }
    out << '\n';
  }
}

}  // namespace lingmark
