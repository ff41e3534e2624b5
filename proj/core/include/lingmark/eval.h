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

#ifndef LINGMARK_EVAL_H_
#define LINGMARK_EVAL_H_

// Detection metrics and the tag-preserving synonym substitution attack.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lingmark/tagged_corpus.h"

namespace lingmark {

// Scores of watermarked texts (positives) and unwatermarked ones
// (negatives).
struct ScorePair {
  std::vector<double> positives;
  std::vector<double> negatives;
};

// The threshold is the smallest negative score v such that at most
// floor(fpr * N) negatives score strictly above v; returns the fraction of
// positives strictly above it. Ties count against the detector. Throws
// ConfigError on an empty side or fpr outside (0, 1).
double TprAtFpr(const ScorePair& scores, double fpr);

// Maximum F1 over thresholds drawn from the observed scores, predicting
// positive when score >= threshold.
double BestF1(const ScorePair& scores);

using SynonymMap = std::map<std::string, std::vector<std::string>>;

struct AttackConfig {
  SynonymMap synonyms;
  double rate = 0.0;
  std::uint64_t seed = 0;
};

// Each word with alternatives is replaced with probability `rate` by one of
// them chosen uniformly. Deterministic given the seed; length preserving.
std::vector<std::string> SynonymAttack(std::span<const std::string> words,
                                       const AttackConfig& config);

// Throws ConfigError if any alternative is tagged differently from the word
// it replaces.
void ValidateSynonyms(const SynonymMap& synonyms, const LexiconTagger& tagger);

// Up to `max_alternatives` other lexicon words with the same tag per word,
// picked deterministically from `seed`.
SynonymMap BuildTagSynonyms(const LexiconTagger& tagger,
                            std::size_t max_alternatives, std::uint64_t seed);

// "word<TAB>alt1 alt2 ..." per line.
SynonymMap ReadSynonyms(std::istream& in);
void WriteSynonyms(std::ostream& out, const SynonymMap& synonyms);

}  // namespace lingmark

#endif  // LINGMARK_EVAL_H_
