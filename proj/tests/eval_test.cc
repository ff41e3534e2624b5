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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lingmark/error.h"
#include "testing/oracles.h"

namespace lingmark {
namespace {

TEST(TprAtFprTest, Separated) {
  const ScorePair s{{5, 6, 7}, {0, 1, 2}};
  for (const double fpr : {0.01, 0.05, 0.5, 0.99}) {
    EXPECT_EQ(TprAtFpr(s, fpr), 1.0);
  }
}

TEST(TprAtFprTest, HundredRanks) {
  ScorePair s;
  for (int i = 1; i <= 100; ++i) s.negatives.push_back(i);
  s.positives.assign(10, 99.0);
  // Five negatives (96..100) may exceed the threshold, which lands on 95.
  EXPECT_EQ(TprAtFpr(s, 0.05), 1.0);
  s.positives = {95.0, 95.5, 96.0};
  EXPECT_DOUBLE_EQ(TprAtFpr(s, 0.05), 2.0 / 3.0);
}

TEST(TprAtFprTest, TiesCountAgainstDetector) {
  const ScorePair s{{1.0, 1.0}, {1.0, 1.0, 1.0, 1.0}};
  EXPECT_EQ(TprAtFpr(s, 0.3), 0.0);
}

TEST(TprAtFprTest, ExchangeableScoresGiveFpr) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  ScorePair s;
  for (int i = 0; i < 20000; ++i) {
    s.positives.push_back(n(rng));
    s.negatives.push_back(n(rng));
  }
  EXPECT_NEAR(TprAtFpr(s, 0.05), 0.05, 0.01);
}

TEST(TprAtFprTest, Errors) {
  EXPECT_THROW(TprAtFpr({{}, {1}}, 0.05), ConfigError);
  EXPECT_THROW(TprAtFpr({{1}, {}}, 0.05), ConfigError);
  EXPECT_THROW(TprAtFpr({{1}, {1}}, 0.0), ConfigError);
  EXPECT_THROW(TprAtFpr({{1}, {1}}, 1.0), ConfigError);
}

TEST(BestF1Test, Examples) {
  EXPECT_EQ(BestF1({{5, 6}, {1, 2, 3}}), 1.0);
  // Identical scores: every text predicted positive, F1 = 2P / (2P + N).
  const ScorePair same{{2, 2, 2}, {2, 2, 2, 2, 2}};
  EXPECT_DOUBLE_EQ(BestF1(same), 6.0 / 11.0);
  EXPECT_THROW(BestF1({{}, {1}}), ConfigError);
}

TEST(MetricOracleTest, MatchesBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const ScorePair s = testing::RandomScores(rng, 200);
    for (const double fpr : {0.01, 0.05, 0.1, 0.25, 0.5}) {
      EXPECT_EQ(TprAtFpr(s, fpr), testing::BruteTprAtFpr(s, fpr));
    }
    EXPECT_EQ(BestF1(s), testing::BruteBestF1(s));
  }
}

SynonymMap Synonyms() {
  return {{"big", {"large", "huge"}}, {"cat", {"kitten"}}, {"dog", {}}};
}

TEST(SynonymAttackTest, RateZeroAndOne) {
  const std::vector<std::string> words = {"the", "big", "cat", "dog"};
  EXPECT_EQ(SynonymAttack(words, {Synonyms(), 0.0, 1}), words);
  const SynonymMap single = {{"a", {"x"}}, {"b", {"y"}}};
  const std::vector<std::string> ab = {"a", "b", "a"};
  EXPECT_EQ(SynonymAttack(ab, {single, 1.0, 1}),
            (std::vector<std::string>{"x", "y", "x"}));
  EXPECT_THROW(SynonymAttack(ab, {single, 1.5, 1}), ConfigError);
}

TEST(SynonymAttackTest, DeterministicLengthAndTagPreserving) {
  std::mt19937_64 rng(3);
  const LexiconTagger tagger({{"big", "ADJ"}, {"large", "ADJ"}, {"huge", "ADJ"},
                              {"cat", "NOUN"}, {"kitten", "NOUN"}, {"dog", "NOUN"},
                              {"the", "DET"}},
                             "X");
  const SynonymMap syn = Synonyms();
  ValidateSynonyms(syn, tagger);
  const std::vector<std::string> pool = {"the", "big", "cat", "dog", "zz"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> words;
    for (std::size_t i = rng() % 30; i > 0; --i) words.push_back(pool[rng() % 5]);
    const AttackConfig config{syn, (rng() % 11) / 10.0, rng()};
    const auto out = SynonymAttack(words, config);
    EXPECT_EQ(out, SynonymAttack(words, config));
    EXPECT_EQ(tagger.Tag(out), tagger.Tag(words));
  }
  const SynonymMap cross = {{"cat", {"big"}}};
  EXPECT_THROW(ValidateSynonyms(cross, tagger), ConfigError);
}

TEST(SynonymAttackTest, ReplacementCountConcentrates) {
  const SynonymMap syn = {{"w", {"v"}}};
  const std::vector<std::string> words(10000, "w");
  const auto out = SynonymAttack(words, {syn, 0.5, 77});
  const auto replaced = std::count(out.begin(), out.end(), "v");
  EXPECT_NEAR(static_cast<double>(replaced), 5000.0, 150.0);
}

TEST(SynonymsTest, BuildReadWrite) {
  std::unordered_map<std::string, PosTag> lexicon;
  for (int i = 0; i < 10; ++i) lexicon["n" + std::to_string(i)] = "NOUN";
  lexicon["v0"] = "VERB";
  const LexiconTagger tagger(lexicon, "X");
  const SynonymMap syn = BuildTagSynonyms(tagger, 3, 5);
  EXPECT_EQ(syn, BuildTagSynonyms(tagger, 3, 5));
  ValidateSynonyms(syn, tagger);
  EXPECT_FALSE(syn.count("v0") && !syn.at("v0").empty());
  for (const auto& [w, alts] : syn) {
    EXPECT_LE(alts.size(), 3u);
    for (const auto& a : alts) EXPECT_NE(a, w);
  }
  std::stringstream buffer;
  WriteSynonyms(buffer, syn);
  EXPECT_EQ(ReadSynonyms(buffer), syn);
  std::istringstream bad("novalue\n");
  EXPECT_THROW(ReadSynonyms(bad), ParseError);
}

}  // namespace
}  // namespace lingmark
