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

#include "lingmark/indeterminacy.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lingmark/error.h"
#include "testing/oracles.h"

namespace lingmark {
namespace {

// -(0.75 ln 0.75 + 0.25 ln 0.25) / ln 2, evaluated offline.
constexpr double kLambda31 = 0.8112781244591328;
constexpr double kEntropy31 = 0.5623351446188083;

std::vector<TaggedSentence> Corpus(const testing::TagLists& tags) {
  return testing::ToSentences(tags);
}

TEST(ContextTest, JoinAndSplit) {
  const PosContext c = {"DET", "ADJ"};
  EXPECT_EQ(JoinContext(c), "DET|ADJ");
  EXPECT_EQ(SplitContext("DET|ADJ"), c);
  EXPECT_EQ(JoinContext({}), "");
  EXPECT_TRUE(SplitContext("").empty());
}

TEST(CountNGramsTest, DirectCounts) {
  const NGramCounts counts = CountNGrams(Corpus({{"DET", "NOUN", "VERB"}}), 2);
  const OrderCounts& top = counts.top();
  EXPECT_EQ(top.context.size(), 2u);
  EXPECT_EQ(top.context.at({"DET"}), 1u);
  EXPECT_EQ(top.context.at({"NOUN"}), 1u);
  EXPECT_EQ(top.next.at({"DET"}).at("NOUN"), 1u);
  EXPECT_EQ(top.next.at({"NOUN"}).at("VERB"), 1u);
}

TEST(CountNGramsTest, ShortSentencesAndDoubling) {
  EXPECT_TRUE(CountNGrams(Corpus({{"DET", "NOUN"}}), 3).empty());
  const auto once = CountNGrams(Corpus({{"A", "B", "C", "A", "B"}}), 3);
  const auto twice =
      CountNGrams(Corpus({{"A", "B", "C", "A", "B"}, {"A", "B", "C", "A", "B"}}), 3);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& [ctx, c] : once.order(n).context) {
      EXPECT_EQ(twice.order(n).context.at(ctx), 2 * c);
    }
  }
  EXPECT_THROW(NGramCounts(1), ConfigError);
}

TEST(CountNGramsTest, PairsPerSentence) {
  std::mt19937_64 rng(11);
  for (int k = 2; k <= 4; ++k) {
    const auto tags = testing::RandomTagLists(rng, 40, 5, 9);
    const auto counts = CountNGrams(Corpus(tags), k);
    std::uint64_t expected = 0;
    for (const auto& s : tags) {
      expected += s.size() >= static_cast<std::size_t>(k) ? s.size() - k + 1 : 0;
    }
    std::uint64_t total = 0;
    for (const auto& [ctx, c] : counts.top().context) {
      total += c;
      std::uint64_t sum_next = 0;
      for (const auto& [tag, n] : counts.top().next.at(ctx)) sum_next += n;
      EXPECT_EQ(sum_next, c);
    }
    EXPECT_EQ(total, expected);
  }
}

TEST(CountNGramsTest, PermutationAndShardInvariance) {
  std::mt19937_64 rng(5);
  auto tags = testing::RandomTagLists(rng, 60, 6, 10);
  const auto base = CountNGrams(Corpus(tags), 3);
  std::shuffle(tags.begin(), tags.end(), rng);
  EXPECT_EQ(CountNGrams(Corpus(tags), 3), base);

  const testing::TagLists a(tags.begin(), tags.begin() + 25);
  const testing::TagLists b(tags.begin() + 25, tags.end());
  NGramCounts merged = CountNGrams(Corpus(a), 3);
  merged.Merge(CountNGrams(Corpus(b), 3));
  EXPECT_EQ(merged, base);
  EXPECT_THROW(merged.Merge(CountNGrams(Corpus(a), 2)), ConfigError);
}

TEST(NormalizedEntropyTest, HandValues) {
  EXPECT_EQ(NormalizedEntropy({{"NOUN", 7}}), 0.0);
  EXPECT_EQ(NormalizedEntropy({{"NOUN", 4}, {"ADJ", 4}}), 1.0);
  EXPECT_NEAR(NormalizedEntropy({{"NOUN", 3}, {"ADJ", 1}}), kLambda31, 1e-12);
  EXPECT_NEAR(NormalizedEntropy({{"NOUN", 3}, {"ADJ", 1}}) * std::log(2.0),
              kEntropy31, 1e-12);
  const std::vector<double> p = {0.75, 0.0, 0.25};
  EXPECT_NEAR(NormalizedEntropy(p), kLambda31, 1e-12);
}

TEST(NormalizedEntropyTest, RangeProperty) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    std::map<PosTag, std::uint64_t> counts;
    for (std::size_t i = 1 + rng() % 6; i > 0; --i) {
      counts["T" + std::to_string(i)] = 1 + rng() % 20;
    }
    const double v = NormalizedEntropy(counts);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    std::set<std::uint64_t> distinct;
    for (const auto& [t, c] : counts) distinct.insert(c);
    if (counts.size() > 1 && distinct.size() == 1) EXPECT_EQ(v, 1.0);
    if (counts.size() > 1 && distinct.size() > 1) EXPECT_LT(v, 1.0);
    if (counts.size() == 1) EXPECT_EQ(v, 0.0);
  }
}

TEST(BuildLambdaTableTest, HandExample) {
  const auto table = BuildLambdaTable(CountNGrams(
      Corpus({{"DET", "NOUN"}, {"DET", "NOUN"}, {"DET", "NOUN"}, {"DET", "ADJ"},
              {"ADJ", "NOUN"}}),
      2, "ud"));
  EXPECT_NEAR(*table.Find(PosContext{"DET"}), kLambda31, 1e-4);
  EXPECT_EQ(*table.Find(PosContext{"ADJ"}), 0.0);
  EXPECT_NEAR(table.mean_lambda(), kLambda31 / 2, 1e-12);
  EXPECT_EQ(table.tagset_id(), "ud");
}

TEST(BuildLambdaTableTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 3;
    const auto tags = testing::RandomTagLists(rng, 50 + rng() % 200, 3 + rng() % 8, 12);
    const auto table = BuildLambdaTable(CountNGrams(Corpus(tags), k));
    for (int n = 2; n <= k; ++n) {
      const auto oracle = testing::BruteForceLambdas(tags, n);
      const auto& got = table.orders().at(n);
      ASSERT_EQ(got.size(), oracle.size());
      for (const auto& [ctx, v] : oracle) EXPECT_NEAR(got.at(ctx), v, 1e-9) << ctx;
    }
    EXPECT_NEAR(table.mean_lambda(),
                testing::MeanOf(testing::BruteForceLambdas(tags, k)), 1e-12);
  }
}

TEST(BuildLambdaTableTest, OccurrenceWeightedMean) {
  const auto counts = CountNGrams(
      Corpus({{"A", "B"}, {"A", "C"}, {"A", "B"}, {"A", "C"}, {"B", "C"}}), 2);
  // A: lambda 1 seen 4 times, B: lambda 0 seen once.
  EXPECT_DOUBLE_EQ(BuildLambdaTable(counts, MeanPolicy::kContexts).mean_lambda(),
                   0.5);
  EXPECT_DOUBLE_EQ(
      BuildLambdaTable(counts, MeanPolicy::kOccurrences).mean_lambda(), 0.8);
}

TEST(MergeTablesTest, AveragesProbabilities) {
  const auto a = CountNGrams(Corpus({{"DET", "NOUN"}, {"ADJ", "NOUN"}}), 2);
  const auto b = CountNGrams(Corpus({{"DET", "ADJ"}}), 2);
  const auto merged = MergeTablesByProbability(a, b);
  EXPECT_EQ(*merged.Find(PosContext{"DET"}), 1.0);
  EXPECT_EQ(*merged.Find(PosContext{"ADJ"}), 0.0);

  // Unequal sizes: A gives DET -> {NOUN 3/4, ADJ 1/4}, B gives {NOUN 1}.
  // P_avg = {NOUN 7/8, ADJ 1/8}.
  const auto c = CountNGrams(Corpus({{"DET", "NOUN"}, {"DET", "NOUN"},
                                     {"DET", "NOUN"}, {"DET", "ADJ"}}),
                             2);
  const auto d = CountNGrams(Corpus({{"DET", "NOUN"}}), 2);
  const double h = -(0.875 * std::log(0.875) + 0.125 * std::log(0.125));
  EXPECT_NEAR(*MergeTablesByProbability(c, d).Find(PosContext{"DET"}),
              h / std::log(2.0), 1e-12);
}

TEST(MergeTablesTest, IdenticalInputsMatchSingleBuild) {
  std::mt19937_64 rng(17);
  const auto counts =
      CountNGrams(Corpus(testing::RandomTagLists(rng, 200, 6, 10)), 3);
  const auto merged = MergeTablesByProbability(counts, counts);
  const auto single = BuildLambdaTable(counts);
  for (const auto& [order, entries] : single.orders()) {
    for (const auto& [ctx, v] : entries) {
      EXPECT_NEAR(merged.orders().at(order).at(ctx), v, 1e-12);
    }
  }
  EXPECT_THROW(MergeTablesByProbability(counts, NGramCounts(2)), ConfigError);
}

LambdaTable BackoffFixture() {
  LambdaTable::Orders orders;
  orders[2] = {{"A", 0.1}, {"B", 0.2}};
  orders[3] = {{"A|B", 0.4}};
  orders[4] = {{"A|B|C", 0.3}};
  return LambdaTable(4, "t", orders, 0.3, {});
}

TEST(LookupTest, ExactBackoffAndMean) {
  const LambdaTable table = BackoffFixture();
  EXPECT_EQ(table.Lookup(PosContext{"A", "B", "C"}), 0.3);
  // Unseen 3-context whose 2-suffix is stored.
  EXPECT_EQ(table.Lookup(PosContext{"C", "A", "B"}), 0.4);
  EXPECT_EQ(table.Lookup(PosContext{"C", "C", "B"}), 0.2);
  EXPECT_EQ(table.Lookup(PosContext{"C", "C", "C"}), 0.3);
  EXPECT_EQ(table.Lookup(PosContext{"B"}), 0.2);
  EXPECT_EQ(table.Lookup(PosContext{}), 0.3);
  // Only the last k-1 tags matter.
  EXPECT_EQ(table.Lookup(PosContext{"Z", "A", "B", "C"}), 0.3);
}

TEST(LookupTest, LookupAgreesWithBuiltOrders) {
  std::mt19937_64 rng(23);
  const auto tags = testing::RandomTagLists(rng, 300, 5, 10);
  const auto table = BuildLambdaTable(CountNGrams(Corpus(tags), 4));
  const auto o3 = testing::BruteForceLambdas(tags, 3);
  for (const auto& [ctx, v] : o3) {
    PosContext c = SplitContext(ctx);
    c.insert(c.begin(), "UNSEEN");
    EXPECT_NEAR(table.Lookup(c), v, 1e-9);
  }
}

TEST(SaveLoadTest, RoundTripBitExact) {
  std::mt19937_64 rng(31);
  for (int k = 2; k <= 4; ++k) {
    auto counts =
        CountNGrams(Corpus(testing::RandomTagLists(rng, 100, 7, 9)), k, "x");
    counts.corpus_ids() = {"a.conllu", "b.conllu"};
    const auto table = BuildLambdaTable(counts);
    std::stringstream buffer;
    SaveTable(table, buffer);
    const std::string first = buffer.str();
    const auto loaded = LoadTable(buffer);
    EXPECT_EQ(loaded, table);
    std::stringstream again;
    SaveTable(loaded, again);
    EXPECT_EQ(again.str(), first);
  }
}

LambdaTable Load(const std::string& text) {
  std::istringstream in(text);
  return LoadTable(in);
}

TEST(SaveLoadTest, RejectsBadFiles) {
  const std::string good =
      R"({"corpus_ids":[],"k":2,"mean_lambda":0.5,)"
      R"("orders":{"2":{"A":0.5}},"tagset_id":"ud","version":1})";
  EXPECT_EQ(Load(good).Lookup(PosContext{"A"}), 0.5);
  EXPECT_THROW(Load(R"({"corpus_ids":[],"k":2,"mean_lambda":1.5,)"
                    R"("orders":{"2":{"A":1.5}},"tagset_id":"ud","version":1})"),
               FormatError);
  EXPECT_THROW(Load(R"({"corpus_ids":[],"mean_lambda":0.5,)"
                    R"("orders":{"2":{"A":0.5}},"tagset_id":"ud","version":1})"),
               FormatError);
  EXPECT_THROW(Load(R"({"corpus_ids":[],"k":2,"mean_lambda":0.5,)"
                    R"("orders":{"2":{"A":0.5}},"tagset_id":"ud","version":9})"),
               FormatError);
  EXPECT_THROW(Load("not json"), FormatError);
  EXPECT_THROW(LoadTableFile("/nonexistent/table.json"), ConfigError);
}

TEST(LambdaTableTest, ConstructorValidates) {
  LambdaTable::Orders empty;
  empty[2] = {};
  EXPECT_THROW(LambdaTable(2, "t", empty, 0.0, {}), FormatError);
  LambdaTable::Orders bad;
  bad[2] = {{"A", -0.1}};
  EXPECT_THROW(LambdaTable(2, "t", bad, 0.0, {}), FormatError);
  LambdaTable::Orders arity;
  arity[3] = {{"A", 0.2}};
  arity[2] = {{"A", 0.2}};
  EXPECT_THROW(LambdaTable(3, "t", arity, 0.2, {}), FormatError);
}

TEST(LambdaTableTest, WithConstant) {
  const LambdaTable c = BackoffFixture().WithConstant(0.7);
  EXPECT_EQ(c.mean_lambda(), 0.7);
  EXPECT_EQ(c.Lookup(PosContext{"Q", "Q", "Q"}), 0.7);
  EXPECT_EQ(c.Lookup(PosContext{"A", "B", "C"}), 0.7);
}

}  // namespace
}  // namespace lingmark
