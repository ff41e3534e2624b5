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

#include "lingmark/tagged_corpus.h"

#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "lingmark/error.h"

namespace lingmark {
namespace {

const Tagset& Ud() { return Tagset::Universal(); }

TEST(TagsetTest, UniversalGrouping) {
  EXPECT_EQ(Ud().CategoryOf("NOUN"), WordCategory::kContent);
  EXPECT_EQ(Ud().CategoryOf("DET"), WordCategory::kFunction);
  EXPECT_EQ(Ud().CategoryOf("PUNCT"), WordCategory::kOther);

  const std::set<std::string> content = {"ADJ", "ADV", "INTJ",
                                         "NOUN", "PROPN", "VERB"};
  const std::set<std::string> function = {"ADP",  "AUX", "CCONJ", "DET",
                                          "NUM",  "PART", "PRON", "SCONJ"};
  const std::set<std::string> other = {"PUNCT", "SYM", "X"};
  ASSERT_EQ(Ud().tags().size(), 17u);
  for (const auto& tag : Ud().tags()) {
    const int hits = content.count(tag) + function.count(tag) + other.count(tag);
    EXPECT_EQ(hits, 1) << tag;
    const WordCategory c = Ud().CategoryOf(tag);
    if (content.count(tag)) EXPECT_EQ(c, WordCategory::kContent);
    if (function.count(tag)) EXPECT_EQ(c, WordCategory::kFunction);
    if (other.count(tag)) EXPECT_EQ(c, WordCategory::kOther);
  }
  EXPECT_EQ(Ud().unknown_tag(), "X");
}

TEST(TagsetTest, UnknownTagThrows) {
  EXPECT_THROW(Ud().CategoryOf("ZZZ"), ConfigError);
  EXPECT_THROW(Tagset::Builtin("nope"), ConfigError);
  EXPECT_EQ(Tagset::Builtin("ptb").id(), "ptb");
  EXPECT_EQ(Tagset::PennTreebank().CategoryOf("NN"), WordCategory::kContent);
  EXPECT_EQ(Tagset::PennTreebank().CategoryOf("DT"), WordCategory::kFunction);
}

TEST(TagsetTest, RejectsDuplicatesAndSeparators) {
  using Tags = std::vector<std::pair<PosTag, WordCategory>>;
  EXPECT_THROW(Tagset("t", Tags{{"A", WordCategory::kContent},
                                {"A", WordCategory::kOther}},
                      "A"),
               ConfigError);
  EXPECT_THROW(Tagset("t", Tags{{"A|B", WordCategory::kContent}}, "A|B"),
               ConfigError);
  EXPECT_THROW(Tagset("t", Tags{{"A", WordCategory::kContent}}, "B"),
               ConfigError);
}

TEST(TagsetTest, ReadFromFile) {
  std::istringstream in("N\tcontent\nD\tfunction\nP\tother\n");
  const Tagset t = Tagset::Read(in, "mini");
  EXPECT_EQ(t.tags().size(), 3u);
  EXPECT_EQ(t.unknown_tag(), "P");
  EXPECT_EQ(t.CategoryOf("D"), WordCategory::kFunction);
}

TEST(ParseConlluTest, TwoTokenSentence) {
  std::istringstream in(
      "# sent_id = 1\n"
      "1\tthe\tthe\tDET\tDT\t_\t2\tdet\t_\t_\n"
      "2\tcat\tcat\tNOUN\tNN\t_\t0\troot\t_\t_\n"
      "\n");
  const auto sentences = ParseConllu(in, Ud());
  ASSERT_EQ(sentences.size(), 1u);
  const std::vector<TaggedToken> expected = {{"the", "DET"}, {"cat", "NOUN"}};
  EXPECT_EQ(sentences[0].tokens, expected);
}

TEST(ParseConlluTest, XposColumnAndSkippedNodes) {
  std::istringstream in(
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\tVBP\t_\t0\troot\t_\t_\n"
      "2\tn't\tnot\tPART\tRB\t_\t1\tadvmod\t_\t_\n"
      "2.1\tx\tx\tX\tXX\t_\t_\t_\t_\t_\n");
  const auto sentences =
      ParseConllu(in, Tagset::PennTreebank(), TagColumn::kXpos);
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].Tags(), (std::vector<PosTag>{"VBP", "RB"}));
  EXPECT_EQ(sentences[0].Words(), (std::vector<std::string>{"do", "n't"}));
}

TEST(ParseConlluTest, EmptyStream) {
  std::istringstream in("");
  EXPECT_TRUE(ParseConllu(in, Ud()).empty());
}

TEST(ParseConlluTest, WrongColumnCountReportsLine) {
  std::istringstream in(
      "1\tthe\tthe\tDET\tDT\t_\t2\tdet\t_\t_\n"
      "2\tcat\tNOUN\n");
  try {
    ParseConllu(in, Ud());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseConlluTest, TagOutsideTagsetIsNamed) {
  std::istringstream in("1\tcat\tcat\tZZZ\tNN\t_\t0\troot\t_\t_\n");
  try {
    ParseConllu(in, Ud());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("ZZZ"), std::string::npos);
  }
}

TEST(ParseTsvTest, Basic) {
  std::istringstream one("the\tDET\ncat\tNOUN\n\n");
  const auto s = ParseTsv(one, Ud());
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].tokens,
            (std::vector<TaggedToken>{{"the", "DET"}, {"cat", "NOUN"}}));

  std::istringstream two("a\tDET\n\nb\tNOUN\nc\tVERB\n");
  EXPECT_EQ(ParseTsv(two, Ud()).size(), 2u);

  std::istringstream bad("cat\tZZZ\n");
  EXPECT_THROW(ParseTsv(bad, Ud()), ParseError);
  std::istringstream short_line("cat\n");
  EXPECT_THROW(ParseTsv(short_line, Ud()), ParseError);
}

TEST(ParseTsvTest, RoundTripProperty) {
  std::mt19937_64 rng(7);
  const auto& tags = Ud().tags();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TaggedSentence> corpus(1 + rng() % 5);
    for (auto& s : corpus) {
      for (std::size_t i = 1 + rng() % 8; i > 0; --i) {
        s.tokens.push_back({"w" + std::to_string(rng() % 30),
                            tags[rng() % tags.size()]});
      }
    }
    std::stringstream buffer;
    WriteTsv(buffer, corpus);
    EXPECT_EQ(ParseTsv(buffer, Ud()), corpus);
  }
}

LexiconTagger CatTagger() { return LexiconTagger({{"cat", "NOUN"}}, "X"); }

TEST(LexiconTaggerTest, UnknownWordsGetUnknownTag) {
  const std::vector<std::string> words = {"cat", "zorp"};
  EXPECT_EQ(TagWords(CatTagger(), words), (std::vector<PosTag>{"NOUN", "X"}));
  EXPECT_TRUE(TagWords(CatTagger(), {}).empty());
  EXPECT_TRUE(CatTagger().context_free());
}

TEST(LexiconTaggerTest, PrefixStable) {
  const LexiconTagger tagger({{"a", "DET"}, {"b", "NOUN"}, {"c", "VERB"}}, "X");
  std::mt19937_64 rng(3);
  const std::vector<std::string> pool = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> words;
    for (std::size_t i = rng() % 12; i > 0; --i) {
      words.push_back(pool[rng() % pool.size()]);
    }
    const auto full = tagger.Tag(words);
    ASSERT_EQ(full.size(), words.size());
    for (std::size_t n = 0; n <= words.size(); ++n) {
      const auto prefix = tagger.Tag(std::span(words).first(n));
      EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), full.begin()));
    }
    EXPECT_EQ(tagger.Tag(words), full);
  }
}

TEST(LexiconTaggerTest, ReadWriteAndFromCorpus) {
  std::istringstream in("the\tDET\ncat\tNOUN\n");
  const LexiconTagger tagger = LexiconTagger::Read(in, Ud());
  EXPECT_EQ(tagger.TagOf("cat"), "NOUN");
  EXPECT_EQ(tagger.Find("dog"), nullptr);
  std::ostringstream out;
  tagger.Write(out);
  EXPECT_EQ(out.str(), "cat\tNOUN\nthe\tDET\n");

  std::istringstream dup("cat\tNOUN\ncat\tVERB\n");
  EXPECT_THROW(LexiconTagger::Read(dup, Ud()), ParseError);
  std::istringstream bad("cat\tZZZ\n");
  EXPECT_THROW(LexiconTagger::Read(bad, Ud()), ParseError);

  const std::vector<TaggedSentence> corpus = {
      {{{"run", "VERB"}, {"run", "NOUN"}, {"run", "VERB"}}},
      {{{"set", "VERB"}, {"set", "NOUN"}}}};
  const LexiconTagger learned = LexiconTagger::FromCorpus(corpus, "X");
  EXPECT_EQ(learned.TagOf("run"), "VERB");
  EXPECT_EQ(learned.TagOf("set"), "NOUN");
}

}  // namespace
}  // namespace lingmark
