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

#ifndef LINGMARK_TOY_LM_H_
#define LINGMARK_TOY_LM_H_

// A small add-k smoothed word n-gram model, plus a Markov-chain tagged
// corpus sampler used both as a test oracle and to build the bundled toy
// data.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lingmark/tagged_corpus.h"
#include "lingmark/vocabulary.h"
#include "lingmark/watermark.h"

namespace lingmark {

inline constexpr double kDefaultSmoothing = 0.5;

// Sentences are wrapped as <s>^(order-1) w_1 ... w_n </s> during training.
// A history that was never observed backs off to its longest observed
// suffix, ending at the unigram distribution.
class ToyLM final : public LanguageModel {
 public:
  // Throws ConfigError on an empty corpus, order < 1 or smoothing <= 0.
  static ToyLM Train(std::span<const TaggedSentence> sentences, int order,
                     double smoothing_k = kDefaultSmoothing);

  const Vocabulary& vocab() const override { return vocab_; }
  LogitsVector Logits(std::span<const TokenId> prefix) const override;
  // Smoothed next-token distribution; softmax of Logits() at temperature 1.
  ProbVector Distribution(std::span<const TokenId> prefix) const;

  int order() const { return order_; }
  double smoothing_k() const { return smoothing_; }

  static constexpr int kFormatVersion = 1;
  void Save(std::ostream& out) const;
  static ToyLM Load(std::istream& in);
  void SaveFile(const std::string& path) const;
  static ToyLM LoadFile(const std::string& path);

  bool operator==(const ToyLM& other) const {
    return order_ == other.order_ && smoothing_ == other.smoothing_ &&
           vocab_ == other.vocab_ && tables_ == other.tables_;
  }

 private:
  struct History {
    std::uint64_t total = 0;
    std::map<TokenId, std::uint64_t> next;

    bool operator==(const History&) const = default;
  };
  // tables_[n - 1] holds n-gram counts keyed by their n-1 token history.
  using Table = std::map<std::vector<TokenId>, History>;

  ToyLM(int order, double smoothing_k, Vocabulary vocab,
        std::vector<Table> tables);

  const History* FindHistory(std::span<const TokenId> padded) const;

  int order_ = 1;
  double smoothing_ = kDefaultSmoothing;
  Vocabulary vocab_;
  std::vector<Table> tables_;
};

// Mean negative log-probability per token, history <s>-padded. exp() of the
// result is the toy perplexity. Throws ConfigError on an empty sequence.
double Nll(const ToyLM& lm, std::span<const TokenId> tokens);

// First-order Markov chain over tags with per-tag word emissions.
struct MarkovTagSource {
  std::vector<PosTag> tags;
  std::vector<double> initial;                 // empty means uniform
  std::vector<std::vector<double>> transition;  // row-stochastic
  std::vector<std::vector<std::string>> emissions;
  std::size_t min_length = 2;
  std::size_t max_length = 12;

  // Throws ConfigError on a non-stochastic row (tolerance 1e-9), a negative
  // entry, a tag without emissions or a bad length range.
  void Validate() const;

  // Normalized entropy of the next-tag distribution after tags[row]: the
  // value a k = 2 table converges to.
  double AnalyticLambda(std::size_t row) const;
};

// Sentence lengths are uniform in [min_length, max_length]; words are
// uniform among the tag's emissions. Deterministic given `seed`.
std::vector<TaggedSentence> SampleMarkovTagCorpus(
    const MarkovTagSource& source, std::size_t n_sentences,
    std::uint64_t seed);

// The bundled English-like UD grammar: 14 tags, an even-sized vocabulary
// (special tokens included) and no word shared between tags.
const MarkovTagSource& DefaultToyGrammar();

}  // namespace lingmark

#endif  // LINGMARK_TOY_LM_H_
