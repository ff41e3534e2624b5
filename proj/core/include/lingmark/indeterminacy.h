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

#ifndef LINGMARK_INDETERMINACY_H_
#define LINGMARK_INDETERMINACY_H_

// Linguistic indeterminacy: the normalized conditional entropy of the next
// POS tag given the k-1 preceding tags, estimated from tagged corpora and
// served through a lookup table with suffix backoff.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingmark/tagged_corpus.h"

namespace lingmark {

using PosContext = std::vector<PosTag>;

// Joins a context with '|' ("DET|ADJ"). The empty context joins to "".
std::string JoinContext(std::span<const PosTag> context);
PosContext SplitContext(std::string_view joined);

// Counts for one n-gram order: contexts of order-1 tags and their
// continuations.
struct OrderCounts {
  std::map<PosContext, std::uint64_t> context;
  std::map<PosContext, std::map<PosTag, std::uint64_t>> next;

  bool operator==(const OrderCounts&) const = default;
};

// Counts for every order 2..k, filled in a single pass. Contexts never cross
// sentence boundaries.
class NGramCounts {
 public:
  // Throws ConfigError when k < 2.
  explicit NGramCounts(int k, std::string tagset_id = {});

  void AddSentence(std::span<const PosTag> tags);
  // Adds another shard's counts. Throws ConfigError on a k or tagset
  // mismatch.
  void Merge(const NGramCounts& other);

  int k() const { return k_; }
  const std::string& tagset_id() const { return tagset_id_; }
  std::vector<std::string>& corpus_ids() { return corpus_ids_; }
  const std::vector<std::string>& corpus_ids() const { return corpus_ids_; }

  // `order` in [2, k].
  const OrderCounts& order(int order) const;
  const OrderCounts& top() const { return order(k_); }
  bool empty() const { return top().context.empty(); }

  bool operator==(const NGramCounts&) const = default;

 private:
  int k_;
  std::string tagset_id_;
  std::vector<std::string> corpus_ids_;
  std::vector<OrderCounts> orders_;  // index 0 holds order 2
};

NGramCounts CountNGrams(std::span<const TaggedSentence> sentences, int k,
                        std::string tagset_id = {});

// H(P) / log(K) over a next-tag count distribution; 0 when only one tag was
// observed, exactly 1 when all observed tags are equally frequent.
double NormalizedEntropy(const std::map<PosTag, std::uint64_t>& counts);
// Same over a probability vector, ignoring zero entries.
double NormalizedEntropy(std::span<const double> probabilities);

// How the table-wide mean is taken.
enum class MeanPolicy {
  kContexts,     // unweighted over distinct top-order contexts
  kOccurrences,  // weighted by how often each context occurred
};

class LambdaTable {
 public:
  // order -> (joined context -> lambda). Orders run 2..k and the top order
  // must be non-empty. Throws FormatError on any invariant violation.
  using Orders = std::map<int, std::map<std::string, double>>;

  LambdaTable(int k, std::string tagset_id, Orders orders, double mean_lambda,
              std::vector<std::string> corpus_ids);

  int k() const { return k_; }
  const std::string& tagset_id() const { return tagset_id_; }
  double mean_lambda() const { return mean_lambda_; }
  const std::vector<std::string>& corpus_ids() const { return corpus_ids_; }
  const Orders& orders() const { return orders_; }
  // Top-order entries.
  const std::map<std::string, double>& entries() const {
    return orders_.at(k_);
  }

  // Exact entry for a full-length context of any stored order.
  std::optional<double> Find(std::span<const PosTag> context) const;

  // Total lookup. Only the last k-1 tags of `context` are considered. Tries
  // the longest suffix first, backing off through lower orders, and returns
  // mean_lambda when nothing matches.
  double Lookup(std::span<const PosTag> context) const;

  // Copy with every entry of every order and the mean set to `value`.
  LambdaTable WithConstant(double value) const;

  bool operator==(const LambdaTable&) const = default;

 private:
  int k_;
  std::string tagset_id_;
  Orders orders_;
  double mean_lambda_;
  std::vector<std::string> corpus_ids_;
};

LambdaTable BuildLambdaTable(const NGramCounts& counts,
                             MeanPolicy policy = MeanPolicy::kContexts);

// Averages conditional next-tag distributions of two sources context by
// context. A context seen in one source only keeps that source's
// distribution. Throws ConfigError on a k or tagset mismatch.
LambdaTable MergeTablesByProbability(const NGramCounts& a,
                                     const NGramCounts& b,
                                     MeanPolicy policy = MeanPolicy::kContexts);

inline double LookupLambda(const LambdaTable& table,
                           std::span<const PosTag> context) {
  return table.Lookup(context);
}

// Versioned JSON, lambda values written with 17 significant digits.
inline constexpr int kLambdaTableVersion = 1;
void SaveTable(const LambdaTable& table, std::ostream& out);
LambdaTable LoadTable(std::istream& in);
void SaveTableFile(const LambdaTable& table, const std::string& path);
LambdaTable LoadTableFile(const std::string& path);

}  // namespace lingmark

#endif  // LINGMARK_INDETERMINACY_H_
