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
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "lingmark/error.h"

namespace lingmark {
namespace {

using json = nlohmann::json;

struct Distribution {
  std::vector<double> probabilities;
  std::uint64_t occurrences = 0;
};

Distribution FromCounts(const std::map<PosTag, std::uint64_t>& counts) {
  Distribution d;
  for (const auto& [tag, count] : counts) d.occurrences += count;
  d.probabilities.reserve(counts.size());
  for (const auto& [tag, count] : counts) {
    d.probabilities.push_back(static_cast<double>(count) /
                              static_cast<double>(d.occurrences));
  }
  return d;
}

double MeanOf(const std::map<std::string, double>& entries,
              const std::map<std::string, std::uint64_t>& occurrences,
              MeanPolicy policy) {
  double sum = 0.0;
  double weight = 0.0;
  for (const auto& [key, lambda] : entries) {
    const double w = policy == MeanPolicy::kContexts
                         ? 1.0
                         : static_cast<double>(occurrences.at(key));
    sum += w * lambda;
    weight += w;
  }
  return weight > 0.0 ? sum / weight : 0.0;
}

std::string FormatDouble(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string JoinContext(std::span<const PosTag> context) {
  std::string joined;
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (i > 0) joined += '|';
    joined += context[i];
  }
  return joined;
}

PosContext SplitContext(std::string_view joined) {
  PosContext context;
  if (joined.empty()) return context;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = joined.find('|', start);
    if (bar == std::string_view::npos) {
      context.emplace_back(joined.substr(start));
      return context;
    }
    context.emplace_back(joined.substr(start, bar - start));
    start = bar + 1;
  }
}

NGramCounts::NGramCounts(int k, std::string tagset_id)
    : k_(k), tagset_id_(std::move(tagset_id)) {
  if (k < 2) {
    throw ConfigError("context size k must be >= 2, got " + std::to_string(k));
  }
  orders_.resize(static_cast<std::size_t>(k - 1));
}

void NGramCounts::AddSentence(std::span<const PosTag> tags) {
  const std::size_t length = tags.size();
  for (int n = 2; n <= k_; ++n) {
    const auto width = static_cast<std::size_t>(n);
    if (length < width) break;
    OrderCounts& counts = orders_[static_cast<std::size_t>(n - 2)];
    for (std::size_t t = width - 1; t < length; ++t) {
      PosContext context(tags.begin() + static_cast<std::ptrdiff_t>(t - width + 1),
                         tags.begin() + static_cast<std::ptrdiff_t>(t));
      ++counts.next[context][tags[t]];
      ++counts.context[std::move(context)];
    }
  }
}

void NGramCounts::Merge(const NGramCounts& other) {
  if (other.k_ != k_ || other.tagset_id_ != tagset_id_) {
    throw ConfigError("cannot merge counts with different k or tagset");
  }
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    for (const auto& [context, count] : other.orders_[i].context) {
      orders_[i].context[context] += count;
    }
    for (const auto& [context, nexts] : other.orders_[i].next) {
      auto& mine = orders_[i].next[context];
      for (const auto& [tag, count] : nexts) mine[tag] += count;
    }
  }
  for (const auto& id : other.corpus_ids_) {
    if (std::find(corpus_ids_.begin(), corpus_ids_.end(), id) ==
        corpus_ids_.end()) {
      corpus_ids_.push_back(id);
    }
  }
}

const OrderCounts& NGramCounts::order(int order) const {
  if (order < 2 || order > k_) {
    throw ConfigError("order " + std::to_string(order) + " outside [2, " +
                      std::to_string(k_) + "]");
  }
  return orders_[static_cast<std::size_t>(order - 2)];
}

NGramCounts CountNGrams(std::span<const TaggedSentence> sentences, int k,
                        std::string tagset_id) {
  NGramCounts counts(k, std::move(tagset_id));
  for (const auto& sentence : sentences) counts.AddSentence(sentence.Tags());
  return counts;
}

double NormalizedEntropy(std::span<const double> probabilities) {
  std::size_t support = 0;
  double first = 0.0;
  bool uniform = true;
  double entropy = 0.0;
  for (const double p : probabilities) {
    if (p <= 0.0) continue;
    if (support == 0) {
      first = p;
    } else if (p != first) {
      uniform = false;
    }
    ++support;
    entropy -= p * std::log(p);
  }
  if (support <= 1) return 0.0;
  if (uniform) return 1.0;
  return std::clamp(entropy / std::log(static_cast<double>(support)), 0.0,
                    1.0);
}

double NormalizedEntropy(const std::map<PosTag, std::uint64_t>& counts) {
  return NormalizedEntropy(FromCounts(counts).probabilities);
}

LambdaTable::LambdaTable(int k, std::string tagset_id, Orders orders,
                         double mean_lambda,
                         std::vector<std::string> corpus_ids)
    : k_(k),
      tagset_id_(std::move(tagset_id)),
      orders_(std::move(orders)),
      mean_lambda_(mean_lambda),
      corpus_ids_(std::move(corpus_ids)) {
  if (k_ < 2) throw FormatError("table k must be >= 2");
  if (!(mean_lambda_ >= 0.0 && mean_lambda_ <= 1.0)) {
    throw FormatError("mean_lambda " + FormatDouble(mean_lambda_) +
                      " outside [0, 1]");
  }
  const auto top = orders_.find(k_);
  if (top == orders_.end() || top->second.empty()) {
    throw FormatError("table has no entries of order k");
  }
  for (const auto& [order, entries] : orders_) {
    if (order < 2 || order > k_) {
      throw FormatError("order " + std::to_string(order) + " outside [2, k]");
    }
    for (const auto& [key, lambda] : entries) {
      if (SplitContext(key).size() != static_cast<std::size_t>(order - 1)) {
        throw FormatError("context '" + key + "' does not have " +
                          std::to_string(order - 1) + " tags");
      }
      if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw FormatError("lambda " + FormatDouble(lambda) + " for '" + key +
                          "' outside [0, 1]");
      }
    }
  }
}

std::optional<double> LambdaTable::Find(std::span<const PosTag> context) const {
  const auto order = orders_.find(static_cast<int>(context.size()) + 1);
  if (order == orders_.end()) return std::nullopt;
  const auto it = order->second.find(JoinContext(context));
  if (it == order->second.end()) return std::nullopt;
  return it->second;
}

double LambdaTable::Lookup(std::span<const PosTag> context) const {
  const std::size_t longest =
      std::min(context.size(), static_cast<std::size_t>(k_ - 1));
  for (std::size_t length = longest; length >= 1; --length) {
    if (auto hit = Find(context.last(length))) return *hit;
  }
  return mean_lambda_;
}

LambdaTable LambdaTable::WithConstant(double value) const {
  Orders orders = orders_;
  for (auto& [order, entries] : orders) {
    for (auto& [key, lambda] : entries) lambda = value;
  }
  return LambdaTable(k_, tagset_id_, std::move(orders), value, corpus_ids_);
}

LambdaTable BuildLambdaTable(const NGramCounts& counts, MeanPolicy policy) {
  if (counts.empty()) {
    throw ConfigError("cannot build a lambda table from empty counts");
  }
  LambdaTable::Orders orders;
  std::map<std::string, std::uint64_t> top_occurrences;
  for (int n = 2; n <= counts.k(); ++n) {
    auto& entries = orders[n];
    for (const auto& [context, nexts] : counts.order(n).next) {
      const std::string key = JoinContext(context);
      entries.emplace(key, NormalizedEntropy(nexts));
      if (n == counts.k()) {
        top_occurrences.emplace(key, counts.order(n).context.at(context));
      }
    }
  }
  const double mean = MeanOf(orders.at(counts.k()), top_occurrences, policy);
  return LambdaTable(counts.k(), counts.tagset_id(), std::move(orders), mean,
                     counts.corpus_ids());
}

LambdaTable MergeTablesByProbability(const NGramCounts& a,
                                     const NGramCounts& b, MeanPolicy policy) {
  if (a.k() != b.k()) {
    throw ConfigError("cannot merge tables with k=" + std::to_string(a.k()) +
                      " and k=" + std::to_string(b.k()));
  }
  if (a.tagset_id() != b.tagset_id()) {
    throw ConfigError("cannot merge tables over tagsets '" + a.tagset_id() +
                      "' and '" + b.tagset_id() + "'");
  }
  if (a.empty() && b.empty()) {
    throw ConfigError("cannot build a lambda table from empty counts");
  }

  LambdaTable::Orders orders;
  std::map<std::string, std::uint64_t> top_occurrences;
  for (int n = 2; n <= a.k(); ++n) {
    const auto& next_a = a.order(n).next;
    const auto& next_b = b.order(n).next;
    std::map<PosContext, std::map<PosTag, double>> averaged;
    std::map<PosContext, std::uint64_t> occurrences;

    auto accumulate = [&](const auto& source, const auto& other) {
      for (const auto& [context, nexts] : source) {
        const Distribution d = FromCounts(nexts);
        const double share = other.contains(context) ? 0.5 : 1.0;
        auto& target = averaged[context];
        std::size_t i = 0;
        for (const auto& [tag, count] : nexts) {
          target[tag] += share * d.probabilities[i++];
        }
        occurrences[context] += d.occurrences;
      }
    };
    accumulate(next_a, next_b);
    accumulate(next_b, next_a);

    auto& entries = orders[n];
    for (const auto& [context, distribution] : averaged) {
      std::vector<double> probabilities;
      probabilities.reserve(distribution.size());
      for (const auto& [tag, p] : distribution) probabilities.push_back(p);
      const std::string key = JoinContext(context);
      entries.emplace(key, NormalizedEntropy(probabilities));
      if (n == a.k()) top_occurrences.emplace(key, occurrences.at(context));
    }
  }

  std::vector<std::string> corpus_ids = a.corpus_ids();
  for (const auto& id : b.corpus_ids()) {
    if (std::find(corpus_ids.begin(), corpus_ids.end(), id) ==
        corpus_ids.end()) {
      corpus_ids.push_back(id);
    }
  }
  const double mean = MeanOf(orders.at(a.k()), top_occurrences, policy);
  return LambdaTable(a.k(), a.tagset_id(), std::move(orders), mean,
                     std::move(corpus_ids));
}

void SaveTable(const LambdaTable& table, std::ostream& out) {
  // Keys are emitted in sorted order: corpus_ids, k, mean_lambda, orders,
  // tagset_id, version.
  out << "{\n  \"corpus_ids\": [";
  for (std::size_t i = 0; i < table.corpus_ids().size(); ++i) {
    out << (i ? ", " : "") << json(table.corpus_ids()[i]).dump();
  }
  out << "],\n  \"k\": " << table.k() << ",\n  \"mean_lambda\": "
      << FormatDouble(table.mean_lambda()) << ",\n  \"orders\": {";
  bool first_order = true;
  for (const auto& [order, entries] : table.orders()) {
    out << (first_order ? "\n" : ",\n") << "    \""
        << std::to_string(order) << "\": {";
    first_order = false;
    bool first_entry = true;
    for (const auto& [key, lambda] : entries) {
      out << (first_entry ? "\n" : ",\n") << "      " << json(key).dump()
          << ": " << FormatDouble(lambda);
      first_entry = false;
    }
    out << (entries.empty() ? "}" : "\n    }");
  }
  out << "\n  },\n  \"tagset_id\": " << json(table.tagset_id()).dump()
      << ",\n  \"version\": " << kLambdaTableVersion << "\n}\n";
}

LambdaTable LoadTable(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("table is not valid JSON: ") + e.what());
  }
  auto require = [&](const char* field) -> const json& {
    if (!doc.is_object() || !doc.contains(field)) {
      throw FormatError(std::string("table is missing field '") + field + "'");
    }
    return doc.at(field);
  };

  const json& version = require("version");
  if (!version.is_number_integer() ||
      version.get<int>() != kLambdaTableVersion) {
    throw FormatError("unsupported table version " + version.dump());
  }
  const json& k = require("k");
  if (!k.is_number_integer()) throw FormatError("table field 'k' must be an integer");
  const json& tagset_id = require("tagset_id");
  if (!tagset_id.is_string()) throw FormatError("'tagset_id' must be a string");
  const json& mean = require("mean_lambda");
  if (!mean.is_number()) throw FormatError("'mean_lambda' must be a number");
  const json& corpus_ids = require("corpus_ids");
  if (!corpus_ids.is_array()) throw FormatError("'corpus_ids' must be an array");
  std::vector<std::string> ids;
  for (const auto& id : corpus_ids) {
    if (!id.is_string()) throw FormatError("corpus id must be a string");
    ids.push_back(id.get<std::string>());
  }
  const json& orders_json = require("orders");
  if (!orders_json.is_object()) throw FormatError("'orders' must be an object");

  LambdaTable::Orders orders;
  for (const auto& [order_key, entries] : orders_json.items()) {
    int order = 0;
    try {
      std::size_t used = 0;
      order = std::stoi(order_key, &used);
      if (used != order_key.size()) throw std::invalid_argument(order_key);
    } catch (const std::exception&) {
      throw FormatError("order key '" + order_key + "' is not an integer");
    }
    if (!entries.is_object()) throw FormatError("order entries must be an object");
    auto& target = orders[order];
    for (const auto& [context, lambda] : entries.items()) {
      if (!lambda.is_number()) {
        throw FormatError("corrupt entry '" + context + "': not a number");
      }
      target.emplace(context, lambda.get<double>());
    }
  }
  return LambdaTable(k.get<int>(), tagset_id.get<std::string>(),
                     std::move(orders), mean.get<double>(), std::move(ids));
}

void SaveTableFile(const LambdaTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  SaveTable(table, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

LambdaTable LoadTableFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open table '" + path + "'");
  return LoadTable(in);
}

}  // namespace lingmark
