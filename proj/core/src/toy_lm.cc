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

#include "lingmark/toy_lm.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "lingmark/error.h"
#include "lingmark/indeterminacy.h"

namespace lingmark {
namespace {

using json = nlohmann::json;

// Last `width` tokens of <s>^width + prefix.
std::vector<TokenId> PaddedHistory(std::span<const TokenId> prefix,
                                   std::size_t width) {
  std::vector<TokenId> history(width, Vocabulary::kBosId);
  const std::size_t take = std::min(width, prefix.size());
  std::copy(prefix.end() - static_cast<std::ptrdiff_t>(take), prefix.end(),
            history.end() - static_cast<std::ptrdiff_t>(take));
  return history;
}

std::size_t Categorical(std::span<const double> weights, double u) {
  double cumulative = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last = i;
    if (u < cumulative) return i;
  }
  return last;
}

}  // namespace

ToyLM::ToyLM(int order, double smoothing_k, Vocabulary vocab,
             std::vector<Table> tables)
    : order_(order),
      smoothing_(smoothing_k),
      vocab_(std::move(vocab)),
      tables_(std::move(tables)) {}

ToyLM ToyLM::Train(std::span<const TaggedSentence> sentences, int order,
                   double smoothing_k) {
  if (sentences.empty()) throw ConfigError("cannot train on an empty corpus");
  if (order < 1) throw ConfigError("LM order must be >= 1");
  if (!(smoothing_k > 0.0) || !std::isfinite(smoothing_k)) {
    throw ConfigError("smoothing k must be > 0");
  }

  // Sorted so that ids do not depend on sentence order.
  std::set<std::string> words;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence.tokens) words.insert(token.surface);
  }
  const std::vector<std::string> sorted(words.begin(), words.end());
  Vocabulary vocab(sorted);

  const auto width = static_cast<std::size_t>(order - 1);
  std::vector<Table> tables(static_cast<std::size_t>(order));
  std::vector<TokenId> sequence;
  for (const auto& sentence : sentences) {
    sequence.assign(width, Vocabulary::kBosId);
    for (const auto& token : sentence.tokens) {
      sequence.push_back(*vocab.Find(token.surface));
    }
    sequence.push_back(Vocabulary::kEosId);
    for (std::size_t j = width; j < sequence.size(); ++j) {
      for (std::size_t n = 1; n <= static_cast<std::size_t>(order); ++n) {
        std::vector<TokenId> history(
            sequence.begin() + static_cast<std::ptrdiff_t>(j - (n - 1)),
            sequence.begin() + static_cast<std::ptrdiff_t>(j));
        History& h = tables[n - 1][std::move(history)];
        ++h.total;
        ++h.next[sequence[j]];
      }
    }
  }
  return ToyLM(order, smoothing_k, std::move(vocab), std::move(tables));
}

const ToyLM::History* ToyLM::FindHistory(
    std::span<const TokenId> padded) const {
  for (std::size_t n = tables_.size(); n >= 1; --n) {
    const std::vector<TokenId> key(padded.end() - static_cast<std::ptrdiff_t>(n - 1),
                                   padded.end());
    const auto it = tables_[n - 1].find(key);
    if (it != tables_[n - 1].end() && it->second.total > 0) return &it->second;
  }
  return nullptr;
}

ProbVector ToyLM::Distribution(std::span<const TokenId> prefix) const {
  const auto width = static_cast<std::size_t>(order_ - 1);
  const std::vector<TokenId> history = PaddedHistory(prefix, width);
  const History* h = FindHistory(history);
  if (h == nullptr) throw Error("toy LM has no unigram counts");

  const double denominator =
      static_cast<double>(h->total) +
      smoothing_ * static_cast<double>(vocab_.size());
  ProbVector probs(vocab_.size(), smoothing_ / denominator);
  for (const auto& [token, count] : h->next) {
    probs[token] = (static_cast<double>(count) + smoothing_) / denominator;
  }
  return probs;
}

LogitsVector ToyLM::Logits(std::span<const TokenId> prefix) const {
  LogitsVector logits = Distribution(prefix);
  for (double& value : logits) value = std::log(value);
  return logits;
}

void ToyLM::Save(std::ostream& out) const {
  json doc;
  doc["version"] = kFormatVersion;
  doc["order"] = order_;
  doc["smoothing_k"] = smoothing_;
  doc["vocab"] = json(std::vector<std::string>(
      vocab_.surfaces().begin() + Vocabulary::kNumSpecial,
      vocab_.surfaces().end()));
  json counts = json::object();
  for (std::size_t n = 1; n <= tables_.size(); ++n) {
    json rows = json::array();
    for (const auto& [history, h] : tables_[n - 1]) {
      json next = json::array();
      for (const auto& [token, count] : h.next) next.push_back({token, count});
      rows.push_back({history, std::move(next)});
    }
    counts[std::to_string(n)] = std::move(rows);
  }
  doc["counts"] = std::move(counts);
  out << doc.dump() << '\n';
}

ToyLM ToyLM::Load(std::istream& in) {
  try {
    const json doc = json::parse(in);
    if (doc.at("version").get<int>() != kFormatVersion) {
      throw FormatError("unsupported LM version " + doc.at("version").dump());
    }
    const int order = doc.at("order").get<int>();
    const double smoothing = doc.at("smoothing_k").get<double>();
    if (order < 1) throw FormatError("LM order must be >= 1");
    if (!(smoothing > 0.0)) throw FormatError("smoothing k must be > 0");
    const auto words = doc.at("vocab").get<std::vector<std::string>>();
    Vocabulary vocab(words);

    std::vector<Table> tables(static_cast<std::size_t>(order));
    for (std::size_t n = 1; n <= tables.size(); ++n) {
      for (const auto& row : doc.at("counts").at(std::to_string(n))) {
        auto history = row.at(0).get<std::vector<TokenId>>();
        if (history.size() != n - 1) {
          throw FormatError("history of wrong length in order " +
                            std::to_string(n));
        }
        History h;
        for (const auto& entry : row.at(1)) {
          const auto token = entry.at(0).get<TokenId>();
          const auto count = entry.at(1).get<std::uint64_t>();
          if (token >= vocab.size()) throw FormatError("token id out of range");
          h.next[token] = count;
          h.total += count;
        }
        for (const TokenId id : history) {
          if (id >= vocab.size()) throw FormatError("token id out of range");
        }
        tables[n - 1].emplace(std::move(history), std::move(h));
      }
    }
    if (tables[0].empty()) throw FormatError("LM has no unigram counts");
    return ToyLM(order, smoothing, std::move(vocab), std::move(tables));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed LM file: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(std::string("malformed LM file: ") + e.what());
  }
}

void ToyLM::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  Save(out);
  if (!out) throw Error("failed writing '" + path + "'");
}

ToyLM ToyLM::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open LM '" + path + "'");
  return Load(in);
}

double Nll(const ToyLM& lm, std::span<const TokenId> tokens) {
  if (tokens.empty()) throw ConfigError("cannot score an empty sequence");
  double total = 0.0;
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    const ProbVector probs = lm.Distribution(tokens.first(j));
    total -= std::log(probs.at(tokens[j]));
  }
  return total / static_cast<double>(tokens.size());
}

void MarkovTagSource::Validate() const {
  const std::size_t n = tags.size();
  if (n == 0) throw ConfigError("Markov source has no tags");
  if (transition.size() != n || emissions.size() != n) {
    throw ConfigError("transition and emissions must have one row per tag");
  }
  auto check_row = [](std::span<const double> row, const std::string& what) {
    double sum = 0.0;
    for (const double p : row) {
      if (!(p >= 0.0)) throw ConfigError(what + " has a negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ConfigError(what + " sums to " + std::to_string(sum) + ", not 1");
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n) {
      throw ConfigError("transition row " + tags[i] + " has wrong width");
    }
    check_row(transition[i], "transition row " + tags[i]);
    if (emissions[i].empty()) {
      throw ConfigError("tag " + tags[i] + " has no emission words");
    }
  }
  if (!initial.empty()) {
    if (initial.size() != n) throw ConfigError("initial has wrong width");
    check_row(initial, "initial distribution");
  }
  if (min_length < 1 || max_length < min_length) {
    throw ConfigError("invalid sentence length range");
  }
}

double MarkovTagSource::AnalyticLambda(std::size_t row) const {
  return NormalizedEntropy(transition.at(row));
}

std::vector<TaggedSentence> SampleMarkovTagCorpus(
    const MarkovTagSource& source, std::size_t n_sentences,
    std::uint64_t seed) {
  source.Validate();
  const std::size_t n = source.tags.size();
  const std::vector<double> initial =
      source.initial.empty() ? std::vector<double>(n, 1.0 / static_cast<double>(n))
                             : source.initial;
  TokenSampler rng(seed);
  const std::size_t span = source.max_length - source.min_length + 1;

  std::vector<TaggedSentence> sentences;
  sentences.reserve(n_sentences);
  for (std::size_t s = 0; s < n_sentences; ++s) {
    const std::size_t length =
        source.min_length +
        std::min(span - 1, static_cast<std::size_t>(
                               rng.NextUniform() * static_cast<double>(span)));
    TaggedSentence sentence;
    sentence.tokens.reserve(length);
    std::size_t state = Categorical(initial, rng.NextUniform());
    for (std::size_t t = 0; t < length; ++t) {
      if (t > 0) state = Categorical(source.transition[state], rng.NextUniform());
      const auto& words = source.emissions[state];
      const std::size_t pick = std::min(
          words.size() - 1,
          static_cast<std::size_t>(rng.NextUniform() *
                                   static_cast<double>(words.size())));
      sentence.tokens.push_back({words[pick], source.tags[state]});
    }
    sentences.push_back(std::move(sentence));
  }
  return sentences;
}

}  // namespace lingmark
