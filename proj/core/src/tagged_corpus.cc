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

#include <algorithm>
#include <istream>
#include <ostream>

#include "lingmark/error.h"

namespace lingmark {
namespace {

constexpr WordCategory kContent = WordCategory::kContent;
constexpr WordCategory kFunction = WordCategory::kFunction;
constexpr WordCategory kOther = WordCategory::kOther;

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

void CheckTag(const Tagset& tagset, const std::string& tag, std::size_t line) {
  if (!tagset.Contains(tag)) {
    throw ParseError("tag '" + tag + "' is not in tagset '" + tagset.id() + "'",
                     line);
  }
}

}  // namespace

std::string_view CategoryName(WordCategory category) {
  switch (category) {
    case WordCategory::kContent:
      return "content";
    case WordCategory::kFunction:
      return "function";
    case WordCategory::kOther:
      return "other";
  }
  return "other";
}

Tagset::Tagset(std::string id,
               std::vector<std::pair<PosTag, WordCategory>> tags,
               PosTag unknown_tag)
    : id_(std::move(id)), unknown_tag_(std::move(unknown_tag)) {
  if (id_.empty()) throw ConfigError("tagset id must not be empty");
  for (auto& [tag, category] : tags) {
    if (tag.empty()) throw ConfigError("empty tag in tagset '" + id_ + "'");
    if (tag.find_first_of("| \t\n") != std::string::npos) {
      throw ConfigError("tag '" + tag + "' contains '|' or whitespace");
    }
    if (!groups_.emplace(tag, category).second) {
      throw ConfigError("duplicate tag '" + tag + "' in tagset '" + id_ + "'");
    }
    tags_.push_back(std::move(tag));
  }
  if (!Contains(unknown_tag_)) {
    throw ConfigError("unknown tag '" + unknown_tag_ +
                      "' is not a member of tagset '" + id_ + "'");
  }
}

const Tagset& Tagset::Universal() {
  static const Tagset kUniversal(
      "ud",
      {
          {"ADJ", kContent},   {"ADP", kFunction},  {"ADV", kContent},
          {"AUX", kFunction},  {"CCONJ", kFunction}, {"DET", kFunction},
          {"INTJ", kContent},  {"NOUN", kContent},  {"NUM", kFunction},
          {"PART", kFunction}, {"PRON", kFunction}, {"PROPN", kContent},
          {"PUNCT", kOther},   {"SCONJ", kFunction}, {"SYM", kOther},
          {"VERB", kContent},  {"X", kOther},
      },
      "X");
  return kUniversal;
}

const Tagset& Tagset::PennTreebank() {
  // Grouped by each tag's usual UPOS mapping.
  static const Tagset kPenn(
      "ptb",
      {
          {"$", kOther},      {"''", kOther},     {",", kOther},
          {"-LRB-", kOther},  {"-RRB-", kOther},  {".", kOther},
          {":", kOther},      {"ADD", kOther},    {"AFX", kContent},
          {"CC", kFunction},  {"CD", kFunction},  {"DT", kFunction},
          {"EX", kFunction},  {"FW", kOther},     {"HYPH", kOther},
          {"IN", kFunction},  {"JJ", kContent},   {"JJR", kContent},
          {"JJS", kContent},  {"LS", kOther},     {"MD", kFunction},
          {"NFP", kOther},    {"NN", kContent},   {"NNP", kContent},
          {"NNPS", kContent}, {"NNS", kContent},  {"PDT", kFunction},
          {"POS", kFunction}, {"PRP", kFunction}, {"PRP$", kFunction},
          {"RB", kContent},   {"RBR", kContent},  {"RBS", kContent},
          {"RP", kFunction},  {"SYM", kOther},    {"TO", kFunction},
          {"UH", kContent},   {"VB", kContent},   {"VBD", kContent},
          {"VBG", kContent},  {"VBN", kContent},  {"VBP", kContent},
          {"VBZ", kContent},  {"WDT", kFunction}, {"WP", kFunction},
          {"WP$", kFunction}, {"WRB", kContent},  {"XX", kOther},
          {"_SP", kOther},    {"``", kOther},
      },
      "XX");
  return kPenn;
}

const Tagset& Tagset::Builtin(std::string_view id) {
  if (id == "ud") return Universal();
  if (id == "ptb") return PennTreebank();
  throw ConfigError("unknown built-in tagset '" + std::string(id) +
                    "' (expected ud or ptb)");
}

Tagset Tagset::Read(std::istream& in, std::string id,
                    std::string_view unknown_tag) {
  std::vector<std::pair<PosTag, WordCategory>> tags;
  std::string line;
  std::string first_other;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line) || line.front() == '#') continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected 2 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    WordCategory category;
    if (fields[1] == "content") {
      category = kContent;
    } else if (fields[1] == "function") {
      category = kFunction;
    } else if (fields[1] == "other") {
      category = kOther;
      if (first_other.empty()) first_other = fields[0];
    } else {
      throw ParseError("unknown category '" + fields[1] + "'", line_no);
    }
    tags.emplace_back(fields[0], category);
  }
  PosTag unknown = unknown_tag.empty() ? first_other : PosTag(unknown_tag);
  if (unknown.empty()) {
    throw ConfigError("tagset '" + id + "' has no tag in the other group");
  }
  return Tagset(std::move(id), std::move(tags), std::move(unknown));
}

bool Tagset::Contains(std::string_view tag) const {
  return groups_.find(tag) != groups_.end();
}

WordCategory Tagset::CategoryOf(std::string_view tag) const {
  const auto it = groups_.find(tag);
  if (it == groups_.end()) {
    throw ConfigError("tag '" + std::string(tag) + "' is not in tagset '" +
                      id_ + "'");
  }
  return it->second;
}

std::vector<PosTag> TaggedSentence::Tags() const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) tags.push_back(token.tag);
  return tags;
}

std::vector<std::string> TaggedSentence::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& token : tokens) words.push_back(token.surface);
  return words;
}

std::vector<TaggedSentence> ParseConllu(std::istream& in, const Tagset& tagset,
                                        TagColumn column) {
  const std::size_t tag_index = column == TagColumn::kUpos ? 3 : 4;
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  std::string line;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = TaggedSentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 10) {
      throw ParseError("expected 10 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    const std::string& id = fields[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) {
      continue;
    }
    CheckTag(tagset, fields[tag_index], line_no);
    current.tokens.push_back(
        {std::move(fields[1]), std::move(fields[tag_index])});
  }
  flush();
  return sentences;
}

std::vector<TaggedSentence> ParseTsv(std::istream& in, const Tagset& tagset) {
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) {
      if (!current.tokens.empty()) sentences.push_back(std::move(current));
      current = TaggedSentence{};
      continue;
    }
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected 2 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    CheckTag(tagset, fields[1], line_no);
    current.tokens.push_back({std::move(fields[0]), std::move(fields[1])});
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return sentences;
}

void WriteTsv(std::ostream& out, std::span<const TaggedSentence> sentences) {
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence.tokens) {
      out << token.surface << '\t' << token.tag << '\n';
    }
    out << '\n';
  }
}

LexiconTagger::LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                             PosTag unknown_tag)
    : lexicon_(std::move(lexicon)), unknown_tag_(std::move(unknown_tag)) {
  if (unknown_tag_.empty()) throw ConfigError("unknown tag must not be empty");
}

LexiconTagger LexiconTagger::Read(std::istream& in, const Tagset& tagset) {
  std::unordered_map<std::string, PosTag> lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected 2 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    CheckTag(tagset, fields[1], line_no);
    if (!lexicon.emplace(fields[0], fields[1]).second) {
      throw ParseError("duplicate lexicon entry '" + fields[0] + "'", line_no);
    }
  }
  return LexiconTagger(std::move(lexicon), tagset.unknown_tag());
}

LexiconTagger LexiconTagger::FromCorpus(
    std::span<const TaggedSentence> sentences, PosTag unknown_tag) {
  std::unordered_map<std::string, std::map<PosTag, std::size_t>> tallies;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence.tokens) {
      ++tallies[token.surface][token.tag];
    }
  }
  std::unordered_map<std::string, PosTag> lexicon;
  lexicon.reserve(tallies.size());
  for (const auto& [word, counts] : tallies) {
    // std::map iterates tags in ascending order, so strict > keeps the
    // smaller tag on ties.
    const PosTag* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& [tag, count] : counts) {
      if (count > best_count) {
        best = &tag;
        best_count = count;
      }
    }
    lexicon.emplace(word, *best);
  }
  return LexiconTagger(std::move(lexicon), std::move(unknown_tag));
}

std::vector<PosTag> LexiconTagger::Tag(
    std::span<const std::string> words) const {
  std::vector<PosTag> tags;
  tags.reserve(words.size());
  for (const auto& word : words) tags.push_back(TagOf(word));
  return tags;
}

const PosTag& LexiconTagger::TagOf(const std::string& word) const {
  const PosTag* tag = Find(word);
  return tag ? *tag : unknown_tag_;
}

const PosTag* LexiconTagger::Find(const std::string& word) const {
  const auto it = lexicon_.find(word);
  return it == lexicon_.end() ? nullptr : &it->second;
}

void LexiconTagger::Write(std::ostream& out) const {
  std::vector<std::pair<std::string, PosTag>> entries(lexicon_.begin(),
                                                      lexicon_.end());
  std::sort(entries.begin(), entries.end());
  for (const auto& [word, tag] : entries) out << word << '\t' << tag << '\n';
}

}  // namespace lingmark
