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

#ifndef LINGMARK_TAGGED_CORPUS_H_
#define LINGMARK_TAGGED_CORPUS_H_

// POS-tagged corpus ingestion, tagsets with their content/function/other
// grouping, and the pluggable tagger interface.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lingmark {

using PosTag = std::string;

enum class WordCategory { kContent, kFunction, kOther };

std::string_view CategoryName(WordCategory category);

// An ordered set of tags, each assigned to exactly one WordCategory.
class Tagset {
 public:
  // Throws ConfigError on an empty id, an empty tag or a duplicate tag.
  // `unknown_tag` must be one of `tags`.
  Tagset(std::string id, std::vector<std::pair<PosTag, WordCategory>> tags,
         PosTag unknown_tag);

  // Universal Dependencies UPOS (17 tags). Unknown tag is X.
  static const Tagset& Universal();
  // English Penn Treebank tags as emitted by common taggers, grouped through
  // their UPOS equivalents. Unknown tag is XX.
  static const Tagset& PennTreebank();
  // Looks up "ud" or "ptb"; throws ConfigError otherwise.
  static const Tagset& Builtin(std::string_view id);

  // Reads "tag<TAB>content|function|other" lines. The first tag in the
  // "other" group is taken as the unknown tag unless `unknown_tag` is given.
  static Tagset Read(std::istream& in, std::string id,
                     std::string_view unknown_tag = {});

  const std::string& id() const { return id_; }
  const std::vector<PosTag>& tags() const { return tags_; }
  const PosTag& unknown_tag() const { return unknown_tag_; }
  bool Contains(std::string_view tag) const;
  // Throws ConfigError if `tag` is not a member.
  WordCategory CategoryOf(std::string_view tag) const;

 private:
  std::string id_;
  std::vector<PosTag> tags_;
  std::map<PosTag, WordCategory, std::less<>> groups_;
  PosTag unknown_tag_;
};

struct TaggedToken {
  std::string surface;
  PosTag tag;

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;

  std::vector<PosTag> Tags() const;
  std::vector<std::string> Words() const;
  bool operator==(const TaggedSentence&) const = default;
};

enum class TagColumn { kUpos, kXpos };

// CoNLL-U: 10 tab-separated columns per token line, `#` comments, blank line
// between sentences. Multiword ranges ("1-2") and empty nodes ("1.1") are
// skipped. Throws ParseError on a wrong column count or a tag outside
// `tagset`.
std::vector<TaggedSentence> ParseConllu(std::istream& in, const Tagset& tagset,
                                        TagColumn column = TagColumn::kUpos);

// "surface<TAB>tag" per line, blank line between sentences.
std::vector<TaggedSentence> ParseTsv(std::istream& in, const Tagset& tagset);

void WriteTsv(std::ostream& out, std::span<const TaggedSentence> sentences);

// Anything that maps a word sequence to one tag per word.
class Tagger {
 public:
  virtual ~Tagger() = default;

  virtual std::vector<PosTag> Tag(std::span<const std::string> words) const = 0;

  // True when each word's tag depends only on the word itself. Callers may
  // then tag a suffix instead of the whole prefix.
  virtual bool context_free() const { return false; }
};

// Context-free dictionary tagger. Words missing from the lexicon receive
// `unknown_tag`.
class LexiconTagger final : public Tagger {
 public:
  LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                PosTag unknown_tag);

  // Reads "surface<TAB>tag" lines; every tag must belong to `tagset`.
  static LexiconTagger Read(std::istream& in, const Tagset& tagset);

  // Most frequent tag per surface form; ties go to the smaller tag string.
  static LexiconTagger FromCorpus(std::span<const TaggedSentence> sentences,
                                  PosTag unknown_tag);

  std::vector<PosTag> Tag(std::span<const std::string> words) const override;
  bool context_free() const override { return true; }

  const PosTag& TagOf(const std::string& word) const;
  // nullptr when the word is not in the lexicon.
  const PosTag* Find(const std::string& word) const;
  const PosTag& unknown_tag() const { return unknown_tag_; }
  const std::unordered_map<std::string, PosTag>& lexicon() const {
    return lexicon_;
  }

  // Sorted by surface so output is deterministic.
  void Write(std::ostream& out) const;

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
  PosTag unknown_tag_;
};

inline std::vector<PosTag> TagWords(const Tagger& tagger,
                                    std::span<const std::string> words) {
  return tagger.Tag(words);
}

}  // namespace lingmark

#endif  // LINGMARK_TAGGED_CORPUS_H_
