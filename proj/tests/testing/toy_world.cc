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

#include "testing/toy_world.h"

#include <unordered_map>
#include <utility>

namespace lingmark::testing {

LexiconTagger GrammarLexicon(const MarkovTagSource& grammar) {
  std::unordered_map<std::string, PosTag> lexicon;
  for (std::size_t t = 0; t < grammar.tags.size(); ++t) {
    for (const auto& w : grammar.emissions[t]) lexicon[w] = grammar.tags[t];
  }
  return LexiconTagger(std::move(lexicon), Tagset::Universal().unknown_tag());
}

ToyWorld ToyWorld::Make(std::size_t n_sentences, std::uint64_t seed,
                        int lm_order, int k) {
  const MarkovTagSource& grammar = DefaultToyGrammar();
  auto corpus = SampleMarkovTagCorpus(grammar, n_sentences, seed);
  ToyLM lm = ToyLM::Train(corpus, lm_order);
  LexiconTagger tagger = GrammarLexicon(grammar);
  LambdaTable table = BuildLambdaTable(CountNGrams(corpus, k, "ud"));
  SynonymMap synonyms = BuildTagSynonyms(tagger, 3, seed);
  return {std::move(corpus), std::move(lm), std::move(tagger),
          std::move(table), std::move(synonyms)};
}

}  // namespace lingmark::testing
