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

// lingmark: estimate indeterminacy tables, train the toy LM, generate and
// detect watermarked text, and run evaluation experiments.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lingmark/detector.h"
#include "lingmark/error.h"
#include "lingmark/eval.h"
#include "lingmark/experiment.h"
#include "lingmark/greenlist.h"
#include "lingmark/indeterminacy.h"
#include "lingmark/tagged_corpus.h"
#include "lingmark/toy_lm.h"
#include "lingmark/watermark.h"

namespace lingmark {
namespace {

using json = nlohmann::json;
using Text = std::vector<std::string>;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string Num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string Short(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

// "ud", "ptb" or a path to a "tag<TAB>group" file named after its stem.
Tagset ResolveTagset(const std::string& spec) {
  if (spec == "ud" || spec == "ptb") return Tagset::Builtin(spec);
  std::ifstream in = OpenIn(spec);
  return Tagset::Read(in, std::filesystem::path(spec).stem().string());
}

std::vector<Text> ReadTexts(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file = OpenIn(path);
    in = &file;
  }
  std::vector<Text> texts;
  for (std::string line; std::getline(*in, line);) {
    std::istringstream words(line);
    Text text;
    for (std::string w; words >> w;) text.push_back(w);
    texts.push_back(std::move(text));
  }
  return texts;
}

void WriteText(std::ostream& out, const Text& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0) out << ' ';
    out << text[i];
  }
  out << '\n';
}

struct CorpusOptions {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string tag_column = "upos";
  std::string tagset = "ud";
};

void AddCorpusOptions(CLI::App* cmd, CorpusOptions& opts) {
  cmd->add_option("--input", opts.inputs, "Tagged corpus file (repeatable)")
      ->required();
  cmd->add_option("--format", opts.format,
                  "Corpus format; auto picks tsv for .tsv files")
      ->check(CLI::IsMember({"auto", "conllu", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--tag-column", opts.tag_column, "CoNLL-U tag column")
      ->check(CLI::IsMember({"upos", "xpos"}))
      ->capture_default_str();
  cmd->add_option("--tagset", opts.tagset, "ud, ptb or a tagset file")
      ->capture_default_str();
}

std::vector<TaggedSentence> ReadCorpus(const std::string& path,
                                       const CorpusOptions& opts,
                                       const Tagset& tagset) {
  std::ifstream in = OpenIn(path);
  try {
    const bool tsv =
        opts.format == "tsv" ||
        (opts.format == "auto" && path.ends_with(".tsv"));
    if (tsv) return ParseTsv(in, tagset);
    return ParseConllu(in, tagset,
                       opts.tag_column == "xpos" ? TagColumn::kXpos
                                                 : TagColumn::kUpos);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// estimate

struct EstimateOptions {
  CorpusOptions corpus;
  int k = 2;
  std::string out;
  bool merge_prob = false;
  std::string mean = "contexts";
};

int RunEstimate(const EstimateOptions& opts) {
  const Tagset tagset = ResolveTagset(opts.corpus.tagset);
  const MeanPolicy policy = opts.mean == "occurrences"
                                ? MeanPolicy::kOccurrences
                                : MeanPolicy::kContexts;
  std::vector<NGramCounts> shards;
  for (const auto& path : opts.corpus.inputs) {
    NGramCounts counts =
        CountNGrams(ReadCorpus(path, opts.corpus, tagset), opts.k, tagset.id());
    counts.corpus_ids().push_back(
        std::filesystem::path(path).filename().string());
    shards.push_back(std::move(counts));
  }
  std::optional<LambdaTable> table;
  if (opts.merge_prob) {
    if (shards.size() != 2) {
      throw ConfigError("--merge-prob needs exactly two --input corpora");
    }
    table = MergeTablesByProbability(shards[0], shards[1], policy);
  } else {
    NGramCounts pooled = shards.front();
    for (std::size_t i = 1; i < shards.size(); ++i) pooled.Merge(shards[i]);
    if (pooled.empty()) {
      throw ConfigError("corpus has no sentence of length >= k");
    }
    table = BuildLambdaTable(pooled, policy);
  }
  SaveTableFile(*table, opts.out);
  std::cout << "entries " << table->entries().size() << "\n"
            << "mean_lambda " << Num(table->mean_lambda()) << "\n";
  return 0;
}

// train-lm

struct TrainOptions {
  CorpusOptions corpus;
  int order = 2;
  double smoothing = kDefaultSmoothing;
  std::string out;
  std::string lexicon_out;
};

int RunTrain(const TrainOptions& opts) {
  const Tagset tagset = ResolveTagset(opts.corpus.tagset);
  std::vector<TaggedSentence> sentences;
  for (const auto& path : opts.corpus.inputs) {
    auto part = ReadCorpus(path, opts.corpus, tagset);
    sentences.insert(sentences.end(), part.begin(), part.end());
  }
  const ToyLM lm = ToyLM::Train(sentences, opts.order, opts.smoothing);
  lm.SaveFile(opts.out);
  if (!opts.lexicon_out.empty()) {
    std::ofstream out = OpenOut(opts.lexicon_out);
    LexiconTagger::FromCorpus(sentences, tagset.unknown_tag()).Write(out);
  }
  std::cout << "sentences " << sentences.size() << "\n"
            << "vocab " << lm.vocab().size() << "\n";
  return 0;
}

// Shared by generate and detect.
struct Artifacts {
  std::string table_path;
  std::string lm_path;
  std::string lexicon_path;
  std::string tagset;  // empty: named by the table
};

void AddArtifactOptions(CLI::App* cmd, Artifacts& a) {
  cmd->add_option("--table", a.table_path, "Indeterminacy table")->required();
  cmd->add_option("--lm", a.lm_path, "Toy LM (supplies the vocabulary)")
      ->required();
  cmd->add_option("--lexicon", a.lexicon_path, "Lexicon TSV for tagging")
      ->required();
  cmd->add_option("--tagset", a.tagset,
                  "ud, ptb or a tagset file (default: the table's)");
}

struct Loaded {
  LambdaTable table;
  ToyLM lm;
  Tagset tagset;
  LexiconTagger tagger;
};

Loaded Load(const Artifacts& a) {
  LambdaTable table = LoadTableFile(a.table_path);
  ToyLM lm = ToyLM::LoadFile(a.lm_path);
  Tagset tagset = ResolveTagset(a.tagset.empty() ? table.tagset_id() : a.tagset);
  std::ifstream in = OpenIn(a.lexicon_path);
  LexiconTagger tagger = LexiconTagger::Read(in, tagset);
  return {std::move(table), std::move(lm), std::move(tagset),
          std::move(tagger)};
}

int CheckK(std::optional<int> k, const LambdaTable& table) {
  if (k && *k != table.k()) {
    throw ConfigError("--k " + std::to_string(*k) + " does not match table k=" +
                      std::to_string(table.k()));
  }
  return table.k();
}

// generate

struct GenerateOptions {
  Artifacts artifacts;
  std::string mode = "stela";
  double gamma = kDefaultGamma;
  std::string delta;
  std::optional<int> k;
  std::uint64_t key = 0;
  double temperature = kDefaultTemperature;
  std::size_t n = 1;
  std::size_t length = 200;
  std::uint64_t seed = 0;
  std::string prompt;
  std::string out;
  std::string diagnostics;
};

double ResolveDelta(const std::string& flag, WatermarkMode mode,
                    const LambdaTable& table) {
  if (flag.empty()) {
    return mode == WatermarkMode::kAdaptive ? CalibratedDelta(table)
                                            : kDefaultStaticDelta;
  }
  if (flag == "calibrated") return CalibratedDelta(table);
  try {
    std::size_t used = 0;
    const double value = std::stod(flag, &used);
    if (used == flag.size()) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError("--delta must be a number or 'calibrated'");
}

int RunGenerate(const GenerateOptions& opts) {
  const Loaded in = Load(opts.artifacts);
  const bool plain = opts.mode == "none";
  WatermarkConfig config;
  config.gamma = opts.gamma;
  config.k = CheckK(opts.k, in.table);
  config.mode = plain ? WatermarkMode::kStatic : ParseWatermarkMode(opts.mode);
  config.key = WatermarkKey{opts.key};
  config.temperature = opts.temperature;
  config.delta_base = plain ? 0.0 : ResolveDelta(opts.delta, config.mode, in.table);
  config.Validate();

  std::vector<TokenId> prompt;
  {
    std::istringstream words(opts.prompt);
    for (std::string w; words >> w;) prompt.push_back(in.lm.vocab().IdOf(w));
  }

  std::ofstream out = OpenOut(opts.out);
  std::ofstream diag;
  if (!opts.diagnostics.empty()) diag = OpenOut(opts.diagnostics);
  std::size_t biased = 0;
  std::size_t green = 0;
  for (std::size_t i = 0; i < opts.n; ++i) {
    const std::uint64_t seed = opts.seed + i;
    const GenerationRecord record =
        plain ? GenerateUnwatermarked(in.lm, config.temperature, prompt,
                                      opts.length, seed)
              : Generate(in.lm, in.tagger, in.table, config, prompt,
                         opts.length, seed);
    Text text = in.lm.vocab().Decode(prompt);
    const Text generated = in.lm.vocab().Decode(record.tokens);
    text.insert(text.end(), generated.begin(), generated.end());
    WriteText(out, text);
    json steps = json::array();
    for (const auto& step : record.steps) {
      if (step.biased) {
        ++biased;
        green += step.green ? 1 : 0;
      }
      if (diag.is_open()) {
        steps.push_back({{"token", in.lm.vocab().Surface(step.token)},
                         {"context", JoinContext(step.context)},
                         {"lambda", step.lambda},
                         {"delta", step.delta},
                         {"biased", step.biased},
                         {"green", step.green}});
      }
    }
    if (diag.is_open()) {
      diag << json{{"version", 1},
                   {"index", i},
                   {"seed", seed},
                   {"steps", std::move(steps)}}
                  .dump()
           << '\n';
    }
  }
  std::cout << "mode " << (plain ? "none" : WatermarkModeName(config.mode))
            << "\n"
            << "delta_base " << Num(config.delta_base) << "\n"
            << "texts " << opts.n << "\n"
            << "green_fraction "
            << Num(biased == 0 ? 0.0
                               : static_cast<double>(green) /
                                     static_cast<double>(biased))
            << "\n";
  return 0;
}

// detect

struct DetectOptions {
  Artifacts artifacts;
  std::uint64_t key = 0;
  double gamma = kDefaultGamma;
  std::optional<int> k;
  std::string mode = "weighted";
  double threshold = kDefaultThreshold;
  std::string in;
  bool verbose = false;
};

int RunDetect(const DetectOptions& opts) {
  const Loaded in = Load(opts.artifacts);
  const DetectorConfig config{WatermarkKey{opts.key}, opts.gamma,
                              CheckK(opts.k, in.table)};
  GreenListSize(in.lm.vocab().size(), config.gamma);
  const Detector detector(in.lm.vocab(), in.tagger, in.table, in.tagset,
                          config);
  const bool weighted = opts.mode == "weighted";
  const std::vector<Text> texts = ReadTexts(opts.in);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    json line;
    try {
      const DetectionReport report = detector.Score(texts[i]);
      const double z = weighted ? report.z_weighted : report.z_uniform;
      line = json::parse(ReportToJson(report, opts.verbose));
      line["z"] = z;
      line["watermarked"] = Decide(z, opts.threshold);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      line = {{"version", 1}, {"error", e.what()}, {"watermarked", false}};
    }
    line["index"] = i;
    line["detector"] = opts.mode;
    line["threshold"] = opts.threshold;
    std::cout << line.dump() << '\n';
  }
  return 0;
}

// evaluate

struct EvaluateOptions {
  std::string manifest;
  std::string out;
  unsigned threads = 0;
};

int RunEvaluate(const EvaluateOptions& opts) {
  const ExperimentManifest manifest = ExperimentManifest::ParseFile(opts.manifest);
  const ExperimentReport report = RunExperiment(manifest, opts.threads);
  if (opts.out.empty()) {
    std::cout << report.ToJson();
    return 0;
  }
  OpenOut(opts.out + ".json") << report.ToJson();
  OpenOut(opts.out + ".csv") << report.ToCsv();
  const double fpr = manifest.fpr;
  auto print = [&](const std::string& name, const DetectorSummary& s) {
    std::cout << name << " tpr_at_fpr(" << Short(fpr) << ") "
              << Num(s.tpr_at_fpr) << " best_f1 " << Num(s.best_f1) << "\n";
  };
  std::cout << "delta_base " << Num(report.delta_base) << "\n";
  print("uniform", report.uniform);
  print("weighted", report.weighted);
  for (const auto& a : report.attacks) {
    print("attack(" + Short(a.rate) + ") uniform", a.uniform);
    print("attack(" + Short(a.rate) + ") weighted", a.weighted);
  }
  return 0;
}

// attack

struct AttackOptions {
  std::string in;
  std::string synonyms;
  std::string lexicon;
  std::string tagset = "ud";
  double rate = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int RunAttack(const AttackOptions& opts) {
  std::ifstream syn_in = OpenIn(opts.synonyms);
  AttackConfig config{ReadSynonyms(syn_in), opts.rate, 0};
  if (!opts.lexicon.empty()) {
    const Tagset tagset = ResolveTagset(opts.tagset);
    std::ifstream lex_in = OpenIn(opts.lexicon);
    ValidateSynonyms(config.synonyms, LexiconTagger::Read(lex_in, tagset));
  }
  const std::vector<Text> texts = ReadTexts(opts.in);
  std::ofstream out = OpenOut(opts.out);
  std::size_t changed = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    config.seed = DeriveSeed(opts.seed, 0, i);
    const Text attacked = SynonymAttack(texts[i], config);
    for (std::size_t j = 0; j < attacked.size(); ++j) {
      changed += attacked[j] != texts[i][j] ? 1 : 0;
    }
    total += attacked.size();
    WriteText(out, attacked);
  }
  std::cout << "texts " << texts.size() << "\n"
            << "replaced " << changed << " of " << total << "\n";
  return 0;
}

// synth

struct SynthOptions {
  std::string out_dir;
  std::size_t sentences = 20000;
  std::uint64_t seed = 1;
  std::size_t max_synonyms = 3;
};

int RunSynth(const SynthOptions& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  const fs::path dir(opts.out_dir);
  const MarkovTagSource& grammar = DefaultToyGrammar();
  const auto corpus = SampleMarkovTagCorpus(grammar, opts.sentences, opts.seed);
  std::ofstream corpus_out = OpenOut((dir / "corpus.tsv").string());
  WriteTsv(corpus_out, corpus);

  std::unordered_map<std::string, PosTag> lexicon;
  for (std::size_t t = 0; t < grammar.tags.size(); ++t) {
    for (const auto& w : grammar.emissions[t]) lexicon[w] = grammar.tags[t];
  }
  const LexiconTagger tagger(std::move(lexicon),
                             Tagset::Universal().unknown_tag());
  std::ofstream lex_out = OpenOut((dir / "lexicon.tsv").string());
  tagger.Write(lex_out);
  std::ofstream syn_out = OpenOut((dir / "synonyms.tsv").string());
  WriteSynonyms(syn_out, BuildTagSynonyms(tagger, opts.max_synonyms, opts.seed));

  ExperimentManifest manifest;
  manifest.table_path = "table.json";
  manifest.lm_path = "lm.json";
  manifest.lexicon_path = "lexicon.tsv";
  manifest.synonyms_path = "synonyms.tsv";
  manifest.attack_rates = {0.1, 0.3, 0.5};
  manifest.key = 42;
  manifest.seed = opts.seed;
  OpenOut((dir / "manifest.json").string())
      << json::parse(manifest.ToJson()).dump(2) << '\n';

  std::cout << "sentences " << corpus.size() << "\n"
            << "wrote corpus.tsv lexicon.tsv synonyms.tsv manifest.json\n";
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Adaptive-strength text watermarking toolkit", "lingmark"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");
  std::function<int()> action;

  EstimateOptions est;
  auto* estimate = app.add_subcommand(
      "estimate", "Build an indeterminacy table from tagged corpora");
  AddCorpusOptions(estimate, est.corpus);
  estimate->add_option("--k", est.k, "Context size (tags incl. the next one)")
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  estimate->add_option("--out", est.out, "Output table JSON")->required();
  estimate->add_flag("--merge-prob", est.merge_prob,
                     "Average conditional probabilities of two corpora");
  estimate->add_option("--mean", est.mean, "Table mean over")
      ->check(CLI::IsMember({"contexts", "occurrences"}))
      ->capture_default_str();
  estimate->callback([&] { action = [&] { return RunEstimate(est); }; });

  TrainOptions train;
  auto* train_lm =
      app.add_subcommand("train-lm", "Train the toy n-gram language model");
  AddCorpusOptions(train_lm, train.corpus);
  train_lm->add_option("--order", train.order, "n-gram order")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  train_lm->add_option("--smoothing", train.smoothing, "Add-k constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_lm->add_option("--out", train.out, "Output model JSON")->required();
  train_lm->add_option("--lexicon-out", train.lexicon_out,
                       "Also write a lexicon TSV from the corpus");
  train_lm->callback([&] { action = [&] { return RunTrain(train); }; });

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate watermarked text");
  AddArtifactOptions(generate, gen.artifacts);
  generate->add_option("--mode", gen.mode, "stela, kgw or none (unwatermarked)")
      ->check(CLI::IsMember({"stela", "adaptive", "kgw", "static", "none"}))
      ->capture_default_str();
  generate->add_option("--gamma", gen.gamma, "Green list fraction")
      ->capture_default_str();
  generate->add_option("--delta", gen.delta,
                       "Bias or 'calibrated' (default: calibrated for stela, "
                       "2.0 for kgw)");
  generate->add_option("--k", gen.k, "Must equal the table's k");
  generate->add_option("--key", gen.key, "Watermark key")->capture_default_str();
  generate->add_option("--temperature", gen.temperature, "Sampling temperature")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Number of texts")->capture_default_str();
  generate->add_option("--len", gen.length, "Generated tokens per text")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Text i uses seed + i")
      ->capture_default_str();
  generate->add_option("--prompt", gen.prompt, "Whitespace-separated prompt");
  generate->add_option("--out", gen.out, "Output texts, one per line")
      ->required();
  generate->add_option("--diagnostics", gen.diagnostics,
                       "Per-step JSON lines");
  generate->callback([&] { action = [&] { return RunGenerate(gen); }; });

  DetectOptions det;
  auto* detect = app.add_subcommand("detect", "Score texts for the watermark");
  AddArtifactOptions(detect, det.artifacts);
  detect->add_option("--key", det.key, "Watermark key")->capture_default_str();
  detect->add_option("--gamma", det.gamma, "Green list fraction")
      ->capture_default_str();
  detect->add_option("--k", det.k, "Must equal the table's k");
  detect->add_option("--mode", det.mode, "Statistic used for the verdict")
      ->check(CLI::IsMember({"uniform", "weighted"}))
      ->capture_default_str();
  detect->add_option("--threshold", det.threshold, "Flag when z > threshold")
      ->capture_default_str();
  detect->add_option("--in", det.in, "Texts, one per line ('-' for stdin)")
      ->required();
  detect->add_flag("--verbose", det.verbose, "Include per-token scores");
  detect->callback([&] { action = [&] { return RunDetect(det); }; });

  EvaluateOptions ev;
  auto* evaluate =
      app.add_subcommand("evaluate", "Run an experiment manifest");
  evaluate->add_option("--manifest", ev.manifest, "Manifest JSON")->required();
  evaluate->add_option("--out", ev.out,
                       "Write <out>.json and <out>.csv (default: JSON to "
                       "stdout)");
  evaluate->add_option("--threads", ev.threads, "Worker threads (0: all)")
      ->capture_default_str();
  evaluate->callback([&] { action = [&] { return RunEvaluate(ev); }; });

  AttackOptions att;
  auto* attack =
      app.add_subcommand("attack", "Tag-preserving synonym substitution");
  attack->add_option("--in", att.in, "Texts, one per line")->required();
  attack->add_option("--synonyms", att.synonyms, "Synonym TSV")->required();
  attack->add_option("--lexicon", att.lexicon,
                     "Check that alternatives share the word's tag");
  attack->add_option("--tagset", att.tagset, "Tagset of --lexicon")
      ->capture_default_str();
  attack->add_option("--rate", att.rate, "Replacement probability")
      ->check(CLI::Range(0.0, 1.0))
      ->required();
  attack->add_option("--seed", att.seed, "Attack seed")->capture_default_str();
  attack->add_option("--out", att.out, "Output texts")->required();
  attack->callback([&] { action = [&] { return RunAttack(att); }; });

  SynthOptions syn;
  auto* synth = app.add_subcommand(
      "synth", "Write the bundled toy corpus, lexicon, synonyms and manifest");
  synth->add_option("--out-dir", syn.out_dir, "Output directory")->required();
  synth->add_option("--sentences", syn.sentences, "Corpus size")
      ->capture_default_str();
  synth->add_option("--seed", syn.seed, "Sampling seed")->capture_default_str();
  synth->add_option("--max-synonyms", syn.max_synonyms,
                    "Alternatives per word")
      ->capture_default_str();
  synth->callback([&] { action = [&] { return RunSynth(syn); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const ConfigError& e) {
    std::cerr << "lingmark: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "lingmark: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "lingmark: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lingmark: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace
}  // namespace lingmark

int main(int argc, char** argv) { return lingmark::Main(argc, argv); }
