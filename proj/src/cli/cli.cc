// Copyright 2026 The argsum Authors.
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

#include "argsum/cli.h"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "argsum/error.h"
#include "argsum/experiment.h"

namespace argsum::cli {
namespace {

constexpr std::string_view kDefaultAblation =
    "kl,sb,lr,dac,r,lc,snt,st,lcp,lcp+r,r+dac,lcp+dac+r,random";
constexpr std::string_view kDefaultAblationWithEmbeddings =
    "kl,sb,lr,dac,w2v,r,lc,snt,st,lcp,lcp+r,r+dac,lcp+dac+r,random";

struct Settings {
  std::string corpus;
  std::string pyramid;
  std::string annotations;
  std::string out_dir;
  std::string model;
  std::string topic;
  std::string method = "lexrank";
  std::string features = "lc";
  std::string coref;  // empty: "both" for ablate, "off" elsewhere
  std::string configs;
  std::string lexicon;
  std::string polarity;
  std::string embeddings;
  std::string dictionary;
  std::string verbs;
  std::string lambda_grid;
  unsigned long long seed = kDefaultSeed;
  int jobs = 1;
  int test_dialogs = kDefaultTestDialogs;
  int epochs = kDefaultEpochs;
  int folds = 5;
  int top_k = 5;
  double threshold = kImportanceThreshold;
};

std::ifstream OpenInput(const std::string &path, std::string_view what) {
  if (path.empty()) throw ConfigError(std::string(what) + " path is required");
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open " + std::string(what) + " " + path);
  return in;
}

// Sink that is either a file inside --out or the given stream.
class Output {
 public:
  Output(const Settings &s, std::string_view file, std::ostream &fallback) {
    if (s.out_dir.empty()) {
      stream_ = &fallback;
      return;
    }
    std::error_code ec;
    std::filesystem::create_directories(s.out_dir, ec);
    if (ec) throw ResourceError("cannot create " + s.out_dir + ": " + ec.message());
    path_ = (std::filesystem::path(s.out_dir) / file).string();
    file_ = std::make_unique<std::ofstream>(path_);
    if (!*file_) throw ResourceError("cannot write " + path_);
    stream_ = file_.get();
  }

  std::ostream &stream() { return *stream_; }

  void Close() {
    if (file_) {
      file_->close();
      if (!*file_) throw ResourceError("failed writing " + path_);
    }
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
};

std::vector<Corpus> LoadCorpora(const Settings &s) {
  std::ifstream in = OpenInput(s.corpus, "corpus");
  std::vector<Corpus> corpora = ParseCorpora(in);
  if (!s.topic.empty()) {
    std::erase_if(corpora, [&](const Corpus &c) { return c.topic != s.topic; });
    if (corpora.empty()) throw InvalidArgument("no dialogs for topic \"" + s.topic + "\"");
  }
  if (corpora.empty()) throw ValidationError("corpus is empty");
  return corpora;
}

TextLexicons LoadTextLexicons(const Settings &s) {
  TextLexicons lex = TextLexicons::Bundled();
  if (!s.dictionary.empty()) {
    std::ifstream in = OpenInput(s.dictionary, "dictionary");
    lex.dictionary = LoadWordList(in);
  }
  if (!s.verbs.empty()) {
    std::ifstream in = OpenInput(s.verbs, "verb list");
    lex.verbs = LoadWordList(in);
  }
  return lex;
}

FeatureResources LoadFeatureResources(const Settings &s) {
  FeatureResources r = FeatureResources::Bundled();
  if (!s.lexicon.empty()) {
    std::ifstream in = OpenInput(s.lexicon, "category lexicon");
    r.categories = std::make_shared<const CategoryLexicon>(CategoryLexicon::Parse(in));
  }
  if (!s.polarity.empty()) {
    std::ifstream in = OpenInput(s.polarity, "polarity lexicon");
    r.polarity = std::make_shared<const PolarityLexicon>(ParsePolarityLexicon(in));
  }
  if (!s.embeddings.empty()) {
    std::ifstream in = OpenInput(s.embeddings, "embeddings");
    r.embeddings = std::make_shared<const EmbeddingTable>(EmbeddingTable::Parse(in));
  }
  if (!s.verbs.empty()) {
    std::ifstream in = OpenInput(s.verbs, "verb list");
    r.verbs = LoadWordList(in);
  }
  return r;
}

std::vector<double> ParseGrid(const std::string &text) {
  if (text.empty()) return kDefaultLambdaGrid;
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char *end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !(v > 0.0)) {
      throw InvalidArgument("bad lambda \"" + item + "\" in --lambda-grid");
    }
    grid.push_back(v);
  }
  if (grid.empty()) throw InvalidArgument("empty --lambda-grid");
  return grid;
}

ExperimentOptions Options(const Settings &s) {
  if (s.jobs < 1) throw InvalidArgument("--jobs must be at least 1");
  if (s.epochs < 1) throw InvalidArgument("--epochs must be at least 1");
  if (s.folds < 2) throw InvalidArgument("--folds must be at least 2");
  ExperimentOptions o;
  o.seed = s.seed;
  o.test_dialogs = s.test_dialogs;
  o.lambda_grid = ParseGrid(s.lambda_grid);
  o.folds = s.folds;
  o.epochs = s.epochs;
  o.jobs = s.jobs;
  return o;
}

std::vector<TopicData> LoadTopics(const Settings &s) {
  const TextLexicons lexicons = LoadTextLexicons(s);
  std::ifstream pyramid_in = OpenInput(s.pyramid, "pyramid");
  const Pyramid pyramid = ParsePyramid(pyramid_in);
  std::ifstream annotations_in = OpenInput(s.annotations, "annotations");
  const std::vector<SentenceAnnotation> annotations = ParseAnnotations(annotations_in);
  GoldOptions gold;
  gold.threshold = s.threshold;
  std::vector<TopicData> topics;
  for (Corpus &c : LoadCorpora(s)) {
    topics.push_back(PrepareTopic(std::move(c), pyramid, annotations, lexicons, gold));
  }
  return topics;
}

FeatureConfig Features(const Settings &s) {
  FeatureConfig config = ParseFeatureList(s.features);
  const CorefMode mode = ParseCorefMode(s.coref.empty() ? "off" : s.coref);
  if (mode == CorefMode::kBoth) {
    throw InvalidArgument("--coref both is only meaningful for ablate");
  }
  config.use_coref = mode == CorefMode::kOn;
  return config;
}

void WriteReport(std::ostream &out, const std::string &topic, const EvalReport &r) {
  out << fmt::format("{}  {}  weighted_f={:.4f}\n", topic, r.config, r.weighted_f);
  for (int c = 0; c < 2; ++c) {
    const ClassMetrics &m = r.per_class[c];
    out << fmt::format("  class {}: precision={:.4f} recall={:.4f} f1={:.4f} support={}\n",
                       c, m.precision, m.recall, m.f1, m.support);
  }
}

int Ingest(const Settings &s, std::ostream &out) {
  const TextLexicons lexicons = LoadTextLexicons(s);
  Output sink(s, "sentences.jsonl", out);
  for (Corpus &corpus : LoadCorpora(s)) {
    ValidateCorpus(corpus);
    SegmentCorpus(corpus, lexicons.abbreviations);
    FilterCorpus(corpus, lexicons.dictionary, lexicons.verbs);
    for (const Dialog &d : corpus.dialogs) {
      for (const Turn &turn : d.turns) {
        for (const Sentence &sentence : turn.sentences) {
          nlohmann::json record = {{"topic", corpus.topic},
                                   {"dialog_id", sentence.dialog_id},
                                   {"turn_index", sentence.turn_index},
                                   {"index_in_turn", sentence.index_in_turn},
                                   {"global_index", sentence.global_index},
                                   {"author", turn.author},
                                   {"kept", sentence.kept},
                                   {"text", sentence.text}};
          sink.stream() << record.dump() << '\n';
        }
      }
    }
  }
  sink.Close();
  return kOk;
}

int Gold(const Settings &s, std::ostream &out) {
  const std::vector<TopicData> topics = LoadTopics(s);
  Output labels(s, "gold.jsonl", out);
  for (const TopicData &t : topics) {
    std::vector<GoldLabel> gold;
    for (const Dialog &d : t.corpus.dialogs) {
      for (const Sentence *sentence : d.Sentences()) gold.push_back(t.gold.at(sentence->key()));
    }
    WriteGoldLabels(labels.stream(), gold);
  }
  labels.Close();

  std::ifstream pyramid_in = OpenInput(s.pyramid, "pyramid");
  const Pyramid pyramid = ParsePyramid(pyramid_in);
  std::ifstream annotations_in = OpenInput(s.annotations, "annotations");
  const std::vector<SentenceAnnotation> annotations = ParseAnnotations(annotations_in);
  GoldOptions options;
  options.threshold = s.threshold;
  const AgreementReport agreement = ComputeAgreement(pyramid, annotations, options);
  Output report(s, "agreement.txt", out);
  for (const PairAgreement &p : agreement.pairs) {
    report.stream() << fmt::format("{} {} kappa={:.4f} sentences={}\n", p.annotator_a,
                                   p.annotator_b, p.kappa, p.sentences);
  }
  report.stream() << fmt::format("mean kappa={:.4f}\n", agreement.mean_kappa);
  report.Close();
  return kOk;
}

int Baseline(const Settings &s, std::ostream &out) {
  const SummaryMethod method = ParseMethod(s.method);
  const std::vector<TopicData> topics = LoadTopics(s);
  const ExperimentOptions options = Options(s);
  const WordSet &stopwords = resources::Stopwords();
  Output selections(s, "selections.jsonl", out);
  std::vector<std::pair<std::string, EvalReport>> reports;
  for (const TopicData &t : topics) {
    const BaselineRun run = RunBaseline(t, method, options.lexrank, stopwords);
    for (std::size_t i = 0; i < run.dialog_ids.size(); ++i) {
      const SummarySelection &sel = run.selections[i];
      nlohmann::json record = {{"topic", t.corpus.topic},
                               {"dialog_id", run.dialog_ids[i]},
                               {"method", MethodName(sel.method)},
                               {"n", sel.budget_n},
                               {"selected", sel.selected},
                               {"converged", sel.converged}};
      selections.stream() << record.dump() << '\n';
    }
    std::vector<int> truth;
    for (const LabeledItem &item : t.items) truth.push_back(item.label);
    EvalReport report = Prf(truth, run.predicted);
    report.config = std::string(MethodName(method));
    reports.emplace_back(t.corpus.topic, report);
  }
  selections.Close();
  Output summary(s, "report.txt", out);
  for (const auto &[topic, report] : reports) WriteReport(summary.stream(), topic, report);
  summary.Close();
  return kOk;
}

int Featurize(const Settings &s, std::ostream &out) {
  const FeatureConfig config = Features(s);
  const FeatureResources resources = LoadFeatureResources(s);
  const std::vector<TopicData> topics = LoadTopics(s);
  Output sink(s, "features.csv", out);
  std::ostream &os = sink.stream();
  const std::vector<std::string> names = FeatureNames(config, resources);
  os << "topic,dialog_id,turn_index,index_in_turn,label";
  for (const std::string &n : names) os << ',' << n;
  os << '\n';
  for (const TopicData &t : topics) {
    const FeatureTable table = FeaturizeTopic(t, config, resources);
    for (std::size_t r = 0; r < t.items.size(); ++r) {
      const LabeledItem &item = t.items[r];
      os << t.corpus.topic << ',' << item.key.dialog_id << ',' << item.key.turn_index
         << ',' << item.key.index_in_turn << ',' << item.label;
      for (double v : table.x.row(r)) os << ',' << fmt::format("{}", v);
      os << '\n';
    }
  }
  sink.Close();
  return kOk;
}

std::string ModelPath(const Settings &s, const std::string &topic, std::size_t topics) {
  if (!s.model.empty()) {
    if (topics > 1) {
      throw InvalidArgument("--model names one file but the corpus has " +
                            std::to_string(topics) + " topics; pass --topic");
    }
    return s.model;
  }
  if (s.out_dir.empty()) throw ConfigError("--model or --out is required");
  return (std::filesystem::path(s.out_dir) / (topic + ".model.json")).string();
}

int Train(const Settings &s, std::ostream &out) {
  const FeatureConfig config = Features(s);
  const FeatureResources resources = LoadFeatureResources(s);
  const ExperimentOptions options = Options(s);
  const std::vector<TopicData> topics = LoadTopics(s);
  for (const TopicData &t : topics) {
    const TrainedTopicModel trained = TrainTopicModel(t, config, resources, options);
    const std::string path = ModelPath(s, t.corpus.topic, topics.size());
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream file(path);
    if (!file) throw ResourceError("cannot write " + path);
    SaveModel(file, trained.model);
    out << fmt::format("{}: lambda={} cv_f={:.4f} train={} test={} -> {}\n",
                       t.corpus.topic, trained.cv.best_lambda,
                       *std::max_element(trained.cv.mean_f.begin(), trained.cv.mean_f.end()),
                       trained.split.train.size(), trained.split.test.size(), path);
  }
  return kOk;
}

int Eval(const Settings &s, std::ostream &out) {
  const FeatureConfig config = Features(s);
  const FeatureResources resources = LoadFeatureResources(s);
  const ExperimentOptions options = Options(s);
  const std::vector<TopicData> topics = LoadTopics(s);
  Output sink(s, "eval.txt", out);
  for (const TopicData &t : topics) {
    std::ifstream in = OpenInput(ModelPath(s, t.corpus.topic, topics.size()), "model");
    const LinearModel model = LoadModel(in);
    WriteReport(sink.stream(), t.corpus.topic,
                EvaluateTopicModel(t, model, config, resources, options));
  }
  sink.Close();
  return kOk;
}

int Ablate(const Settings &s, std::ostream &out) {
  const FeatureResources resources = LoadFeatureResources(s);
  const ExperimentOptions options = Options(s);
  std::string list = s.configs;
  if (list.empty()) {
    list = resources.embeddings ? kDefaultAblationWithEmbeddings : kDefaultAblation;
  }
  const std::vector<AblationConfig> configs = ParseAblationConfigs(list);
  const CorefMode coref = ParseCorefMode(s.coref.empty() ? "both" : s.coref);
  const std::vector<TopicData> topics = LoadTopics(s);
  const AblationTable table = RunAblation(topics, configs, coref, resources, options);
  if (!s.out_dir.empty()) {
    Output records(s, "ablation.jsonl", out);
    WriteAblationJsonl(records.stream(), table);
    records.Close();
    Output text(s, "ablation.txt", out);
    WriteAblationText(text.stream(), table);
    text.Close();
  }
  WriteAblationText(out, table);
  return kOk;
}

int Analyze(const Settings &s, std::ostream &out) {
  const FeatureResources resources = LoadFeatureResources(s);
  const ExperimentOptions options = Options(s);
  const CorefMode coref = ParseCorefMode(s.coref.empty() ? "off" : s.coref);
  if (coref == CorefMode::kBoth) {
    throw InvalidArgument("--coref both is only meaningful for ablate");
  }
  std::vector<TopicChiSquare> results;
  for (const TopicData &t : LoadTopics(s)) {
    results.push_back(AnalyzeTopic(t, resources, options, coref == CorefMode::kOn));
  }
  Output sink(s, "chi_square.txt", out);
  WriteChiSquareText(sink.stream(), results, s.top_k);
  sink.Close();
  return kOk;
}

int ExitCode(const Error &e) {
  switch (e.kind()) {
    case ErrorKind::kInvalidArgument: return kInvalidArgument;
    case ErrorKind::kParse: return kParseError;
    case ErrorKind::kValidation: return kValidationError;
    case ErrorKind::kConfiguration: return kConfigError;
    case ErrorKind::kResource: return kResourceError;
  }
  return kInternalError;
}

std::string EnvName(const std::string &flag) {
  std::string name = kEnvPrefix;
  for (char c : flag) {
    name.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return name;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  Settings s;
  CLI::App app("Identify important argument sentences in two-party dialogs", "argsum");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with default flag values");

  std::vector<std::string> flags;
  auto add = [&](const std::string &name, auto &target, const std::string &help) {
    flags.push_back(name);
    return app.add_option("--" + name, target, help);
  };
  add("corpus", s.corpus, "Dialog corpus (JSON Lines)");
  add("pyramid", s.pyramid, "Pyramid SCU file (JSON Lines)");
  add("annotations", s.annotations, "Sentence-to-SCU annotations (JSON Lines)");
  add("out", s.out_dir, "Output directory; stdout when omitted");
  add("seed", s.seed, "Master random seed")->capture_default_str();
  add("jobs", s.jobs, "Worker threads")->capture_default_str();
  add("topic", s.topic, "Only use dialogs of this topic");
  add("threshold", s.threshold, "Average tier needed for importance")->capture_default_str();
  add("method", s.method, "Baseline: sumbasic, klsum or lexrank")->capture_default_str();
  add("features", s.features, "Feature families, e.g. lcp+r")->capture_default_str();
  add("coref", s.coref, "Pronoun substitution: on, off or both (ablate default both, else off)");
  add("model", s.model, "Model file to write (train) or read (eval)");
  add("test-dialogs", s.test_dialogs, "Dialogs held out per topic")->capture_default_str();
  add("lambda-grid", s.lambda_grid, "Comma-separated regularization values");
  add("epochs", s.epochs, "Training epochs")->capture_default_str();
  add("folds", s.folds, "Cross-validation folds")->capture_default_str();
  add("configs", s.configs, "Ablation rows, e.g. kl,lr,lc,lcp+r,random");
  add("lexicon", s.lexicon, "Category lexicon (LIWC dictionary layout)");
  add("polarity", s.polarity, "Polarity lexicon (word<TAB>score)");
  add("embeddings", s.embeddings, "Word vectors (text format)");
  add("dictionary", s.dictionary, "Dictionary word list for sentence filtering");
  add("verbs", s.verbs, "Verb word list for sentence filtering");
  add("top-k", s.top_k, "Categories listed per topic by analyze")->capture_default_str();

  struct Command {
    const char *name;
    const char *help;
    int (*run)(const Settings &, std::ostream &);
  };
  const Command commands[] = {
      {"ingest", "Validate, segment and filter; emit the sentence table", Ingest},
      {"gold", "Gold importance labels and annotator agreement", Gold},
      {"baseline", "Summarization baseline read as importance labels", Baseline},
      {"featurize", "Per-sentence feature vectors", Featurize},
      {"train", "Cross-validate and fit a linear SVM", Train},
      {"eval", "Score a saved model on the held-out test dialogs", Eval},
      {"ablate", "Feature ablation grid over topics and coref settings", Ablate},
      {"analyze", "Chi-square ranking of category features", Analyze},
  };
  for (const Command &c : commands) app.add_subcommand(c.name, c.help);

  // Environment values become trailing flags, so the command line still
  // wins and both beat the config file.
  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  for (const std::string &flag : flags) {
    const char *value = std::getenv(EnvName(flag).c_str());
    if (value == nullptr) continue;
    const std::string long_flag = "--" + flag;
    const bool given = std::any_of(argv.begin(), argv.end(), [&](const std::string &a) {
      return a == long_flag || a.starts_with(long_flag + "=");
    });
    if (!given) {
      argv.push_back(long_flag);
      argv.push_back(value);
    }
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::FileError &e) {
    err << "argsum: " << e.what() << '\n';
    return kConfigError;
  } catch (const CLI::ConfigError &e) {
    err << "argsum: " << e.what() << '\n';
    return kConfigError;
  } catch (const CLI::ParseError &e) {
    err << "argsum: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    for (const Command &c : commands) {
      if (app.got_subcommand(c.name)) return c.run(s, out);
    }
    err << "argsum: no subcommand\n";
    return kUsageError;
  } catch (const Error &e) {
    err << "argsum: " << e.what() << '\n';
    return ExitCode(e);
  } catch (const std::exception &e) {
    err << "argsum: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace argsum::cli
