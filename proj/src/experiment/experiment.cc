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

#include "argsum/experiment.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "argsum/error.h"
#include "argsum/rng.h"

namespace argsum {
namespace {

struct RowSpec {
  std::vector<FeatureFamily> families;
  std::string_view id;
};

const std::vector<RowSpec> &KnownRows() {
  using F = FeatureFamily;
  static const std::vector<RowSpec> rows = {
      {{F::kDacPrev}, "2"},
      {{F::kEmbedding}, "3"},
      {{F::kReadability}, "4"},
      {{F::kLiwcCurrent}, "5"},
      {{F::kSentiment}, "6"},
      {{F::kTurnPos}, "7"},
      {{F::kLiwcCurrent, F::kLiwcPrev}, "9"},
      {{F::kReadability, F::kLiwcCurrent, F::kLiwcPrev}, "10"},
      {{F::kReadability, F::kDacPrev}, "11"},
      {{F::kReadability, F::kLiwcCurrent, F::kLiwcPrev, F::kDacPrev}, "12"},
  };
  return rows;
}

std::string RowName(const FeatureConfig &features) {
  std::vector<std::string> parts;
  if (features.Has(FeatureFamily::kLiwcCurrent) &&
      features.Has(FeatureFamily::kLiwcPrev)) {
    parts.push_back("LCP");
  } else if (features.Has(FeatureFamily::kLiwcCurrent)) {
    parts.push_back("LC");
  } else if (features.Has(FeatureFamily::kLiwcPrev)) {
    parts.push_back("LP");
  }
  if (features.Has(FeatureFamily::kReadability)) parts.push_back("R");
  if (features.Has(FeatureFamily::kDacPrev)) parts.push_back("DAC");
  if (features.Has(FeatureFamily::kSentiment)) parts.push_back("SNT");
  if (features.Has(FeatureFamily::kTurnPos)) parts.push_back("ST");
  if (features.Has(FeatureFamily::kEmbedding)) parts.push_back("W2V");
  std::string name;
  for (const std::string &p : parts) {
    if (!name.empty()) name += '+';
    name += p;
  }
  return name;
}

std::string_view ClassifierName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kBaseline: return "Baseline";
    case ClassifierKind::kSvm: return "SVM";
    case ClassifierKind::kShuffledLabelSvm: return "SVM-shuffled";
  }
  return "unknown";
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<int> ItemLabels(const TopicData &topic,
                            std::span<const std::size_t> indices) {
  std::vector<int> y;
  y.reserve(indices.size());
  for (std::size_t i : indices) y.push_back(topic.items[i].label);
  return y;
}

TopicData WithCoref(const TopicData &topic, const FeatureResources &resources) {
  TopicData out = topic;
  for (Dialog &d : out.corpus.dialogs) {
    d = CorefReplace(d, resources.pronouns, resources.stopwords, resources.verbs);
  }
  return out;
}

// Weighted F of each held-out dialog over its balanced test items.
void PerDialogScores(const TopicData &topic, const BalancedSplit &split,
                     std::span<const int> predicted, AblationCell &cell) {
  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> by_dialog;
  for (std::size_t j = 0; j < split.test.size(); ++j) {
    const LabeledItem &item = topic.items[split.test[j]];
    auto &entry = by_dialog[item.key.dialog_id];
    entry.first.push_back(item.label);
    entry.second.push_back(predicted[j]);
  }
  for (const auto &[dialog, labels] : by_dialog) {
    cell.dialogs.push_back(dialog);
    cell.dialog_f.push_back(Prf(labels.first, labels.second).weighted_f);
  }
}

}  // namespace

TextLexicons TextLexicons::Bundled() {
  return {resources::Abbreviations(), resources::Dictionary(), resources::Verbs()};
}

TopicData PrepareTopic(Corpus corpus, const Pyramid &pyramid,
                       std::span<const SentenceAnnotation> annotations,
                       const TextLexicons &lexicons,
                       const GoldOptions &gold_options) {
  ValidateCorpus(corpus);
  SegmentCorpus(corpus, lexicons.abbreviations);
  FilterCorpus(corpus, lexicons.dictionary, lexicons.verbs);

  std::set<std::string> ids;
  for (const Dialog &d : corpus.dialogs) ids.insert(d.dialog_id);
  std::vector<SentenceAnnotation> own;
  for (const SentenceAnnotation &a : annotations) {
    if (ids.contains(a.key.dialog_id)) own.push_back(a);
  }

  TopicData topic;
  for (GoldLabel &g : ComputeGoldLabels(corpus, pyramid, own, gold_options)) {
    topic.gold.emplace(g.key, std::move(g));
  }
  for (const Dialog &d : corpus.dialogs) {
    for (const Sentence *s : d.Sentences()) {
      if (!s->kept) continue;
      topic.items.push_back({s->key(), topic.gold.at(s->key()).important ? 1 : 0});
    }
  }
  topic.corpus = std::move(corpus);
  return topic;
}

FeatureTable FeaturizeTopic(const TopicData &topic, const FeatureConfig &config,
                            const FeatureResources &resources) {
  FeatureTable table;
  table.names = FeatureNames(config, resources);
  table.x = Matrix(0, table.names.size());
  std::size_t next = 0;
  for (const Dialog &d : topic.corpus.dialogs) {
    for (const FeatureVector &fv : ExtractDialogFeatures(d, config, resources)) {
      if (next >= topic.items.size() || topic.items[next].key != fv.key) {
        throw InvalidArgument("topic items are out of step with sentence " +
                              ToString(fv.key));
      }
      table.x.AppendRow(fv.values);
      ++next;
    }
  }
  if (next != topic.items.size()) {
    throw InvalidArgument("topic items do not match the corpus");
  }
  return table;
}

BaselineRun RunBaseline(const TopicData &topic, SummaryMethod method,
                        const LexRankConfig &config, const WordSet &stopwords) {
  BaselineRun run;
  for (const Dialog &d : topic.corpus.dialogs) {
    const std::vector<Sentence> kept = d.KeptSentences();
    int n = 0;
    for (const Sentence &s : kept) {
      if (topic.gold.at(s.key()).important) ++n;
    }
    SummarySelection selection = RunSummarizer(method, kept, n, config, stopwords);
    const Labels labels = BaselineAsLabels(selection, kept);
    run.predicted.insert(run.predicted.end(), labels.begin(), labels.end());
    run.dialog_ids.push_back(d.dialog_id);
    run.selections.push_back(std::move(selection));
  }
  if (run.predicted.size() != topic.items.size()) {
    throw InvalidArgument("baseline labels do not match the topic items");
  }
  return run;
}

BalancedSplit TopicSplit(const TopicData &topic, const ExperimentOptions &options) {
  return MakeBalancedSplit(topic.items, options.test_dialogs,
                           DeriveSeed(options.seed, "split:" + topic.corpus.topic));
}

TrainedTopicModel TrainTopicModel(const TopicData &topic,
                                  const FeatureConfig &config,
                                  const FeatureResources &resources,
                                  const ExperimentOptions &options) {
  TrainedTopicModel trained;
  trained.split = TopicSplit(topic, options);
  const FeatureTable table = FeaturizeTopic(topic, config, resources);
  const Matrix x = table.x.SelectRows(trained.split.train);
  const std::vector<int> y = ItemLabels(topic, trained.split.train);
  const std::string &name = topic.corpus.topic;
  trained.cv = CrossValidate(x, y, options.lambda_grid, options.folds,
                             DeriveSeed(options.seed, "cv:" + name), options.epochs);
  trained.model = TrainSvm(x, y, trained.cv.best_lambda, options.epochs,
                           DeriveSeed(options.seed, "train:" + name), table.names);
  return trained;
}

EvalReport EvaluateTopicModel(const TopicData &topic, const LinearModel &model,
                              const FeatureConfig &config,
                              const FeatureResources &resources,
                              const ExperimentOptions &options) {
  const BalancedSplit split = TopicSplit(topic, options);
  const FeatureTable table = FeaturizeTopic(topic, config, resources);
  if (table.names != model.feature_names) {
    throw InvalidArgument("model features do not match the requested features");
  }
  EvalReport report = Prf(ItemLabels(topic, split.test),
                          PredictLabels(model, table.x.SelectRows(split.test)));
  report.config = "SVM " + FeatureConfigName(config);
  return report;
}

std::vector<AblationConfig> ParseAblationConfigs(std::string_view list) {
  std::vector<AblationConfig> configs;
  std::size_t start = 0;
  while (true) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string item = Lower(Trim(list.substr(start, end - start)));
    if (item.empty()) throw ConfigError("empty entry in config list");
    AblationConfig config;
    if (item == "kl" || item == "sb" || item == "lr") {
      if (item == "kl") {
        config = {"1A", "KL", ClassifierKind::kBaseline, SummaryMethod::kKlSum, {}};
      } else if (item == "sb") {
        config = {"1B", "SB", ClassifierKind::kBaseline, SummaryMethod::kSumBasic, {}};
      } else {
        config = {"1C", "LR", ClassifierKind::kBaseline, SummaryMethod::kLexRank, {}};
      }
    } else if (item == "random") {
      config.id = "CTL";
      config.classifier = ClassifierKind::kShuffledLabelSvm;
      config.features = ParseFeatureList("lc");
      config.name = "LC (shuffled labels)";
    } else {
      config.classifier = ClassifierKind::kSvm;
      config.features = ParseFeatureList(item);
      config.name = RowName(config.features);
      config.id = "-";
      for (const RowSpec &row : KnownRows()) {
        std::vector<FeatureFamily> families = row.families;
        std::sort(families.begin(), families.end());
        if (families == config.features.families) config.id = row.id;
      }
    }
    configs.push_back(std::move(config));
    if (end == list.size()) break;
    start = end + 1;
  }
  return configs;
}

CorefMode ParseCorefMode(std::string_view text) {
  const std::string t = Lower(Trim(text));
  if (t == "off") return CorefMode::kOff;
  if (t == "on") return CorefMode::kOn;
  if (t == "both") return CorefMode::kBoth;
  throw ConfigError("coref mode must be on, off or both, not \"" + std::string(text) + "\"");
}

const AblationCell *AblationRow::Find(std::string_view topic, bool coref) const {
  for (const AblationCell &cell : cells) {
    if (cell.topic == topic && cell.coref == coref) return &cell;
  }
  return nullptr;
}

AblationCell RunAblationCell(const TopicData &topic, const AblationConfig &config,
                             bool coref, const FeatureResources &resources,
                             const ExperimentOptions &options) {
  AblationCell cell;
  cell.topic = topic.corpus.topic;
  cell.coref = coref;
  const BalancedSplit split = TopicSplit(topic, options);
  const std::vector<int> y_test = ItemLabels(topic, split.test);
  std::vector<int> predicted;

  if (config.classifier == ClassifierKind::kBaseline) {
    const BaselineRun run =
        coref ? RunBaseline(WithCoref(topic, resources), config.method,
                            options.lexrank, resources.stopwords)
              : RunBaseline(topic, config.method, options.lexrank, resources.stopwords);
    for (std::size_t i : split.test) predicted.push_back(run.predicted[i]);
  } else {
    FeatureConfig features = config.features;
    features.use_coref = coref;
    const FeatureTable table = FeaturizeTopic(topic, features, resources);
    const Matrix x_train = table.x.SelectRows(split.train);
    std::vector<int> y_train = ItemLabels(topic, split.train);
    const std::string &name = topic.corpus.topic;
    if (config.classifier == ClassifierKind::kShuffledLabelSvm) {
      Rng rng(DeriveSeed(options.seed, "control:" + name));
      rng.Shuffle(std::span<int>(y_train));
    }
    const CrossValidationResult cv =
        CrossValidate(x_train, y_train, options.lambda_grid, options.folds,
                      DeriveSeed(options.seed, "cv:" + name), options.epochs);
    const LinearModel model =
        TrainSvm(x_train, y_train, cv.best_lambda, options.epochs,
                 DeriveSeed(options.seed, "train:" + name), table.names);
    cell.lambda = cv.best_lambda;
    predicted = PredictLabels(model, table.x.SelectRows(split.test));
  }

  cell.report = Prf(y_test, predicted);
  cell.report.config = std::string(ClassifierName(config.classifier)) + " " +
                       config.name + (coref ? " coref" : "");
  PerDialogScores(topic, split, predicted, cell);
  return cell;
}

AblationTable RunAblation(std::span<const TopicData> topics,
                          std::span<const AblationConfig> configs, CorefMode coref,
                          const FeatureResources &resources,
                          const ExperimentOptions &options) {
  struct Job {
    std::size_t row;
    std::size_t topic;
    bool coref;
  };
  AblationTable table;
  table.coref = coref;
  for (const TopicData &t : topics) table.topics.push_back(t.corpus.topic);
  std::vector<Job> jobs;
  for (std::size_t r = 0; r < configs.size(); ++r) {
    table.rows.push_back({configs[r], {}});
    for (std::size_t t = 0; t < topics.size(); ++t) {
      if (coref != CorefMode::kOn) jobs.push_back({r, t, false});
      if (coref != CorefMode::kOff &&
          configs[r].classifier != ClassifierKind::kBaseline) {
        jobs.push_back({r, t, true});
      }
    }
  }

  std::vector<AblationCell> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      try {
        results[j] = RunAblationCell(topics[jobs[j].topic], configs[jobs[j].row],
                                     jobs[j].coref, resources, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  const int threads =
      std::clamp(options.jobs, 1, static_cast<int>(std::max<std::size_t>(1, jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    table.rows[jobs[j].row].cells.push_back(std::move(results[j]));
  }
  return table;
}

std::vector<CorefComparison> CompareCoref(const AblationTable &table) {
  std::vector<CorefComparison> out;
  for (const AblationRow &row : table.rows) {
    for (const std::string &topic : table.topics) {
      const AblationCell *plain = row.Find(topic, false);
      const AblationCell *with = row.Find(topic, true);
      if (plain == nullptr || with == nullptr) continue;
      if (plain->dialogs != with->dialogs || plain->dialog_f.size() < 2) continue;
      out.push_back({row.config.id, topic, PairedTTest(with->dialog_f, plain->dialog_f)});
    }
  }
  return out;
}

void WriteAblationText(std::ostream &out, const AblationTable &table) {
  std::vector<std::pair<std::string, bool>> columns;
  for (const std::string &topic : table.topics) {
    if (table.coref != CorefMode::kOn) columns.emplace_back(topic, false);
    if (table.coref != CorefMode::kOff) columns.emplace_back(topic, true);
  }
  std::size_t name_width = 8;
  for (const AblationRow &row : table.rows) {
    name_width = std::max(name_width, row.config.name.size());
  }
  std::vector<std::string> headers;
  for (const auto &[topic, coref] : columns) {
    headers.push_back(coref ? topic + " coref" : topic);
  }

  std::string line = fmt::format("{:<4} {:<12} {:<{}}", "ID", "Classifier",
                                 "Features", name_width);
  for (const std::string &h : headers) {
    line += fmt::format("  {:>{}}", h, std::max<std::size_t>(h.size(), 6));
  }
  out << line << '\n' << std::string(line.size(), '-') << '\n';
  for (const AblationRow &row : table.rows) {
    line = fmt::format("{:<4} {:<12} {:<{}}", row.config.id,
                       ClassifierName(row.config.classifier), row.config.name,
                       name_width);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const AblationCell *cell = row.Find(columns[c].first, columns[c].second);
      const std::size_t width = std::max<std::size_t>(headers[c].size(), 6);
      line += cell == nullptr
                  ? fmt::format("  {:>{}}", "", width)
                  : fmt::format("  {:>{}.2f}", cell->report.weighted_f, width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  const std::vector<CorefComparison> tests = CompareCoref(table);
  if (!tests.empty()) {
    out << "\nCoref vs plain, paired t-test over test dialogs\n";
    for (const CorefComparison &c : tests) {
      out << fmt::format("{:<4} {:<20} diff={:+.4f} t={:.3f} df={:.0f} p={:.4f}\n",
                         c.row_id, c.topic, c.result.mean_difference, c.result.t,
                         c.result.df, c.result.p_value);
    }
  }
}

void WriteAblationJsonl(std::ostream &out, const AblationTable &table) {
  for (const AblationRow &row : table.rows) {
    for (const AblationCell &cell : row.cells) {
      nlohmann::json per_class = nlohmann::json::array();
      for (int c = 0; c < 2; ++c) {
        const ClassMetrics &m = cell.report.per_class[c];
        per_class.push_back({{"label", c},
                             {"precision", m.precision},
                             {"recall", m.recall},
                             {"f1", m.f1},
                             {"support", m.support}});
      }
      nlohmann::json record = {
          {"id", row.config.id},
          {"config", cell.report.config},
          {"classifier", ClassifierName(row.config.classifier)},
          {"features", row.config.name},
          {"topic", cell.topic},
          {"coref", cell.coref},
          {"weighted_f", cell.report.weighted_f},
          {"per_class", per_class},
          {"dialogs", cell.dialogs},
          {"dialog_f", cell.dialog_f}};
      if (row.config.classifier != ClassifierKind::kBaseline) {
        record["lambda"] = cell.lambda;
      }
      out << record.dump() << '\n';
    }
  }
}

TopicChiSquare AnalyzeTopic(const TopicData &topic, const FeatureResources &resources,
                            const ExperimentOptions &options, bool use_coref) {
  FeatureConfig config = ParseFeatureList("lc");
  config.use_coref = use_coref;
  const FeatureTable table = FeaturizeTopic(topic, config, resources);
  const BalancedSplit split = TopicSplit(topic, options);
  std::vector<std::string> names;
  const std::string prefix = std::string(FamilyName(FeatureFamily::kLiwcCurrent)) + ".";
  for (const std::string &n : table.names) {
    names.push_back(n.starts_with(prefix) ? n.substr(prefix.size()) : n);
  }
  return {topic.corpus.topic,
          ChiSquareRank(table.x.SelectRows(split.train), names,
                        ItemLabels(topic, split.train))};
}

void WriteChiSquareText(std::ostream &out, std::span<const TopicChiSquare> topics,
                        int top_k) {
  for (const TopicChiSquare &t : topics) {
    out << t.topic << '\n';
    const std::size_t n =
        std::min<std::size_t>(t.ranking.entries.size(), static_cast<std::size_t>(std::max(0, top_k)));
    for (std::size_t i = 0; i < n; ++i) {
      out << fmt::format("  {:>2}. {:<16} {:10.4f}\n", i + 1,
                         t.ranking.entries[i].first, t.ranking.entries[i].second);
    }
  }
}

}  // namespace argsum
