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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "argsum/baselines.h"
#include "argsum/cli.h"
#include "argsum/eval.h"
#include "argsum/features.h"
#include "argsum/model.h"
#include "argsum/pyramid.h"
#include "argsum/rng.h"
#include "json.hpp"
#include "oracles.h"
#include "test_util.h"

namespace argsum {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failure reasons for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string Summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) {
      s += (i ? "; " : "") + failures_[i];
    }
    if (failures_.size() > 3) s += fmt::format("; +{} more", failures_.size() - 3);
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::vector<std::vector<Sentence>> FixtureDialogs() {
  std::ifstream in(testing::FixturePath("small_dialogs.jsonl"));
  Corpus corpus = ParseCorpus(in);
  SegmentCorpus(corpus);
  FilterCorpus(corpus, resources::Dictionary(), resources::Verbs());
  std::vector<std::vector<Sentence>> out;
  for (const Dialog &d : corpus.dialogs) out.push_back(d.KeptSentences());
  return out;
}

std::string Baselines(Checker &c) {
  const auto start = Clock::now();
  const WordSet &stop = resources::Stopwords();
  int dialogs = 0;
  double worst_lexrank = 0.0;
  for (const auto &dialog : FixtureDialogs()) {
    ++dialogs;
    c.Expect(!dialog.empty() && dialog.size() <= 6, "fixture dialog size outside 1..6");
    const std::size_t best = oracles::BruteForceKlFirstPick(dialog, stop, kKlSmoothing);
    c.Expect(KlSum(dialog, 1).selected.at(0) == dialog[best].global_index,
             "KL-Sum first pick differs from brute force");
    const LexRankConfig config;
    const SummarySelection lr = LexRank(dialog, 1, config);
    const auto m = oracles::DenseLexRankMatrix(dialog, stop, config.sim_threshold);
    const auto p = oracles::DenseStationary(m, dialog.size(), config.damping);
    for (std::size_t i = 0; i < dialog.size(); ++i) {
      worst_lexrank =
          std::max(worst_lexrank, std::abs(lr.scores.at(dialog[i].global_index) - p[i]));
    }
  }
  c.Expect(worst_lexrank <= 1e-6, fmt::format("LexRank off by {:.2e}", worst_lexrank));

  const WordSet none;
  const auto s = testing::MakeSentences({"guns kill", "guns save", "cats purr"});
  const SummarySelection sb = SumBasic(s, 3, none);
  c.Expect(sb.selected == std::vector<int>{0, 1, 2}, "SumBasic pick order");
  c.Expect(sb.scores.at(0) == 0.25 && sb.scores.at(1) == 0.25 &&
               std::abs(sb.scores.at(2) - 1.0 / 6) < 1e-15,
           "SumBasic initial scores");
  const double elapsed = Seconds(start);
  c.Expect(elapsed < 5.0, fmt::format("took {:.2f} s", elapsed));
  return fmt::format("{} dialogs, LexRank max error {:.1e}, {:.3f} s", dialogs, worst_lexrank,
                     elapsed);
}

std::string Readability(Checker &c) {
  double worst = 0.0;
  for (const auto &row : oracles::kReadabilityFixture) {
    const auto got = ReadabilityVector(testing::MakeSentence(row.text));
    const auto want = oracles::ReadabilityByHand(1, row.words, row.letters, row.syllables,
                                                 row.complex_words, row.long_words);
    for (std::size_t i = 0; i < got.size(); ++i) {
      worst = std::max(worst, std::abs(got[i] - want[i]));
    }
  }
  c.Expect(worst <= 1e-9, fmt::format("max error {:.2e}", worst));
  return fmt::format("10 sentences x 8 formulas, max error {:.1e}", worst);
}

std::string Tiers(Checker &c) {
  std::ifstream in(testing::FixturePath("table1_pyramid.jsonl"));
  const Pyramid pyramid = ParsePyramid(in);
  c.Expect(pyramid.size() == 3, "expected three SCUs");
  c.Expect(pyramid.at("gun.1").tier == 5, "gun.1 tier");
  c.Expect(pyramid.at("gun.2").tier == 3, "gun.2 tier");
  c.Expect(pyramid.at("gun.3").tier == 1, "gun.3 tier");
  SentenceAnnotation a;
  a.key = {"d", 0, 0};
  a.assignments = {{"x", {"gun.1"}}, {"y", {"gun.3"}}, {"z", {"gun.2"}}};
  const double avg = AggregateSentenceScore(a, pyramid, TierAveraging::kPooled);
  c.Expect(avg == 3.0, fmt::format("average tier {}", avg));
  c.Expect(GoldImportance(avg), "average tier 3.0 is not important");
  c.Expect(!GoldImportance(2.999), "average tier below 3 is important");
  return fmt::format("tiers 5/3/1, average {} -> important", avg);
}

std::string Kappa(Checker &c) {
  const double one = CohenKappa(Labels{1, 0, 1, 0}, Labels{1, 0, 1, 0});
  const double zero = CohenKappa(Labels{1, 1, 0, 0}, Labels{1, 0, 1, 0});
  const double half = CohenKappa(Labels{1, 1, 1, 0}, Labels{1, 1, 0, 0});
  c.Expect(one == 1.0, fmt::format("identical gives {}", one));
  c.Expect(zero == 0.0, fmt::format("chance gives {}", zero));
  c.Expect(half == 0.5, fmt::format("half gives {}", half));
  Rng rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, Labels> raters;
    const int count = 2 + static_cast<int>(rng.Below(4));
    for (int r = 0; r < count; ++r) {
      Labels l;
      for (int i = 0; i < 12; ++i) l.push_back(static_cast<int>(rng.Below(2)));
      raters["r" + std::to_string(r)] = l;
    }
    worst = std::max(worst, std::abs(AveragePairwiseKappa(raters) -
                                     oracles::EnumeratedMeanKappa(raters)));
  }
  c.Expect(worst < 1e-12, fmt::format("pairwise average off by {:.2e}", worst));
  return fmt::format("0.0/0.5/1.0 exact, pairwise max error {:.1e}", worst);
}

std::string Model(Checker &c) {
  Matrix x(0, 3);
  std::vector<int> y;
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const int label = i % 2;
    const double center = label == 1 ? 3.0 : -3.0;
    const std::vector<double> row = {center + rng.Uniform() - 0.5,
                                     0.5 * center + rng.Uniform() - 0.5,
                                     rng.Uniform() * 4.0 - 2.0};
    x.AppendRow(row);
    y.push_back(label);
  }
  const LinearModel m = TrainSvm(x, y, 1e-3, kDefaultEpochs, 7);
  const std::vector<int> pred = PredictLabels(m, x);
  int correct = 0;
  for (std::size_t i = 0; i < y.size(); ++i) correct += pred[i] == y[i];
  c.Expect(correct == 20, fmt::format("training accuracy {}/20", correct));

  const LinearModel again = TrainSvm(x, y, 1e-3, kDefaultEpochs, 7);
  c.Expect(std::memcmp(m.weights.data(), again.weights.data(),
                       m.weights.size() * sizeof(double)) == 0 &&
               std::memcmp(&m.bias, &again.bias, sizeof(double)) == 0,
           "same seed not bitwise identical");

  Matrix noisy = x;
  for (std::size_t r = 0; r < noisy.rows(); r += 3) noisy.at(r, 0) = -noisy.at(r, 0);
  Matrix rescaled = noisy;
  for (std::size_t r = 0; r < noisy.rows(); ++r) rescaled.at(r, 0) = 1000.0 * noisy.at(r, 0) + 7;
  c.Expect(PredictLabels(TrainSvm(noisy, y, 1e-2, 30, 5), noisy) ==
               PredictLabels(TrainSvm(rescaled, y, 1e-2, 30, 5), rescaled),
           "rescaling a column changed predictions");
  return fmt::format("accuracy {}/20, deterministic, scale invariant", correct);
}

std::string Statistics(Checker &c) {
  const std::vector<double> a = {0.2, 0.5, 0.9, 0.4};
  const double p_same = PairedTTest(a, a).p_value;
  c.Expect(p_same == 1.0, fmt::format("t-test(a, a) p = {}", p_same));
  double worst = 0.0;
  for (const auto &row : oracles::kTTableDf3) {
    worst = std::max(worst, std::abs(StudentTTwoSidedP(row.t, 3) - row.p));
  }
  c.Expect(worst <= 1e-3, fmt::format("t-table off by {:.2e}", worst));

  const std::vector<int> labels = {1, 0, 1, 1, 0, 0, 1, 0, 1, 0};
  Matrix x(labels.size(), 3);
  Rng rng(2);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    x.at(r, 0) = rng.Uniform();
    x.at(r, 1) = 4.0;
    x.at(r, 2) = labels[r] + 0.1 * rng.Uniform();
  }
  const std::vector<std::string> names = {"noise", "constant", "perfect"};
  const ChiSquareRanking ranking = ChiSquareRank(x, names, labels);
  c.Expect(ranking.entries.front().first == "perfect", "perfect feature not ranked first");
  c.Expect(ranking.entries.front().second == static_cast<double>(labels.size()),
           fmt::format("perfect association scores {}", ranking.entries.front().second));
  return fmt::format("p(a,a)=1, df=3 table max error {:.1e}, chi2 = N = {}", worst,
                     labels.size());
}

std::string ReadFile(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Ablation(Checker &c) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "argsum_acceptance";
  std::vector<std::string> outputs;
  double elapsed = 0.0;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = base / std::to_string(run);
    fs::remove_all(dir);
    const std::vector<std::string> args = {
        "argsum", "ablate",
        "--corpus", testing::MiniCorpusPath("corpus.jsonl"),
        "--pyramid", testing::MiniCorpusPath("pyramid.jsonl"),
        "--annotations", testing::MiniCorpusPath("annotations.jsonl"),
        "--test-dialogs", "3", "--jobs", "1", "--out", dir.string()};
    std::ostringstream out;
    std::ostringstream err;
    const auto start = Clock::now();
    const int code = cli::Run(args, out, err);
    elapsed = std::max(elapsed, Seconds(start));
    c.Expect(code == 0, fmt::format("ablate exited {}: {}", code, err.str()));
    outputs.push_back(ReadFile(dir / "ablation.jsonl") + out.str());
  }
  fs::remove_all(base);
  c.Expect(elapsed < 120.0, fmt::format("took {:.1f} s", elapsed));
  c.Expect(outputs[0] == outputs[1], "two runs differ");

  std::map<std::string, std::set<std::pair<std::string, bool>>> cells;
  std::map<std::pair<std::string, std::string>, double> plain_f;
  std::istringstream lines(outputs[0]);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] != '{') continue;
    const nlohmann::json record = nlohmann::json::parse(line);
    const std::string id = record.at("id");
    const std::string topic = record.at("topic");
    const bool coref = record.at("coref");
    cells[id].insert({topic, coref});
    if (!coref) plain_f[{id, topic}] = record.at("weighted_f");
  }
  const std::vector<std::string> svm_rows = {"2", "4", "5", "6", "7", "9", "10", "11", "12"};
  const std::vector<std::string> baseline_rows = {"1A", "1B", "1C"};
  const std::vector<std::string> topics = {"gay_marriage", "gun_control"};
  for (const std::string &id : svm_rows) {
    c.Expect(cells[id].size() == 4, fmt::format("row {} has {} cells", id, cells[id].size()));
  }
  for (const std::string &id : baseline_rows) {
    c.Expect(cells[id].size() == 2, fmt::format("row {} has {} cells", id, cells[id].size()));
  }
  std::string detail;
  for (const std::string &topic : topics) {
    const double lc = plain_f[{"5", topic}];
    const double control = plain_f[{"CTL", topic}];
    c.Expect(plain_f.contains({"5", topic}) && lc >= 0.9,
             fmt::format("{} LC weighted F {:.3f}", topic, lc));
    c.Expect(plain_f.contains({"CTL", topic}) && lc > control,
             fmt::format("{} LC {:.3f} not above control {:.3f}", topic, lc, control));
    detail += fmt::format("{} LC {:.2f} vs control {:.2f}, ", topic, lc, control);
  }
  return detail + fmt::format("{} rows, {:.2f} s", cells.size(), elapsed);
}

std::string Balance(Checker &c) {
  int splits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::vector<LabeledItem> items;
    const int dialogs = 4 + static_cast<int>(rng.Below(10));
    for (int d = 0; d < dialogs; ++d) {
      const int n = 2 + static_cast<int>(rng.Below(8));
      for (int s = 0; s < n; ++s) {
        const int label = s < 2 ? s : (rng.Uniform() < 0.3 ? 1 : 0);
        items.push_back({{"d" + std::to_string(d), s, 0}, label});
      }
    }
    const int held = 1 + static_cast<int>(rng.Below(dialogs - 1));
    const BalancedSplit split = MakeBalancedSplit(items, held, seed);
    ++splits;
    for (const auto *part : {&split.train, &split.test}) {
      int pos = 0;
      for (std::size_t i : *part) pos += items[i].label;
      c.Expect(2 * pos == static_cast<int>(part->size()),
               fmt::format("seed {}: {} of {} positive", seed, pos, part->size()));
    }
    const std::set<std::string> test(split.test_dialogs.begin(), split.test_dialogs.end());
    c.Expect(static_cast<int>(test.size()) == held, "wrong number of held-out dialogs");
    for (std::size_t i : split.train) {
      c.Expect(!test.contains(items[i].key.dialog_id), "training item from a held-out dialog");
    }
    auto flipped = items;
    for (auto &item : flipped) item.label = 1 - item.label;
    c.Expect(MakeBalancedSplit(flipped, held, seed).test_dialogs == split.test_dialogs,
             "held-out dialogs depend on labels");
  }
  return fmt::format("{} random splits balanced, holdout chosen before balancing", splits);
}

struct Criterion {
  int number;
  const char *name;
  std::function<std::string(Checker &)> run;
};

}  // namespace
}  // namespace argsum

int main() {
  using argsum::Checker;
  const std::vector<argsum::Criterion> criteria = {
      {1, "baseline oracles", argsum::Baselines},
      {2, "readability formulas", argsum::Readability},
      {3, "pyramid tiers and threshold", argsum::Tiers},
      {4, "kappa fixtures and pairwise averaging", argsum::Kappa},
      {5, "linear SVM toy, determinism, scale invariance", argsum::Model},
      {6, "t-test and chi-square", argsum::Statistics},
      {7, "ablation grid on the mini-corpus", argsum::Ablation},
      {8, "balanced partitions", argsum::Balance},
  };
  int failed = 0;
  for (const argsum::Criterion &criterion : criteria) {
    Checker c;
    std::string detail;
    try {
      detail = criterion.run(c);
    } catch (const std::exception &e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.ok();
    failed += ok ? 0 : 1;
    std::cout << fmt::format("{} [{}] {}: {}\n", ok ? "PASS" : "FAIL", criterion.number,
                             criterion.name, ok ? detail : c.Summary());
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
