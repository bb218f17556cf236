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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "argsum/baselines.h"
#include "argsum/error.h"

namespace argsum {
namespace {

std::vector<std::string> ContentTokens(const Sentence &s,
                                       const WordSet &stopwords) {
  std::vector<std::string> out;
  for (const std::string &t : s.tokens) {
    if (!stopwords.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::vector<std::string>> ContentTokens(
    std::span<const Sentence> sentences, const WordSet &stopwords) {
  std::vector<std::vector<std::string>> out;
  out.reserve(sentences.size());
  for (const Sentence &s : sentences) out.push_back(ContentTokens(s, stopwords));
  return out;
}

int Budget(int n, std::size_t pool) {
  if (n < 0) throw InvalidArgument("summary budget must be non-negative");
  return std::min(n, static_cast<int>(pool));
}

// True if sentence a ranks before b at equal score.
bool EarlierSentence(const Sentence &a, const Sentence &b) {
  return a.global_index < b.global_index;
}

}  // namespace

std::string_view MethodName(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::kSumBasic:
      return "sumbasic";
    case SummaryMethod::kKlSum:
      return "klsum";
    case SummaryMethod::kLexRank:
      return "lexrank";
  }
  return "unknown";
}

SummaryMethod ParseMethod(std::string_view name) {
  if (name == "sumbasic") return SummaryMethod::kSumBasic;
  if (name == "klsum") return SummaryMethod::kKlSum;
  if (name == "lexrank") return SummaryMethod::kLexRank;
  throw ConfigError("unknown summarization method \"" + std::string(name) +
                    "\" (expected sumbasic, klsum or lexrank)");
}

SummarySelection SumBasic(std::span<const Sentence> sentences, int n,
                          const WordSet &stopwords) {
  SummarySelection sel;
  sel.method = SummaryMethod::kSumBasic;
  sel.budget_n = n;
  const int budget = Budget(n, sentences.size());
  const auto content = ContentTokens(sentences, stopwords);

  // Word probabilities, and words in order of first occurrence for ties.
  std::unordered_map<std::string, double> prob;
  std::vector<std::string> words;
  double total = 0.0;
  for (const auto &tokens : content) {
    for (const std::string &t : tokens) {
      auto [it, inserted] = prob.emplace(t, 0.0);
      if (inserted) words.push_back(t);
      it->second += 1.0;
      total += 1.0;
    }
  }
  for (auto &[word, p] : prob) p /= total;

  auto weight = [&](std::size_t i) {
    if (content[i].empty()) return 0.0;
    double sum = 0.0;
    for (const std::string &t : content[i]) sum += prob.at(t);
    return sum / static_cast<double>(content[i].size());
  };
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    sel.scores[sentences[i].global_index] = weight(i);
  }

  std::vector<bool> taken(sentences.size(), false);
  auto best_among = [&](auto &&eligible) {
    int best = -1;
    double best_weight = 0.0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (taken[i] || !eligible(i)) continue;
      const double w = weight(i);
      if (best < 0 || w > best_weight ||
          (w == best_weight && EarlierSentence(sentences[i], sentences[best]))) {
        best = static_cast<int>(i);
        best_weight = w;
      }
    }
    return best;
  };

  for (int picked = 0; picked < budget; ++picked) {
    std::vector<std::string> order = words;
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string &a, const std::string &b) {
                       return prob.at(a) > prob.at(b);
                     });
    int chosen = -1;
    for (const std::string &w : order) {
      chosen = best_among([&](std::size_t i) {
        return std::find(content[i].begin(), content[i].end(), w) !=
               content[i].end();
      });
      if (chosen >= 0) break;
    }
    if (chosen < 0) chosen = best_among([](std::size_t) { return true; });
    taken[chosen] = true;
    sel.selected.push_back(sentences[chosen].global_index);
    std::vector<std::string> seen;
    for (const std::string &t : content[chosen]) {
      if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
      seen.push_back(t);
      prob.at(t) *= prob.at(t);
    }
  }
  return sel;
}

double SummaryKlDivergence(std::span<const Sentence> document,
                           std::span<const Sentence> summary,
                           const WordSet &stopwords, double alpha) {
  std::map<std::string, double> doc_counts;
  double doc_total = 0.0;
  for (const Sentence &s : document) {
    for (const std::string &t : ContentTokens(s, stopwords)) {
      doc_counts[t] += 1.0;
      doc_total += 1.0;
    }
  }
  if (doc_total == 0.0) return 0.0;
  std::map<std::string, double> sum_counts;
  double sum_total = 0.0;
  for (const Sentence &s : summary) {
    for (const std::string &t : ContentTokens(s, stopwords)) {
      if (!doc_counts.contains(t)) continue;
      sum_counts[t] += 1.0;
      sum_total += 1.0;
    }
  }
  const double denom = sum_total + alpha * static_cast<double>(doc_counts.size());
  double kl = 0.0;
  for (const auto &[word, count] : doc_counts) {
    const double p = count / doc_total;
    auto it = sum_counts.find(word);
    const double q = ((it == sum_counts.end() ? 0.0 : it->second) + alpha) / denom;
    kl += p * std::log(p / q);
  }
  return kl;
}

SummarySelection KlSum(std::span<const Sentence> sentences, int n,
                       const WordSet &stopwords) {
  SummarySelection sel;
  sel.method = SummaryMethod::kKlSum;
  sel.budget_n = n;
  const int budget = Budget(n, sentences.size());

  std::vector<Sentence> summary;
  std::vector<bool> taken(sentences.size(), false);
  for (int picked = 0; picked < budget; ++picked) {
    int best = -1;
    double best_kl = 0.0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (taken[i]) continue;
      summary.push_back(sentences[i]);
      const double kl = SummaryKlDivergence(sentences, summary, stopwords);
      summary.pop_back();
      if (best < 0 || kl < best_kl ||
          (kl == best_kl && EarlierSentence(sentences[i], sentences[best]))) {
        best = static_cast<int>(i);
        best_kl = kl;
      }
    }
    taken[best] = true;
    summary.push_back(sentences[best]);
    sel.selected.push_back(sentences[best].global_index);
    sel.scores[sentences[best].global_index] = best_kl;
  }
  return sel;
}

std::vector<double> LexRankTransitionMatrix(std::span<const Sentence> sentences,
                                            double sim_threshold,
                                            const WordSet &stopwords) {
  const std::size_t n = sentences.size();
  const auto content = ContentTokens(sentences, stopwords);

  std::map<std::string, double> df;
  for (const auto &tokens : content) {
    std::vector<std::string> distinct = tokens;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const std::string &t : distinct) df[t] += 1.0;
  }

  std::vector<std::map<std::string, double>> vectors(n);
  std::vector<double> norms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string &t : content[i]) vectors[i][t] += 1.0;
    for (auto &[term, weight] : vectors[i]) {
      weight *= std::log(static_cast<double>(n) / (1.0 + df.at(term))) + 1.0;
      norms[i] += weight * weight;
    }
    norms[i] = std::sqrt(norms[i]);
  }

  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (norms[i] == 0.0 || norms[j] == 0.0) continue;
      double dot = 0.0;
      for (const auto &[term, weight] : vectors[i]) {
        auto it = vectors[j].find(term);
        if (it != vectors[j].end()) dot += weight * it->second;
      }
      const double cosine = dot / (norms[i] * norms[j]);
      if (cosine >= sim_threshold) {
        m[i * n + j] = cosine;
        row_sum += cosine;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = row_sum > 0.0 ? m[i * n + j] / row_sum
                                   : 1.0 / static_cast<double>(n);
    }
  }
  return m;
}

SummarySelection LexRank(std::span<const Sentence> sentences, int n,
                         const LexRankConfig &config, const WordSet &stopwords) {
  SummarySelection sel;
  sel.method = SummaryMethod::kLexRank;
  sel.budget_n = n;
  const int budget = Budget(n, sentences.size());
  const std::size_t count = sentences.size();
  if (count == 0) return sel;

  const std::vector<double> m =
      LexRankTransitionMatrix(sentences, config.sim_threshold, stopwords);
  const double uniform = 1.0 / static_cast<double>(count);
  std::vector<double> p(count, uniform);
  std::vector<double> next(count);
  const double bound_factor =
      config.damping > 0.0 ? (1.0 - config.damping) / config.damping : 0.0;
  sel.converged = false;
  for (int iter = 0; iter < config.max_iter; ++iter) {
    double total = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      double flow = 0.0;
      for (std::size_t i = 0; i < count; ++i) flow += m[i * count + j] * p[i];
      next[j] = config.damping * uniform + (1.0 - config.damping) * flow;
      total += next[j];
    }
    double change = 0.0;
    double l1_change = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      next[j] /= total;
      change = std::max(change, std::abs(next[j] - p[j]));
      l1_change += std::abs(next[j] - p[j]);
    }
    p.swap(next);
    if (change < config.tol && bound_factor * l1_change < config.tol) {
      sel.converged = true;
      break;
    }
  }

  for (std::size_t i = 0; i < count; ++i) sel.scores[sentences[i].global_index] = p[i];
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p[a] != p[b]) return p[a] > p[b];
    return EarlierSentence(sentences[a], sentences[b]);
  });
  for (int k = 0; k < budget; ++k) {
    sel.selected.push_back(sentences[order[k]].global_index);
  }
  return sel;
}

SummarySelection RunSummarizer(SummaryMethod method,
                               std::span<const Sentence> sentences, int n,
                               const LexRankConfig &config,
                               const WordSet &stopwords) {
  switch (method) {
    case SummaryMethod::kSumBasic:
      return SumBasic(sentences, n, stopwords);
    case SummaryMethod::kKlSum:
      return KlSum(sentences, n, stopwords);
    case SummaryMethod::kLexRank:
      return LexRank(sentences, n, config, stopwords);
  }
  throw InvalidArgument("unknown summarization method");
}

Labels BaselineAsLabels(const SummarySelection &selection,
                        std::span<const Sentence> all_kept) {
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < all_kept.size(); ++i) {
    position[all_kept[i].global_index] = i;
  }
  Labels labels(all_kept.size(), 0);
  for (int index : selection.selected) {
    auto it = position.find(index);
    if (it == position.end()) {
      throw InvalidArgument("selection names sentence " + std::to_string(index) +
                            " which is not among the kept sentences");
    }
    labels[it->second] = 1;
  }
  return labels;
}

}  // namespace argsum
