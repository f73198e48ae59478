// Copyright 2026 The Intentarg Authors.
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

#include "intentarg/eval.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <thread>

#include "intentarg/errors.h"

namespace intentarg {
namespace {

bool ParseCount(std::string_view s, long *out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size() && *out >= 0;
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> TokenizeText(std::string_view text,
                                      const AnalyzerSpec &analyzer) {
  return TokenSurfaces(Tokenize(Normalize(text), analyzer));
}

double SortedSum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  return sum;
}

}  // namespace

EmbeddingTable EmbeddingTable::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return Parse(in);
}

EmbeddingTable EmbeddingTable::Parse(std::istream &in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  size_t first = 0;
  while (first < lines.size() && Fields(lines[first]).empty()) ++first;
  if (first == lines.size()) return EmbeddingTable();

  // "V d" header: two integers, and the next data line (if any) carries d
  // components.
  std::vector<std::string_view> head = Fields(lines[first]);
  long vocab, dim;
  bool header = false;
  if (head.size() == 2 && ParseCount(head[0], &vocab) &&
      ParseCount(head[1], &dim) && dim > 0) {
    size_t next = first + 1;
    while (next < lines.size() && Fields(lines[next]).empty()) ++next;
    header = next == lines.size() ||
             Fields(lines[next]).size() == static_cast<size_t>(dim) + 1;
  }
  EmbeddingTable table(header ? static_cast<int>(dim) : 0);
  std::vector<double> vec;
  for (size_t i = header ? first + 1 : first; i < lines.size(); ++i) {
    std::vector<std::string_view> fields = Fields(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw Error(ErrorCode::kMalformedEmbeddings, "vector has no components",
                  static_cast<int>(i + 1));
    }
    vec.assign(fields.size() - 1, 0.0);
    for (size_t k = 1; k < fields.size(); ++k) {
      auto [ptr, ec] = std::from_chars(
          fields[k].data(), fields[k].data() + fields[k].size(), vec[k - 1]);
      if (ec != std::errc() || ptr != fields[k].data() + fields[k].size()) {
        throw Error(ErrorCode::kMalformedEmbeddings,
                    "bad component '" + std::string(fields[k]) + "'",
                    static_cast<int>(i + 1));
      }
    }
    try {
      table.Add(std::string(fields[0]), vec);
    } catch (const Error &e) {
      throw Error(ErrorCode::kMalformedEmbeddings, e.what(),
                  static_cast<int>(i + 1));
    }
  }
  return table;
}

void EmbeddingTable::Add(const std::string &token,
                         const std::vector<double> &vector) {
  if (dimension_ == 0) dimension_ = static_cast<int>(vector.size());
  if (static_cast<int>(vector.size()) != dimension_ || vector.empty()) {
    throw Error(ErrorCode::kMalformedEmbeddings,
                "vector for '" + token + "' has " +
                    std::to_string(vector.size()) + " components, expected " +
                    std::to_string(dimension_));
  }
  if (index_.count(token)) return;
  double norm = 0;
  for (double v : vector) norm += v * v;
  norm = std::sqrt(norm);
  index_.emplace(token, static_cast<int>(zero_.size()));
  zero_.push_back(norm == 0);
  for (double v : vector) data_.push_back(norm == 0 ? 0.0 : v / norm);
}

const double *EmbeddingTable::Lookup(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end() || zero_[it->second]) return nullptr;
  return data_.data() + static_cast<size_t>(it->second) * dimension_;
}

double EmbeddingTable::Similarity(std::string_view a, std::string_view b) const {
  const double *va = Lookup(a);
  const double *vb = Lookup(b);
  if (!va || !vb) return 0.0;
  if (va == vb) return 1.0;
  double dot = 0;
  for (int k = 0; k < dimension_; ++k) dot += va[k] * vb[k];
  return std::clamp(dot, 0.0, 1.0);
}

double HarmonicF1(double precision, double recall) {
  return precision + recall > 0
             ? 2 * precision * recall / (precision + recall)
             : 0.0;
}

PrfScore Rouge1(const std::vector<std::string> &candidate,
                const std::vector<std::string> &reference) {
  if (candidate.empty() && reference.empty()) return {1, 1, 1};
  if (candidate.empty() || reference.empty()) return {0, 0, 0};
  std::vector<std::string_view> c(candidate.begin(), candidate.end());
  std::vector<std::string_view> r(reference.begin(), reference.end());
  std::sort(c.begin(), c.end());
  std::sort(r.begin(), r.end());
  // Merge of the sorted lists counts sum over types of min(count_c, count_r).
  size_t overlap = 0, i = 0, j = 0;
  while (i < c.size() && j < r.size()) {
    if (c[i] < r[j]) {
      ++i;
    } else if (r[j] < c[i]) {
      ++j;
    } else {
      ++overlap;
      ++i;
      ++j;
    }
  }
  double p = static_cast<double>(overlap) / c.size();
  double rec = static_cast<double>(overlap) / r.size();
  return {p, rec, HarmonicF1(p, rec)};
}

PrfScore SemanticScore(const std::vector<std::string> &candidate,
                       const std::vector<std::string> &reference,
                       const EmbeddingTable &emb) {
  if (candidate.empty() && reference.empty()) return {1, 1, 1};
  if (candidate.empty() || reference.empty()) return {0, 0, 0};
  const int d = emb.dimension();
  std::vector<const double *> cv, rv;
  for (const std::string &t : candidate) cv.push_back(emb.Lookup(t));
  for (const std::string &t : reference) rv.push_back(emb.Lookup(t));
  std::vector<double> best_c(cv.size(), 0.0), best_r(rv.size(), 0.0);
  for (size_t i = 0; i < cv.size(); ++i) {
    if (!cv[i]) continue;
    for (size_t j = 0; j < rv.size(); ++j) {
      if (!rv[j]) continue;
      double sim;
      if (cv[i] == rv[j]) {
        sim = 1.0;
      } else {
        double dot = 0;
        for (int k = 0; k < d; ++k) dot += cv[i][k] * rv[j][k];
        sim = std::clamp(dot, 0.0, 1.0);
      }
      best_c[i] = std::max(best_c[i], sim);
      best_r[j] = std::max(best_r[j], sim);
    }
  }
  double p = 0, r = 0;
  for (double v : best_c) p += v;
  for (double v : best_r) r += v;
  p /= cv.size();
  r /= rv.size();
  return {p, r, HarmonicF1(p, r)};
}

PairScore ScoreTokens(const std::vector<std::string> &candidate,
                      const std::vector<std::string> &reference,
                      const EmbeddingTable &emb) {
  PrfScore rouge = Rouge1(candidate, reference);
  PrfScore sem = SemanticScore(candidate, reference, emb);
  PairScore s;
  s.rouge1_p = rouge.precision;
  s.rouge1_r = rouge.recall;
  s.rouge1_f = rouge.f1;
  s.sem_p = sem.precision;
  s.sem_r = sem.recall;
  s.sem_f = sem.f1;
  s.total = (s.rouge1_f + s.sem_f) / 2;
  return s;
}

PairScore ScorePair(std::string_view candidate, std::string_view reference,
                    const EmbeddingTable &emb, const AnalyzerSpec &analyzer) {
  return ScoreTokens(TokenizeText(candidate, analyzer),
                     TokenizeText(reference, analyzer), emb);
}

EvalReport ScoreCorpus(const std::vector<std::string> &predictions,
                       const std::vector<CorpusRecord> &gold,
                       const EmbeddingTable &emb, const AnalyzerSpec &analyzer,
                       int threads) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kAlignmentError,
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold records");
  }
  EvalReport report;
  report.count = gold.size();
  report.pairs.resize(gold.size());
  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      report.pairs[i] = ScorePair(predictions[i], gold[i].argument, emb, analyzer);
    }
  };
  size_t workers = std::max(1, threads);
  if (workers == 1 || gold.size() < 2) {
    work(0, gold.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (gold.size() + workers - 1) / workers;
    for (size_t b = 0; b < gold.size(); b += chunk) {
      pool.emplace_back(work, b, std::min(gold.size(), b + chunk));
    }
    for (std::thread &t : pool) t.join();
  }
  if (report.count == 0) return report;

  auto mean = [&](double PairScore::*field) {
    std::vector<double> values;
    values.reserve(report.pairs.size());
    for (const PairScore &p : report.pairs) values.push_back(p.*field);
    return SortedSum(std::move(values)) / report.count;
  };
  PairScore m;
  m.rouge1_p = mean(&PairScore::rouge1_p);
  m.rouge1_r = mean(&PairScore::rouge1_r);
  m.rouge1_f = mean(&PairScore::rouge1_f);
  m.sem_p = mean(&PairScore::sem_p);
  m.sem_r = mean(&PairScore::sem_r);
  m.sem_f = mean(&PairScore::sem_f);
  m.total = mean(&PairScore::total);
  report.means = m;
  return report;
}

NnBaseline::NnBaseline(const std::vector<CorpusRecord> &train,
                       const AnalyzerSpec &analyzer)
    : analyzer_(analyzer) {
  if (train.empty()) {
    throw Error(ErrorCode::kNoTrainingData, "baseline needs training records");
  }
  for (const CorpusRecord &r : train) {
    sentences_.push_back(TokenizeText(r.sentence, analyzer));
    arguments_.push_back(r.argument);
  }
}

std::string NnBaseline::Predict(std::string_view sentence) const {
  std::vector<std::string> query = TokenizeText(sentence, analyzer_);
  size_t best = 0;
  double best_f = -1;
  for (size_t i = 0; i < sentences_.size(); ++i) {
    double f = Rouge1(query, sentences_[i]).f1;
    if (f > best_f) {
      best_f = f;
      best = i;
    }
  }
  return arguments_[best];
}

std::string NnBaselinePredict(const std::vector<CorpusRecord> &train,
                              std::string_view sentence,
                              const AnalyzerSpec &analyzer) {
  return NnBaseline(train, analyzer).Predict(sentence);
}

}  // namespace intentarg
