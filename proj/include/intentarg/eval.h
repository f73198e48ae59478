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

// Evaluation: ROUGE-1, a greedy embedding-matching semantic score over
// static word vectors, and their mean ("Total"). Also a nearest-neighbour
// retrieval baseline that produces predictions for the harness.

#ifndef INTENTARG_EVAL_H_
#define INTENTARG_EVAL_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "intentarg/textnorm.h"
#include "intentarg/types.h"

namespace intentarg {

// Token vectors, stored unit-normalized. Unknown tokens and zero vectors
// have no direction and score 0 against everything.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(int dimension) : dimension_(dimension) {}

  // Text format: "token v1 ... vd" per line, with an optional "V d" header
  // line that is detected automatically.
  static EmbeddingTable Load(const std::string &path);
  static EmbeddingTable Parse(std::istream &in);

  // The first vector added for a token wins. Throws MalformedEmbeddings on a
  // dimension mismatch.
  void Add(const std::string &token, const std::vector<double> &vector);

  int dimension() const { return dimension_; }
  size_t size() const { return index_.size(); }

  // Unit vector for `token`, or nullptr for unknown/zero vectors.
  const double *Lookup(std::string_view token) const;

  // Clamped cosine in [0, 1]; identical known tokens score exactly 1.
  double Similarity(std::string_view a, std::string_view b) const;

 private:
  struct Hash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>()(s);
    }
  };

  int dimension_ = 0;
  std::unordered_map<std::string, int, Hash, std::equal_to<>> index_;
  std::vector<double> data_;
  std::vector<bool> zero_;
};

struct PrfScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// F1 = 2PR/(P+R), 0 when P+R = 0.
double HarmonicF1(double precision, double recall);

PrfScore Rouge1(const std::vector<std::string> &candidate,
                const std::vector<std::string> &reference);

PrfScore SemanticScore(const std::vector<std::string> &candidate,
                       const std::vector<std::string> &reference,
                       const EmbeddingTable &emb);

struct PairScore {
  double rouge1_p = 0, rouge1_r = 0, rouge1_f = 0;
  double sem_p = 0, sem_r = 0, sem_f = 0;
  double total = 0;
};

PairScore ScoreTokens(const std::vector<std::string> &candidate,
                      const std::vector<std::string> &reference,
                      const EmbeddingTable &emb);

// Both sides are normalized and tokenized with the same analyzer.
PairScore ScorePair(std::string_view candidate, std::string_view reference,
                    const EmbeddingTable &emb,
                    const AnalyzerSpec &analyzer = AnalyzerSpec::Whitespace());

struct EvalReport {
  std::vector<PairScore> pairs;
  size_t count = 0;
  // Per-field arithmetic means; absent for an empty corpus.
  std::optional<PairScore> means;
};

// Means are taken per pair, then averaged; values are summed in sorted
// order so the means do not depend on input order.
EvalReport ScoreCorpus(const std::vector<std::string> &predictions,
                       const std::vector<CorpusRecord> &gold,
                       const EmbeddingTable &emb,
                       const AnalyzerSpec &analyzer = AnalyzerSpec::Whitespace(),
                       int threads = 1);

// Retrieval baseline: the argument of the training record whose sentence
// has the highest ROUGE-1 F1 with the input, lowest index on ties.
class NnBaseline {
 public:
  NnBaseline(const std::vector<CorpusRecord> &train,
             const AnalyzerSpec &analyzer = AnalyzerSpec::Whitespace());

  std::string Predict(std::string_view sentence) const;

 private:
  AnalyzerSpec analyzer_;
  std::vector<std::vector<std::string>> sentences_;
  std::vector<std::string> arguments_;
};

std::string NnBaselinePredict(
    const std::vector<CorpusRecord> &train, std::string_view sentence,
    const AnalyzerSpec &analyzer = AnalyzerSpec::Whitespace());

}  // namespace intentarg

#endif  // INTENTARG_EVAL_H_
