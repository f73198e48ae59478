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

// Corpus files, validation, statistics, splitting and inter-annotator
// agreement.
//
// File format: UTF-8, one record per line, tab-separated columns
//
//   label  sentence  argument  [notation  [topic]]
//
// label is an integer code (0..5) or a tag/name depending on the label
// format. When only a topic is present the notation column is left empty.
// Blank lines are ignored. With `header` set, a first line starting with
// "label" is skipped on read and written on output.

#ifndef INTENTARG_CORPUS_H_
#define INTENTARG_CORPUS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intentarg/random.h"
#include "intentarg/rules.h"
#include "intentarg/types.h"

namespace intentarg {

enum class LabelFormat { kInt, kString };

LabelFormat LabelFormatFromName(std::string_view name);  // "int" | "str"

struct CorpusFormat {
  LabelFormat labels = LabelFormat::kInt;
  bool header = false;
};

std::vector<CorpusRecord> ParseCorpus(std::string_view text,
                                      const CorpusFormat &format = {});
std::vector<CorpusRecord> ReadCorpus(const std::string &path,
                                     const CorpusFormat &format = {});
std::string FormatCorpus(const std::vector<CorpusRecord> &records,
                         const CorpusFormat &format = {});
void WriteCorpus(const std::vector<CorpusRecord> &records,
                 const std::string &path, const CorpusFormat &format = {});

// Validation.

enum class ViolationKind {
  kEmptyField,
  kPunctuationInSentence,
  kHeadMismatch,
  kResidualPronoun,
  kResidualPoliteness,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;

  bool operator==(const Violation &other) const = default;
};

std::vector<Violation> Validate(const CorpusRecord &record,
                                const RuleSet &rules, HeadPosition position);
inline std::vector<Violation> Validate(const CorpusRecord &record,
                                       const RuleSet &rules) {
  return Validate(record, rules, rules.head_position());
}

// Statistics.

struct CorpusStats {
  std::array<int64_t, 6> per_type{};
  std::array<int64_t, 5> per_topic{};
  int64_t untagged_topic = 0;
  int64_t total = 0;

  int64_t count(SpeechActType type) const { return per_type[LabelCode(type)]; }
  int64_t count(Topic topic) const {
    return per_topic[static_cast<int>(topic)];
  }
  CorpusStats &operator+=(const CorpusStats &other);
  bool operator==(const CorpusStats &other) const = default;
};

CorpusStats operator+(CorpusStats a, const CorpusStats &b);
CorpusStats Stats(const std::vector<CorpusRecord> &records);

// Splitting.

// A fraction num/den with 0 < num < den.
struct Fraction {
  int64_t num = 9;
  int64_t den = 10;
};

// Accepts "9:1" (train:test), "9/10" and decimals such as "0.9".
Fraction ParseFraction(std::string_view text);

struct SplitSpec {
  Fraction train_fraction;
  uint64_t seed = kDefaultSeed;
};

struct SplitResult {
  std::vector<CorpusRecord> train;
  std::vector<CorpusRecord> test;
};

// round((1 - train) * n), halves rounded up.
int64_t TestSize(int64_t n, const Fraction &train_fraction);

// The test part is the first TestSize() indices of a seeded shuffle of
// 0..n-1; both parts keep the input order.
SplitResult Split(const std::vector<CorpusRecord> &records,
                  const SplitSpec &spec);

std::vector<CorpusRecord> StripNotation(std::vector<CorpusRecord> records);

// Agreement.

class AgreementMatrix {
 public:
  // counts[i][j]: raters who put item i in category j; every row must sum
  // to `raters`.
  AgreementMatrix(std::vector<std::vector<int64_t>> counts, int64_t raters);

  // One row per item, one category index per rater.
  static AgreementMatrix FromRatings(
      const std::vector<std::vector<int>> &ratings, int categories);

  // Whitespace-separated counts, one item per line; raters is taken from
  // the first row.
  static AgreementMatrix Parse(std::string_view text);

  const std::vector<std::vector<int64_t>> &counts() const { return counts_; }
  int64_t raters() const { return raters_; }
  size_t items() const { return counts_.size(); }
  size_t categories() const { return counts_.front().size(); }

 private:
  std::vector<std::vector<int64_t>> counts_;
  int64_t raters_;
};

// Fleiss' kappa, computed over exact integer sums.
double FleissKappa(const AgreementMatrix &m);

}  // namespace intentarg

#endif  // INTENTARG_CORPUS_H_
