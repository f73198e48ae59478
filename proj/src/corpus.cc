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

#include "intentarg/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "intentarg/errors.h"
#include "intentarg/extractor.h"
#include "intentarg/textnorm.h"

namespace intentarg {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseInt(std::string_view text, int64_t *out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

SpeechActType ParseLabel(std::string_view text, LabelFormat format, int line) {
  try {
    if (format == LabelFormat::kInt) {
      int64_t code;
      if (!ParseInt(text, &code) || code < 0 || code > 5) {
        throw Error(ErrorCode::kInvalidLabel,
                    "invalid label code '" + std::string(text) + "'");
      }
      return LabelFromCode(static_cast<int>(code));
    }
    return LabelFromTag(text);
  } catch (const Error &e) {
    throw Error(ErrorCode::kInvalidLabel,
                "unknown label '" + std::string(text) + "'", line);
  }
}

void CheckWritable(const std::string &field) {
  if (field.find_first_of("\t\r\n") != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "field contains a tab or line break: '" + field + "'");
  }
}

}  // namespace

LabelFormat LabelFormatFromName(std::string_view name) {
  if (name == "int") return LabelFormat::kInt;
  if (name == "str") return LabelFormat::kString;
  throw Error(ErrorCode::kInvalidArgument,
              "label format must be 'int' or 'str', got '" +
                  std::string(name) + "'");
}

std::vector<CorpusRecord> ParseCorpus(std::string_view text,
                                      const CorpusFormat &format) {
  std::vector<CorpusRecord> records;
  int line_no = 0;
  size_t start = 0;
  bool first = true;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (first && format.header && line.substr(0, 5) == "label") {
      first = false;
      continue;
    }
    first = false;

    std::vector<std::string_view> cols = SplitTabs(line);
    if (cols.size() < 3 || cols.size() > 5) {
      throw Error(ErrorCode::kParseError,
                  "expected 3 to 5 tab-separated columns, got " +
                      std::to_string(cols.size()),
                  line_no);
    }
    CorpusRecord record;
    record.label = ParseLabel(cols[0], format.labels, line_no);
    record.sentence = std::string(cols[1]);
    record.argument = std::string(cols[2]);
    try {
      if (cols.size() >= 4 && !cols[3].empty()) {
        record.notation = NotationFromTag(cols[3]);
      }
      if (cols.size() == 5) record.topic = TopicFromTag(cols[4]);
    } catch (const Error &e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<CorpusRecord> ReadCorpus(const std::string &path,
                                     const CorpusFormat &format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCorpus(buf.str(), format);
}

std::string FormatCorpus(const std::vector<CorpusRecord> &records,
                         const CorpusFormat &format) {
  std::string out;
  if (format.header) out += "label\tsentence\targument\tnotation\ttopic\n";
  for (const CorpusRecord &r : records) {
    CheckWritable(r.sentence);
    CheckWritable(r.argument);
    if (format.labels == LabelFormat::kInt) {
      out += std::to_string(LabelCode(r.label));
    } else {
      out += LabelTag(r.label);
    }
    out += '\t';
    out += r.sentence;
    out += '\t';
    out += r.argument;
    if (r.notation || r.topic) {
      out += '\t';
      if (r.notation) out += NotationTag(*r.notation);
    }
    if (r.topic) {
      out += '\t';
      out += TopicTag(*r.topic);
    }
    out += '\n';
  }
  return out;
}

void WriteCorpus(const std::vector<CorpusRecord> &records,
                 const std::string &path, const CorpusFormat &format) {
  std::string text = FormatCorpus(records, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out.flush()) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyField: return "EmptyField";
    case ViolationKind::kPunctuationInSentence: return "PunctuationInSentence";
    case ViolationKind::kHeadMismatch: return "HeadMismatch";
    case ViolationKind::kResidualPronoun: return "ResidualPronoun";
    case ViolationKind::kResidualPoliteness: return "ResidualPoliteness";
  }
  return "?";
}

std::vector<Violation> Validate(const CorpusRecord &record,
                                const RuleSet &rules, HeadPosition position) {
  std::vector<Violation> out;
  std::string sentence = Normalize(record.sentence);
  std::string argument = Normalize(record.argument);
  if (sentence.empty()) {
    out.push_back({ViolationKind::kEmptyField, "sentence"});
  }
  if (argument.empty()) {
    out.push_back({ViolationKind::kEmptyField, "argument"});
  }
  for (char32_t cp : DecodeUtf8(record.sentence)) {
    if (IsStrippedPunctuation(cp)) {
      out.push_back({ViolationKind::kPunctuationInSentence,
                     "'" + EncodeUtf8(std::u32string(1, cp)) + "'"});
      break;
    }
  }
  if (argument.empty()) return out;

  IntentArgument parsed = ParseArgument(argument, rules, position);
  if (!HeadAllowed(record.label, parsed.head)) {
    out.push_back({ViolationKind::kHeadMismatch,
                   std::string(HeadName(parsed.head)) + " under " +
                       std::string(LabelName(record.label))});
  }
  std::vector<std::string> tokens = SplitWhitespace(argument);
  for (const std::string &t : tokens) {
    if (rules.IsPronoun(t)) {
      out.push_back({ViolationKind::kResidualPronoun, t});
      break;
    }
  }
  std::vector<std::string> polite = StripPoliteness(tokens, rules);
  if (polite.size() != tokens.size()) {
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (i >= polite.size() || polite[i] != tokens[i]) {
        out.push_back({ViolationKind::kResidualPoliteness, tokens[i]});
        break;
      }
    }
  }
  return out;
}

CorpusStats &CorpusStats::operator+=(const CorpusStats &other) {
  for (size_t i = 0; i < per_type.size(); ++i) per_type[i] += other.per_type[i];
  for (size_t i = 0; i < per_topic.size(); ++i) {
    per_topic[i] += other.per_topic[i];
  }
  untagged_topic += other.untagged_topic;
  total += other.total;
  return *this;
}

CorpusStats operator+(CorpusStats a, const CorpusStats &b) { return a += b; }

CorpusStats Stats(const std::vector<CorpusRecord> &records) {
  CorpusStats stats;
  for (const CorpusRecord &r : records) {
    ++stats.per_type[LabelCode(r.label)];
    if (r.topic) {
      ++stats.per_topic[static_cast<int>(*r.topic)];
    } else {
      ++stats.untagged_topic;
    }
  }
  stats.total = static_cast<int64_t>(records.size());
  return stats;
}

Fraction ParseFraction(std::string_view text) {
  auto fail = [&]() -> Fraction {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid fraction '" + std::string(text) + "'");
  };
  Fraction f;
  size_t sep = text.find_first_of(":/");
  if (sep != std::string_view::npos) {
    int64_t a, b;
    if (!ParseInt(text.substr(0, sep), &a) ||
        !ParseInt(text.substr(sep + 1), &b)) {
      return fail();
    }
    if (text[sep] == ':') {
      f = {a, a + b};
    } else {
      f = {a, b};
    }
  } else {
    size_t dot = text.find('.');
    if (dot == std::string_view::npos || dot + 1 == text.size() ||
        dot + 1 + 15 < text.size()) {
      return fail();
    }
    int64_t whole = 0, frac = 0;
    if ((dot > 0 && !ParseInt(text.substr(0, dot), &whole)) ||
        !ParseInt(text.substr(dot + 1), &frac)) {
      return fail();
    }
    int64_t den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    f = {whole * den + frac, den};
  }
  if (f.num <= 0 || f.den <= 0 || f.num >= f.den) return fail();
  int64_t g = std::gcd(f.num, f.den);
  return {f.num / g, f.den / g};
}

int64_t TestSize(int64_t n, const Fraction &train_fraction) {
  if (train_fraction.num <= 0 || train_fraction.num >= train_fraction.den) {
    throw Error(ErrorCode::kInvalidArgument,
                "train fraction must lie strictly between 0 and 1");
  }
  __int128 den = train_fraction.den;
  __int128 test_num = (den - train_fraction.num) * n;
  return static_cast<int64_t>((test_num * 2 + den) / (den * 2));
}

SplitResult Split(const std::vector<CorpusRecord> &records,
                  const SplitSpec &spec) {
  int64_t n = static_cast<int64_t>(records.size());
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "need at least 2 records to split, got " + std::to_string(n));
  }
  int64_t test_size = TestSize(n, spec.train_fraction);
  std::vector<int64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SeededRng rng(spec.seed);
  rng.Shuffle(&order);
  std::vector<bool> in_test(n, false);
  for (int64_t i = 0; i < test_size; ++i) in_test[order[i]] = true;

  SplitResult result;
  result.test.reserve(test_size);
  result.train.reserve(n - test_size);
  for (int64_t i = 0; i < n; ++i) {
    (in_test[i] ? result.test : result.train).push_back(records[i]);
  }
  return result;
}

std::vector<CorpusRecord> StripNotation(std::vector<CorpusRecord> records) {
  for (CorpusRecord &r : records) r.notation.reset();
  return records;
}

AgreementMatrix::AgreementMatrix(std::vector<std::vector<int64_t>> counts,
                                 int64_t raters)
    : counts_(std::move(counts)), raters_(raters) {
  if (raters_ < 2) {
    throw Error(ErrorCode::kMalformedMatrix, "need at least 2 raters");
  }
  if (counts_.empty() || counts_.front().empty()) {
    throw Error(ErrorCode::kMalformedMatrix,
                "need at least one item and one category");
  }
  for (size_t i = 0; i < counts_.size(); ++i) {
    const auto &row = counts_[i];
    if (row.size() != counts_.front().size()) {
      throw Error(ErrorCode::kMalformedMatrix,
                  "row " + std::to_string(i + 1) + " has a different width");
    }
    int64_t sum = 0;
    for (int64_t c : row) {
      if (c < 0) {
        throw Error(ErrorCode::kMalformedMatrix,
                    "row " + std::to_string(i + 1) + " has a negative count");
      }
      sum += c;
    }
    if (sum != raters_) {
      throw Error(ErrorCode::kMalformedMatrix,
                  "row " + std::to_string(i + 1) + " sums to " +
                      std::to_string(sum) + ", expected " +
                      std::to_string(raters_));
    }
  }
}

AgreementMatrix AgreementMatrix::FromRatings(
    const std::vector<std::vector<int>> &ratings, int categories) {
  if (ratings.empty() || categories < 1) {
    throw Error(ErrorCode::kMalformedMatrix, "no ratings");
  }
  std::vector<std::vector<int64_t>> counts;
  for (const auto &item : ratings) {
    std::vector<int64_t> row(categories, 0);
    for (int c : item) {
      if (c < 0 || c >= categories) {
        throw Error(ErrorCode::kMalformedMatrix,
                    "category " + std::to_string(c) + " out of range");
      }
      ++row[c];
    }
    counts.push_back(std::move(row));
  }
  int64_t raters = static_cast<int64_t>(ratings.front().size());
  return AgreementMatrix(std::move(counts), raters);
}

AgreementMatrix AgreementMatrix::Parse(std::string_view text) {
  std::vector<std::vector<int64_t>> counts;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<int64_t> row;
    for (const std::string &field : SplitWhitespace(line)) {
      int64_t v;
      if (!ParseInt(field, &v)) {
        throw Error(ErrorCode::kParseError, "not an integer: '" + field + "'",
                    line_no);
      }
      row.push_back(v);
    }
    if (!row.empty()) counts.push_back(std::move(row));
  }
  if (counts.empty()) throw Error(ErrorCode::kMalformedMatrix, "empty matrix");
  int64_t raters = 0;
  for (int64_t c : counts.front()) raters += c;
  return AgreementMatrix(std::move(counts), raters);
}

double FleissKappa(const AgreementMatrix &m) {
  // With N items, n raters, S = sum of squared cell counts and C = sum of
  // squared column totals, scaling numerator and denominator by
  // (Nn)^2 (n-1) leaves only integers.
  const __int128 n = m.raters();
  const __int128 items = static_cast<__int128>(m.items());
  __int128 s = 0;
  std::vector<__int128> column(m.categories(), 0);
  for (const auto &row : m.counts()) {
    for (size_t j = 0; j < row.size(); ++j) {
      s += static_cast<__int128>(row[j]) * row[j];
      column[j] += row[j];
    }
  }
  __int128 c = 0;
  for (__int128 t : column) c += t * t;
  const __int128 nn = items * n;
  __int128 num = (s - nn) * nn - c * (n - 1);
  __int128 den = (nn * nn - c) * (n - 1);
  if (den == 0) return 1.0;
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

}  // namespace intentarg
