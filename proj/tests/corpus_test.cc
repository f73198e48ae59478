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
#include <cmath>

#include "doctest.h"
#include "intentarg/errors.h"
#include "test_util.h"

namespace intentarg {
namespace {

using testing::EnRules;
using testing::Gen;
using S = SpeechActType;

std::optional<ErrorCode> CodeOf(const std::function<void()> &fn,
                                 std::optional<int> *line = nullptr) {
  try {
    fn();
  } catch (const Error &e) {
    if (line) *line = e.line();
    return e.code();
  }
  return std::nullopt;
}

CorpusRecord RandomRecord(Gen &g) {
  const std::vector<std::string> vocab = {"ask", "your", "wife", "don't",
                                          "백화점", "é", "  ", "?", "x"};
  CorpusRecord r;
  r.label = g.Pick(std::vector<S>(kAllSpeechActTypes.begin(),
                                  kAllSpeechActTypes.end()));
  r.sentence = JoinTokens(g.Tokens(vocab, 0, 6));
  r.argument = JoinTokens(g.Tokens(vocab, 0, 6));
  if (g.Coin()) r.notation = kAllNotations[g.Int(0, 4)];
  if (g.Coin()) r.topic = kAllTopics[g.Int(0, 4)];
  return r;
}

TEST_CASE("reading records") {
  auto records = ParseCorpus("4\ti suggest that you ask your wife\tto ask ones wife\n");
  REQUIRE(records.size() == 1);
  CHECK(records[0].label == S::kRequirement);
  CHECK(records[0].sentence == "i suggest that you ask your wife");
  CHECK(records[0].argument == "to ask ones wife");
  CHECK_FALSE(records[0].notation.has_value());
  CHECK_FALSE(records[0].topic.has_value());

  records = ParseCorpus("0\ta\tb\taddressee\tweather\r\n\n3\tc\td\t\tfree\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].notation == ReferentNotation::kAddresseeOnly);
  CHECK(records[0].topic == Topic::kWeather);
  CHECK_FALSE(records[1].notation.has_value());
  CHECK(records[1].topic == Topic::kFree);

  CHECK(ParseCorpus("").empty());
  CHECK(ParseCorpus("\n\n").empty());
}

TEST_CASE("string labels and headers") {
  CorpusFormat fmt{LabelFormat::kString, true};
  auto records = ParseCorpus(
      "label\tsentence\targument\nreq\tgo\tto go\nProhibition\tdont go\tnot to go\n",
      fmt);
  REQUIRE(records.size() == 2);
  CHECK(records[0].label == S::kRequirement);
  CHECK(records[1].label == S::kProhibition);
  CHECK(FormatCorpus(records, fmt).rfind("label\tsentence\targument", 0) == 0);
}

TEST_CASE("malformed lines report their line number") {
  std::optional<int> line;
  CHECK(CodeOf([] { ParseCorpus("0\ta\tb\n1\tonly two\n"); }, &line) ==
        ErrorCode::kParseError);
  CHECK(line == 2);
  CHECK(CodeOf([] { ParseCorpus("0\ta\tb\tc\td\te\n"); }, &line) ==
        ErrorCode::kParseError);
  CHECK(CodeOf([] { ParseCorpus("\n\n9\ta\tb\n"); }, &line) ==
        ErrorCode::kInvalidLabel);
  CHECK(line == 3);
  CHECK(CodeOf([] { ParseCorpus("x\ta\tb\n"); }) == ErrorCode::kInvalidLabel);
  CHECK(CodeOf([] { ParseCorpus("0\ta\tb\tnobody\n"); }, &line) ==
        ErrorCode::kParseError);
  CHECK(line == 1);
  CHECK(CodeOf([] { ParseCorpus("0\ta\tb\tboth\tsports\n"); }) ==
        ErrorCode::kParseError);
  CHECK(CodeOf([] { ReadCorpus("/nonexistent/corpus.tsv"); }) ==
        ErrorCode::kIoError);
}

TEST_CASE("fields with separators cannot be written") {
  CorpusRecord r;
  r.sentence = "a\tb";
  CHECK(CodeOf([&] { FormatCorpus({r}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("format and parse round-trip byte for byte") {
  Gen g(101);
  for (int i = 0; i < 500; ++i) {
    std::vector<CorpusRecord> records;
    for (int64_t k = g.Int(0, 8); k > 0; --k) records.push_back(RandomRecord(g));
    CorpusFormat fmt{g.Coin() ? LabelFormat::kInt : LabelFormat::kString,
                     g.Coin()};
    std::string text = FormatCorpus(records, fmt);
    auto parsed = ParseCorpus(text, fmt);
    CHECK(FormatCorpus(parsed, fmt) == text);
    // Records with an empty sentence and argument and no optional columns
    // would be blank-looking but still carry a label, so they survive.
    CHECK(parsed == records);
  }
}

TEST_CASE("files round-trip") {
  testing::ScratchDir dir("corpus");
  std::vector<CorpusRecord> records = {
      {S::kWhQuestion, "how many points you got", "the number of points",
       ReferentNotation::kAddresseeOnly, Topic::kFree}};
  WriteCorpus(records, dir.File("c.tsv"));
  CHECK(ReadCorpus(dir.File("c.tsv")) == records);
}

TEST_CASE("validation") {
  const RuleSet &en = EnRules();
  auto kinds = [&](CorpusRecord r) {
    std::vector<ViolationKind> out;
    for (const auto &v : Validate(r, en)) out.push_back(v.kind);
    return out;
  };
  using V = ViolationKind;
  CHECK(kinds({S::kRequirement, "i suggest that you ask your wife",
               "to ask ones wife", {}, {}})
            .empty());
  CHECK(kinds({S::kRequirement, "go home", "not to go home", {}, {}}) ==
        std::vector<V>{V::kHeadMismatch});
  CHECK(kinds({S::kRequirement, "call me?", "to call me", {}, {}}) ==
        std::vector<V>{V::kPunctuationInSentence, V::kResidualPronoun});
  CHECK(kinds({S::kRequirement, "please go", "to please go", {}, {}}) ==
        std::vector<V>{V::kResidualPoliteness});
  CHECK(kinds({S::kYesNoQuestion, "", "", {}, {}}) ==
        std::vector<V>{V::kEmptyField, V::kEmptyField});
  CHECK(kinds({S::kAlternativeQuestion, "which is hotter in hawaii or guam",
               "the one hotter between hawaii and guam", {}, {}})
            .empty());
  CHECK(ViolationKindName(V::kHeadMismatch) == "HeadMismatch");
}

TEST_CASE("statistics are additive") {
  Gen g(103);
  for (int i = 0; i < 200; ++i) {
    std::vector<CorpusRecord> a, b;
    for (int64_t k = g.Int(0, 20); k > 0; --k) a.push_back(RandomRecord(g));
    for (int64_t k = g.Int(0, 20); k > 0; --k) b.push_back(RandomRecord(g));
    std::vector<CorpusRecord> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CorpusStats s = Stats(ab);
    CHECK(s == Stats(a) + Stats(b));
    CHECK(s.total == static_cast<int64_t>(ab.size()));
    int64_t types = 0, topics = s.untagged_topic;
    for (int64_t c : s.per_type) types += c;
    for (int64_t c : s.per_topic) topics += c;
    CHECK(types == s.total);
    CHECK(topics == s.total);
  }
}

TEST_CASE("fractions") {
  auto eq = [](Fraction f, int64_t num, int64_t den) {
    return f.num == num && f.den == den;
  };
  CHECK(eq(ParseFraction("9:1"), 9, 10));
  CHECK(eq(ParseFraction("7:3"), 7, 10));
  CHECK(eq(ParseFraction("9/10"), 9, 10));
  CHECK(eq(ParseFraction("18/20"), 9, 10));
  CHECK(eq(ParseFraction("0.9"), 9, 10));
  CHECK(eq(ParseFraction("0.75"), 3, 4));
  for (const char *bad : {"", "1", "0", "10/10", "0:1", "1:0", "abc", "-1:2",
                          "1.5", "0.9x"}) {
    CAPTURE(bad);
    CHECK(CodeOf([&] { ParseFraction(bad); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("test set sizes") {
  CHECK(TestSize(50837, {9, 10}) == 5084);
  CHECK(TestSize(10, {7, 10}) == 3);
  CHECK(TestSize(5, {9, 10}) == 1);   // 0.5 rounds up
  CHECK(TestSize(4, {9, 10}) == 0);
  Gen g(105);
  for (int i = 0; i < 2000; ++i) {
    int64_t den = g.Int(2, 100);
    int64_t num = g.Int(1, den - 1);
    int64_t n = g.Int(0, 100000);
    long double exact = static_cast<long double>(den - num) * n / den;
    CHECK(TestSize(n, {num, den}) ==
          static_cast<int64_t>(std::floor(exact + 0.5L)));
  }
}

TEST_CASE("splits partition the corpus") {
  Gen g(107);
  for (int i = 0; i < 1000; ++i) {
    int64_t n = g.Int(2, 60);
    int64_t den = g.Int(2, 10);
    Fraction f{g.Int(1, den - 1), den};
    SplitSpec spec{f, g.rng().Next()};
    std::vector<CorpusRecord> records(n);
    for (int64_t k = 0; k < n; ++k) records[k].sentence = std::to_string(k);
    SplitResult r = Split(records, spec);
    CHECK(static_cast<int64_t>(r.test.size()) == TestSize(n, f));
    CHECK(r.train.size() + r.test.size() == records.size());
    std::vector<int> seen(n, 0);
    auto check_order = [&](const std::vector<CorpusRecord> &part) {
      int last = -1;
      for (const auto &rec : part) {
        int idx = std::stoi(rec.sentence);
        CHECK(idx > last);
        last = idx;
        ++seen[idx];
      }
    };
    check_order(r.train);
    check_order(r.test);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    SplitResult again = Split(records, spec);
    CHECK(again.test == r.test);
  }
  std::vector<CorpusRecord> one(1);
  CHECK(CodeOf([&] { Split(one, {}); }) == ErrorCode::kTooSmall);
}

TEST_CASE("notation can be stripped") {
  std::vector<CorpusRecord> records = {
      {S::kRequirement, "a", "b", ReferentNotation::kBoth, Topic::kMail}};
  auto stripped = StripNotation(records);
  CHECK_FALSE(stripped[0].notation.has_value());
  CHECK(stripped[0].topic == Topic::kMail);
}

// Textbook Fleiss' kappa in floating point.
double KappaOracle(const std::vector<std::vector<int64_t>> &m) {
  double N = static_cast<double>(m.size());
  double n = 0;
  for (int64_t c : m[0]) n += static_cast<double>(c);
  size_t k = m[0].size();
  double pbar = 0;
  std::vector<double> p(k, 0);
  for (const auto &row : m) {
    double s = 0;
    for (size_t j = 0; j < k; ++j) {
      s += static_cast<double>(row[j] * row[j]);
      p[j] += static_cast<double>(row[j]);
    }
    pbar += (s - n) / (n * (n - 1));
  }
  pbar /= N;
  double pe = 0;
  for (double pj : p) pe += (pj / (N * n)) * (pj / (N * n));
  if (pe == 1) return 1;
  return (pbar - pe) / (1 - pe);
}

TEST_CASE("fleiss kappa") {
  CHECK(FleissKappa(AgreementMatrix({{3, 0}, {0, 3}, {3, 0}}, 3)) == 1.0);
  CHECK(FleissKappa(AgreementMatrix({{2, 0}, {2, 0}}, 2)) == 1.0);
  auto hand = AgreementMatrix::FromRatings({{0, 0}, {0, 1}}, 2);
  CHECK(hand.counts() == std::vector<std::vector<int64_t>>{{2, 0}, {1, 1}});
  CHECK(FleissKappa(hand) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
  CHECK(FleissKappa(AgreementMatrix({{2, 0}, {0, 2}, {1, 1}, {1, 1}}, 2)) ==
        doctest::Approx(0.0));
  auto parsed = AgreementMatrix::Parse("0 0 0 0 14\n0 2 6 4 2\n");
  CHECK(parsed.raters() == 14);
  CHECK(parsed.items() == 2);
  CHECK(parsed.categories() == 5);
}

TEST_CASE("kappa matches the textbook formula and stays bounded") {
  Gen g(109);
  for (int i = 0; i < 500; ++i) {
    int64_t items = g.Int(1, 30), cats = g.Int(1, 6), raters = g.Int(2, 12);
    std::vector<std::vector<int64_t>> m(items, std::vector<int64_t>(cats, 0));
    for (auto &row : m) {
      for (int64_t r = 0; r < raters; ++r) ++row[g.Int(0, cats - 1)];
    }
    double kappa = FleissKappa(AgreementMatrix(m, raters));
    CHECK(kappa <= 1.0);
    CHECK(kappa >= -1.0);
    CHECK(kappa == doctest::Approx(KappaOracle(m)).epsilon(1e-9));
  }
}

TEST_CASE("malformed agreement matrices") {
  using M = std::vector<std::vector<int64_t>>;
  CHECK(CodeOf([] { AgreementMatrix(M{}, 2); }) == ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix(M{{1, 0}}, 1); }) ==
        ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix(M{{2, 0}, {1, 0}}, 2); }) ==
        ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix(M{{3, -1}}, 2); }) ==
        ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix(M{{2, 0}, {2}}, 2); }) ==
        ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix::Parse("2 0\n1 0\n"); }) ==
        ErrorCode::kMalformedMatrix);
  CHECK(CodeOf([] { AgreementMatrix::Parse("2 0\n1 x\n"); }) ==
        ErrorCode::kParseError);
}

}  // namespace
}  // namespace intentarg
