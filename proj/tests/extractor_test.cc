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

#include "intentarg/extractor.h"

#include <algorithm>

#include "doctest.h"
#include "gold_cases.h"
#include "intentarg/errors.h"
#include "test_util.h"

namespace intentarg {
namespace {

using testing::EnRules;
using testing::Gen;
using testing::KoRules;
using testing::Toks;
using S = SpeechActType;

IntentArgument ExtractText(const std::string &text, const RuleSet &rules) {
  auto tokens = Toks(text);
  auto label = Classify(tokens, rules).label;
  return Extract(tokens, label, ExtractionConfig::For(rules));
}

std::string ExtractRendered(const std::string &text, const RuleSet &rules) {
  return Render(ExtractText(text, rules), rules);
}

// Random directives assembled from cue + body fragments.
const std::vector<std::string> kEnPrefixes = {
    "", "yeah", "yeah but", "um", "please", "excuse me"};
const std::vector<std::string> kEnCues = {
    "did", "do you know if", "are", "what", "where", "how many", "which",
    "dont", "never", "you should not", "i dont want you to", "just",
    "please", "you should", "why dont you", "i suggest that you", "call",
    "put", "go", "could you", "is it", "i wonder whether"};
const std::vector<std::string> kEnBody = {
    "i", "me", "my", "you", "your", "we", "our", "yourself", "there",
    "here", "tomorrow", "now", "the", "police", "house", "kindly", "just",
    "please", "or", "tea", "coffee", "pick", "up", "go", "stay", "tell",
    "wife", "big", "it", "they", "them", "today"};

std::string RandomDirective(Gen &g) {
  std::string s = g.Pick(kEnPrefixes);
  s += " " + g.Pick(kEnCues);
  for (const auto &t : g.Tokens(kEnBody, 1, 7)) s += " " + t;
  return s;
}

TEST_CASE("gold heads and renderings") {
  for (const auto &c : testing::GoldCases()) {
    const RuleSet &rules = c.lang == "ko" ? KoRules() : EnRules();
    CAPTURE(c.id);
    IntentArgument arg = ExtractText(c.sentence, rules);
    IntentArgument gold =
        ParseArgument(c.argument, rules, rules.head_position());
    CHECK(arg.head == gold.head);
  }
  CHECK(ExtractRendered("i suggest that you ask your wife", EnRules()) ==
        "to ask ones wife");
  CHECK(ExtractRendered("yeah  but don't pick me up", EnRules()) ==
        "not to pick the speaker up");
  CHECK(ExtractRendered("why don't you just call the police", EnRules()) ==
        "to call the police");
  CHECK(ExtractRendered("i want to know about treadstone", EnRules()) ==
        "the information about treadstone");
  CHECK(ExtractRendered("don't go outside, just stay in the house",
                        EnRules()) == "to stay in the house");
  CHECK(ExtractRendered("저번처럼 가지 말고 백화점 세일은 미리 가서 대기하렴",
                        KoRules()) == "백화점 세일은 미리 가서 대기하기");
}

TEST_CASE("coreference normalization") {
  auto r = NormalizeCoreference(Toks("i told you about your car"), EnRules(),
                                BroadIntent::kQuestion);
  CHECK(JoinTokens(r.tokens) ==
        "the speaker told the addressee about the addressees car");
  CHECK(r.referents.speaker);
  CHECK(r.referents.addressee);

  r = NormalizeCoreference(Toks("ask your wife"), EnRules(),
                           BroadIntent::kCommand);
  CHECK(JoinTokens(r.tokens) == "ask ones wife");
  CHECK_FALSE(r.referents.speaker);
  CHECK(r.referents.addressee);

  r = NormalizeCoreference(Toks("they saw it"), EnRules());
  CHECK(JoinTokens(r.tokens) == "they saw it");
  CHECK(r.referents.empty());

  r = NormalizeCoreference(Toks("내가 너는"), KoRules());
  CHECK(JoinTokens(r.tokens) == "화자가 청자는");
}

TEST_CASE("politeness markers are removed") {
  CHECK(StripPoliteness({"please", "please", "go"}, EnRules()) ==
        std::vector<std::string>{"go"});
  CHECK(StripPoliteness(Toks("excuse me kindly go there"), EnRules()) ==
        std::vector<std::string>{"go", "there"});
  CHECK(StripPoliteness({"excuse"}, EnRules()) ==
        std::vector<std::string>{"excuse"});
  CHECK(StripPoliteness({}, EnRules()).empty());
}

TEST_CASE("politeness stripping removes exactly the single-token markers") {
  Gen g(21);
  const std::vector<std::string> vocab = {"please", "just", "kindly", "go",
                                          "home", "there", "now", "it"};
  const std::set<std::string> markers = {"please", "just", "kindly"};
  for (int i = 0; i < 1000; ++i) {
    auto tokens = g.Tokens(vocab, 0, 8);
    std::vector<std::string> expected;
    for (const auto &t : tokens) {
      if (!markers.count(t)) expected.push_back(t);
    }
    CHECK(StripPoliteness(tokens, EnRules()) == expected);
  }
}

TEST_CASE("strong requirement resolution") {
  using C = ClauseSpan;
  using T = ClauseTag;
  auto tokens = Toks("dont go outside just stay in the house");
  CHECK(ResolveStrongRequirement(
            {{T::kProhibition, 0, 3}, {T::kRequirement, 3, 8}}, tokens) ==
        Toks("just stay in the house"));
  CHECK(ResolveStrongRequirement(
            {{T::kRequirement, 0, 2}, {T::kRequirement, 2, 5}}, tokens) ==
        Toks("dont go outside just stay"));
  auto code = [&](std::vector<C> spans) {
    try {
      ResolveStrongRequirement(spans, tokens);
    } catch (const Error &e) {
      return e.code() == ErrorCode::kMalformedStrongRequirement;
    }
    return false;
  };
  CHECK(code({{T::kProhibition, 0, 3}}));
  CHECK(code({}));
  CHECK(code({{T::kRequirement, 0, 2},
              {T::kProhibition, 2, 4},
              {T::kRequirement, 4, 8}}));
}

TEST_CASE("non-directives cannot be extracted") {
  try {
    Extract(Toks("the weather is nice"), std::nullopt,
            ExtractionConfig::For(EnRules()));
    FAIL("expected NotADirective");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kNotADirective);
  }
}

TEST_CASE("rendering order") {
  IntentArgument arg{Head::kTo, "", {"call", "the", "police"},
                     HeadPosition::kInitial, {}};
  CHECK(Render(arg, EnRules()) == "to call the police");
  arg.position = HeadPosition::kFinal;
  CHECK(Render(arg, EnRules()) == "call the police to");
  IntentArgument ko{Head::kTo, "", {"미리", "대기하"}, HeadPosition::kFinal, {}};
  CHECK(Render(ko, KoRules()) == "미리 대기하기");
  ko.head = Head::kNominal;
  ko.nominal = "시간";
  CHECK(Render(ko, KoRules()) == "미리 대기하 시간");
  IntentArgument bare{Head::kNominal, "", {"the", "colour"},
                      HeadPosition::kInitial, {}};
  CHECK(Render(bare, EnRules()) == "the colour");
}

TEST_CASE("notation from referents") {
  CHECK(NotationFor({true, true}, EnRules()) == ReferentNotation::kBoth);
  CHECK(NotationFor({true, false}, EnRules()) ==
        ReferentNotation::kSpeakerOnly);
  CHECK(NotationFor({false, true}, EnRules()) ==
        ReferentNotation::kAddresseeOnly);
  CHECK(NotationFor({}, EnRules()) == ReferentNotation::kNone);
  CHECK(NotationFor({}, KoRules()) == ReferentNotation::kUnknown);
}

TEST_CASE("head allowance per label") {
  for (S label : kAllSpeechActTypes) {
    CHECK(HeadAllowed(label, HeadForLabel(label)));
  }
  CHECK(HeadAllowed(S::kAlternativeQuestion, Head::kNominal));
  CHECK_FALSE(HeadAllowed(S::kYesNoQuestion, Head::kTo));
  CHECK_FALSE(HeadAllowed(S::kProhibition, Head::kTo));
  CHECK(HeadForLabel(S::kStrongRequirement) == Head::kTo);
  CHECK(HeadForLabel(S::kProhibition) == Head::kNotTo);
}

TEST_CASE("strong requirements extract the requirement clause alone") {
  Gen g(31);
  const std::vector<std::string> ph = {"dont", "never", "you should not"};
  const std::vector<std::string> req = {"just", "please", "you should"};
  const std::vector<std::string> verbs = {"go", "stay", "call", "take",
                                          "wait"};
  const std::vector<std::string> objs = {"home", "the", "police", "house",
                                         "outside", "in", "a", "taxi"};
  for (int i = 0; i < 300; ++i) {
    std::string p = g.Pick(ph) + " " + g.Pick(verbs);
    for (const auto &t : g.Tokens(objs, 0, 3)) p += " " + t;
    std::string r = g.Pick(req) + " " + g.Pick(verbs);
    for (const auto &t : g.Tokens(objs, 1, 4)) r += " " + t;
    auto both = Toks(p + " " + r);
    auto alone = Toks(r);
    CAPTURE(p + " | " + r);
    auto cfg = ExtractionConfig::For(EnRules());
    REQUIRE(Classify(both, EnRules()).label == S::kStrongRequirement);
    IntentArgument a = Extract(both, S::kStrongRequirement, cfg);
    IntentArgument b = Extract(alone, S::kRequirement, cfg);
    CHECK(a.content == b.content);
    CHECK(a.head == Head::kTo);
  }
}

TEST_CASE("extraction invariants on random directives") {
  Gen g(41);
  const RuleSet &en = EnRules();
  std::set<std::string> pronouns;
  for (const auto &p : en.pronouns()) pronouns.insert(p.surface);
  int directives = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string text = RandomDirective(g);
    auto tokens = Toks(text);
    auto result = Classify(tokens, en);
    if (!result.is_directive()) continue;
    ++directives;
    CAPTURE(text);
    IntentArgument arg =
        Extract(tokens, result.label, ExtractionConfig::For(en));
    CHECK(HeadAllowed(*result.label, arg.head));
    for (const auto &t : arg.content) {
      CHECK(pronouns.count(t) == 0);
      CHECK(t != "please");
      CHECK(t != "kindly");
      CHECK(t != "just");
    }
    // Deictic tokens in the extracted region survive. Strong requirements
    // drop the PH clause, so only the non-strong labels are compared.
    if (*result.label != S::kStrongRequirement) {
      auto count = [&](const std::vector<std::string> &v) {
        int n = 0;
        for (const auto &t : v) n += en.deictic_tokens().count(t);
        return n;
      };
      int first = result.clause_spans.empty() ? 0
                                              : result.clause_spans[0].begin;
      std::vector<std::string> region(tokens.begin() + first, tokens.end());
      CHECK(count(arg.content) == count(region));
    }
  }
  CHECK(directives > 1000);
}

TEST_CASE("render and parse are inverse") {
  Gen g(51);
  const std::vector<std::string> en_vocab = {
      "call", "police", "home", "points", "got", "hotter", "guam", "of",
      "about", "stay", "house", "right", "foot", "there", "tomorrow"};
  const std::vector<std::string> ko_vocab = {
      "백화점", "세일은", "미리", "가서", "대기하", "열대야", "졸업과", "결혼",
      "더", "힘들었던"};
  const std::vector<Head> heads = {Head::kIf, Head::kWhetherOr, Head::kTo,
                                   Head::kNotTo, Head::kNominal};
  for (int i = 0; i < 2000; ++i) {
    bool ko = g.Coin();
    const RuleSet &rules = ko ? KoRules() : EnRules();
    IntentArgument arg;
    arg.head = g.Pick(heads);
    arg.position = rules.head_position();
    if (arg.head == Head::kNominal) {
      arg.nominal = ko ? g.Pick(std::vector<std::string>{"시간", "장소", "것"})
                       : g.Pick(std::vector<std::string>{
                             "the number", "the place", "the one", "the way"});
    }
    arg.content = g.Tokens(ko ? ko_vocab : en_vocab, 1, 6);
    std::string rendered = Render(arg, rules);
    CAPTURE(rendered);
    CHECK(ParseArgument(rendered, rules, arg.position) == arg);
  }
}

TEST_CASE("parsed arguments carry referents") {
  IntentArgument arg =
      ParseArgument("not to pick the speaker up", EnRules(),
                    HeadPosition::kInitial);
  CHECK(arg.head == Head::kNotTo);
  CHECK(arg.referents.speaker);
  CHECK_FALSE(arg.referents.addressee);
  arg = ParseArgument("the number of points", EnRules(),
                      HeadPosition::kInitial);
  CHECK(arg.head == Head::kNominal);
  CHECK(arg.nominal == "the number");
  CHECK(JoinTokens(arg.content) == "of points");
}

}  // namespace
}  // namespace intentarg
