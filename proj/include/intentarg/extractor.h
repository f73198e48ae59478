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

// Intent-argument extraction: turns a classified directive into its
// structured argument (head marker + content) and renders it in
// head-initial or head-final order.
//
// The extractor only deletes, replaces and inserts whole tokens (plus
// stripping sentence-final endings in head-final languages); it never
// conjugates verbs, so "did i ever tell you" yields "if the speaker ever
// tell the addressee".

#ifndef INTENTARG_EXTRACTOR_H_
#define INTENTARG_EXTRACTOR_H_

#include <optional>
#include <string>
#include <vector>

#include "intentarg/classifier.h"
#include "intentarg/rules.h"
#include "intentarg/types.h"

namespace intentarg {

struct ExtractionConfig {
  HeadPosition head_position = HeadPosition::kInitial;
  const RuleSet *rules = nullptr;
  // Emit referent notation alongside the argument (the content always
  // carries the referent phrases).
  bool keep_notation = false;

  static ExtractionConfig For(const RuleSet &rules) {
    return {rules.head_position(), &rules, false};
  }
};

struct CoreferenceResult {
  std::vector<std::string> tokens;
  ReferentSet referents;
};

// First/second person pronouns become referent phrases ("the speaker",
// "the addressee"; "ones" for second-person possessives in commands).
// Third-person pronouns and other anaphora are kept.
CoreferenceResult NormalizeCoreference(const std::vector<std::string> &tokens,
                                       const RuleSet &rules,
                                       BroadIntent context =
                                           BroadIntent::kCommand);

std::vector<std::string> StripPoliteness(const std::vector<std::string> &tokens,
                                         const RuleSet &rules);

// Tokens of the single REQ span; the PH span, if any, is discarded.
std::vector<std::string> ResolveStrongRequirement(
    const std::vector<ClauseSpan> &spans,
    const std::vector<std::string> &tokens);

IntentArgument Extract(const std::vector<std::string> &tokens,
                       SpeechActType label, const ExtractionConfig &cfg);
// nullopt (NonDirective) throws NotADirective.
IntentArgument Extract(const std::vector<std::string> &tokens,
                       std::optional<SpeechActType> label,
                       const ExtractionConfig &cfg);

// The head mandated by a label. Alternative questions phrased with a wh
// cue ("which is hotter in hawaii or guam") take a nominal head.
Head HeadForLabel(SpeechActType label, bool wh_phrased = false);

// True when `head` is acceptable for `label`.
bool HeadAllowed(SpeechActType label, Head head);

std::string Render(const IntentArgument &arg, const RuleSet &rules);

// Recovers head, nominal and content from a rendered argument by looking at
// its prefix (head-initial) or suffix (head-final). Anything without an
// explicit marker is a nominal argument.
IntentArgument ParseArgument(const std::string &text, const RuleSet &rules,
                             HeadPosition position);

ReferentNotation NotationFor(const ReferentSet &referents,
                             const RuleSet &rules);

}  // namespace intentarg

#endif  // INTENTARG_EXTRACTOR_H_
