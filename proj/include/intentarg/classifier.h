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

// Rule-based speech act typing. Cues from the RuleSet are located by a
// left-to-right longest-match scan; command cues are grouped into
// prohibition (PH) and requirement (REQ) clauses, and a fixed priority
// picks the label:
//
//   StrongRequirement > Prohibition > Requirement > AlternativeQuestion
//     > WhQuestion > YesNoQuestion > NonDirective
//
// Known over-acceptance: rhetorical questions and commands, and questions
// marked only by intonation, are not distinguishable from text alone.

#ifndef INTENTARG_CLASSIFIER_H_
#define INTENTARG_CLASSIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "intentarg/rules.h"
#include "intentarg/textnorm.h"
#include "intentarg/types.h"

namespace intentarg {

struct CueHit {
  int cue = 0;    // index into RuleSet::cues()
  int begin = 0;  // token range [begin, end)
  int end = 0;
  bool leading = false;  // inside the utterance-initial run of cues
};

std::vector<CueHit> ScanCues(const std::vector<std::string> &tokens,
                             const RuleSet &rules);

enum class ClauseTag { kProhibition, kRequirement };

std::string_view ClauseTagName(ClauseTag tag);  // "PH" / "REQ"

// Half-open token range [begin, end).
struct ClauseSpan {
  ClauseTag tag = ClauseTag::kRequirement;
  int begin = 0;
  int end = 0;

  bool operator==(const ClauseSpan &other) const = default;
};

// Clause segmentation for commands. In cue-initial languages a clause
// starts at a PH or imperative cue once the previous clause has at least
// one token beyond its own cues; in cue-final languages a clause ends at
// such a cue. Leading fillers and tokens before the first clause belong to
// no clause.
std::vector<ClauseSpan> SplitClauses(const std::vector<std::string> &tokens,
                                     const RuleSet &rules);
std::vector<ClauseSpan> SplitClauses(const std::vector<std::string> &tokens,
                                     const std::vector<CueHit> &hits,
                                     const RuleSet &rules);

// Reduces a clause list to exactly one PH and one REQ span, or returns
// nullopt when one of the two kinds is missing. Adjacent same-tag clauses
// are merged; with more than two groups the last REQ group is kept
// together with the PH group next to it.
std::optional<std::pair<ClauseSpan, ClauseSpan>> StrongRequirementSpans(
    const std::vector<ClauseSpan> &clauses);

struct ClassificationResult {
  std::optional<SpeechActType> label;  // nullopt: NonDirective
  std::vector<std::string> trace;
  std::vector<ClauseSpan> clause_spans;

  bool is_directive() const { return label.has_value(); }
  std::string LabelName() const;
};

ClassificationResult Classify(const std::vector<std::string> &tokens,
                              const RuleSet &rules);
ClassificationResult Classify(const std::vector<Token> &tokens,
                              const RuleSet &rules);

}  // namespace intentarg

#endif  // INTENTARG_CLASSIFIER_H_
