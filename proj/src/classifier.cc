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

#include "intentarg/classifier.h"

#include <algorithm>

#include "intentarg/errors.h"

namespace intentarg {
namespace {

bool IsCommandCue(const Cue &cue) {
  return cue.category == CueCategory::kProhibition ||
         cue.category == CueCategory::kImperative;
}

ClauseTag TagOf(const Cue &cue) {
  return cue.category == CueCategory::kProhibition ? ClauseTag::kProhibition
                                                   : ClauseTag::kRequirement;
}

bool PatternMatchesAt(const Cue &cue, const std::vector<std::string> &tokens,
                      size_t pos) {
  if (pos + cue.pattern.size() > tokens.size()) return false;
  for (size_t k = 0; k < cue.pattern.size(); ++k) {
    if (!TokenMatches(cue.pattern[k], tokens[pos + k])) return false;
  }
  return true;
}

std::vector<ClauseSpan> BuildInitial(const std::vector<CueHit> &hits, int n,
                                     const RuleSet &rules) {
  std::vector<ClauseSpan> clauses;
  int cue_end = 0;
  bool conditional_seen = false;
  for (const CueHit &hit : hits) {
    const Cue &cue = rules.cues()[hit.cue];
    if (cue.category == CueCategory::kConditional) conditional_seen = true;
    if (!IsCommandCue(cue)) continue;
    ClauseTag tag = TagOf(cue);
    if (clauses.empty()) {
      if (tag == ClauseTag::kRequirement && !hit.leading && !conditional_seen) {
        continue;
      }
      clauses.push_back({tag, hit.begin, n});
      cue_end = cue.keep ? hit.begin : hit.end;
      continue;
    }
    if (hit.begin <= cue_end) {
      // Still inside the opening cue run of the current clause.
      // Kept cues (bare verbs) are already clause content.
      if (tag == ClauseTag::kProhibition) clauses.back().tag = tag;
      if (!cue.keep) cue_end = hit.end;
      continue;
    }
    if (cue.bare_verb) continue;
    clauses.back().end = hit.begin;
    clauses.push_back({tag, hit.begin, n});
    cue_end = hit.end;
  }
  return clauses;
}

std::vector<ClauseSpan> BuildFinal(const std::vector<CueHit> &hits,
                                   const RuleSet &rules) {
  std::vector<ClauseSpan> clauses;
  int start = 0;
  for (const CueHit &hit : hits) {
    const Cue &cue = rules.cues()[hit.cue];
    if (cue.category == CueCategory::kFiller && hit.begin == start) {
      start = hit.end;
      continue;
    }
    if (!IsCommandCue(cue)) continue;
    ClauseTag tag = TagOf(cue);
    if (hit.begin > start || clauses.empty() ||
        clauses.back().end != hit.begin) {
      clauses.push_back({tag, start, hit.end});
    } else {
      // A cue directly after the previous clause's cue joins that clause.
      clauses.back().end = hit.end;
      if (tag == ClauseTag::kProhibition) clauses.back().tag = tag;
    }
    start = hit.end;
  }
  return clauses;
}

std::vector<ClauseSpan> MergeAdjacent(const std::vector<ClauseSpan> &clauses) {
  std::vector<ClauseSpan> groups;
  for (const ClauseSpan &c : clauses) {
    if (!groups.empty() && groups.back().tag == c.tag &&
        groups.back().end == c.begin) {
      groups.back().end = c.end;
    } else {
      groups.push_back(c);
    }
  }
  return groups;
}

}  // namespace

std::vector<CueHit> ScanCues(const std::vector<std::string> &tokens,
                             const RuleSet &rules) {
  std::vector<CueHit> hits;
  const int n = static_cast<int>(tokens.size());
  bool leading = true;
  bool conditional_seen = false;
  bool body_after_conditional = false;
  int pos = 0;
  while (pos < n) {
    int best = -1;
    int best_len = 0;
    for (int index : rules.CandidatesAt(tokens[pos])) {
      const Cue &cue = rules.cues()[index];
      int len = static_cast<int>(cue.pattern.size());
      if (!PatternMatchesAt(cue, tokens, pos)) continue;
      if (cue.bare_verb) {
        if (!leading && !(conditional_seen && body_after_conditional)) continue;
      } else if (cue.anchor == Anchor::kLeading && !leading) {
        continue;
      } else if (cue.anchor == Anchor::kTrailing && pos + len != n) {
        continue;
      }
      if (best < 0 || len > best_len ||
          (len == best_len && cue.category < rules.cues()[best].category) ||
          (len == best_len && cue.category == rules.cues()[best].category &&
           index < best)) {
        best = index;
        best_len = len;
      }
    }
    if (best < 0) {
      leading = false;
      if (conditional_seen) body_after_conditional = true;
      ++pos;
      continue;
    }
    hits.push_back({best, pos, pos + best_len, leading});
    if (rules.cues()[best].category == CueCategory::kConditional) {
      conditional_seen = true;
      body_after_conditional = false;
    }
    pos += best_len;
  }
  return hits;
}

std::string_view ClauseTagName(ClauseTag tag) {
  return tag == ClauseTag::kProhibition ? "PH" : "REQ";
}

std::vector<ClauseSpan> SplitClauses(const std::vector<std::string> &tokens,
                                     const std::vector<CueHit> &hits,
                                     const RuleSet &rules) {
  if (rules.cue_position() == HeadPosition::kFinal) {
    return BuildFinal(hits, rules);
  }
  return BuildInitial(hits, static_cast<int>(tokens.size()), rules);
}

std::vector<ClauseSpan> SplitClauses(const std::vector<std::string> &tokens,
                                     const RuleSet &rules) {
  return SplitClauses(tokens, ScanCues(tokens, rules), rules);
}

std::optional<std::pair<ClauseSpan, ClauseSpan>> StrongRequirementSpans(
    const std::vector<ClauseSpan> &clauses) {
  std::vector<ClauseSpan> groups = MergeAdjacent(clauses);
  int req = -1;
  for (int i = static_cast<int>(groups.size()) - 1; i >= 0; --i) {
    if (groups[i].tag == ClauseTag::kRequirement) {
      req = i;
      break;
    }
  }
  if (req < 0) return std::nullopt;
  int ph = -1;
  if (req > 0 && groups[req - 1].tag == ClauseTag::kProhibition) {
    ph = req - 1;
  } else if (req + 1 < static_cast<int>(groups.size())) {
    ph = req + 1;
  } else {
    for (int i = 0; i < req; ++i) {
      if (groups[i].tag == ClauseTag::kProhibition) ph = i;
    }
  }
  if (ph < 0) return std::nullopt;
  return std::make_pair(groups[ph], groups[req]);
}

std::string ClassificationResult::LabelName() const {
  return label ? std::string(intentarg::LabelName(*label)) : "NonDirective";
}

ClassificationResult Classify(const std::vector<std::string> &tokens,
                              const RuleSet &rules) {
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyUtterance, "cannot classify an empty utterance");
  }
  const int n = static_cast<int>(tokens.size());
  std::vector<CueHit> hits = ScanCues(tokens, rules);
  std::vector<ClauseSpan> clauses = SplitClauses(tokens, hits, rules);

  ClassificationResult result;
  auto trace_if = [&](auto &&pred) {
    for (const CueHit &hit : hits) {
      const Cue &cue = rules.cues()[hit.cue];
      if (pred(hit, cue)) result.trace.push_back(cue.TraceName());
    }
  };

  bool has_ph = false, has_req = false;
  for (const ClauseSpan &c : clauses) {
    (c.tag == ClauseTag::kProhibition ? has_ph : has_req) = true;
  }
  if (has_ph || has_req) {
    auto inside = [&](const CueHit &hit, const Cue &cue) {
      if (!IsCommandCue(cue)) return false;
      for (const ClauseSpan &c : clauses) {
        if (hit.begin >= c.begin && hit.end <= c.end) return true;
      }
      return false;
    };
    trace_if(inside);
    if (has_ph && has_req) {
      auto spans = StrongRequirementSpans(clauses);
      result.label = SpeechActType::kStrongRequirement;
      result.clause_spans = {spans->first, spans->second};
      std::sort(result.clause_spans.begin(), result.clause_spans.end(),
                [](const ClauseSpan &a, const ClauseSpan &b) {
                  return a.begin < b.begin;
                });
    } else {
      result.label = has_ph ? SpeechActType::kProhibition
                            : SpeechActType::kRequirement;
      result.clause_spans = clauses;
    }
    return result;
  }

  // Tokens covered by some cue are not candidate-answer material.
  std::vector<bool> covered(n, false);
  bool has_wh = false, has_question = false;
  for (const CueHit &hit : hits) {
    for (int i = hit.begin; i < hit.end; ++i) covered[i] = !rules.cues()[hit.cue].keep;
    CueCategory cat = rules.cues()[hit.cue].category;
    has_wh |= cat == CueCategory::kWh;
    has_question |= cat == CueCategory::kQuestion;
  }
  if (has_wh || has_question) {
    for (const CueHit &hit : hits) {
      if (rules.cues()[hit.cue].category != CueCategory::kAlternative) continue;
      bool left = false, right = false;
      for (int i = 0; i < hit.begin; ++i) left |= !covered[i];
      for (int i = hit.end; i < n; ++i) right |= !covered[i];
      if (left && right) {
        result.label = SpeechActType::kAlternativeQuestion;
        trace_if([](const CueHit &, const Cue &cue) {
          return cue.category == CueCategory::kAlternative ||
                 cue.category == CueCategory::kWh ||
                 cue.category == CueCategory::kQuestion;
        });
        return result;
      }
    }
  }
  if (has_wh) {
    result.label = SpeechActType::kWhQuestion;
    trace_if([](const CueHit &, const Cue &cue) {
      return cue.category == CueCategory::kWh ||
             cue.category == CueCategory::kQuestion;
    });
    return result;
  }
  if (has_question) {
    result.label = SpeechActType::kYesNoQuestion;
    trace_if([](const CueHit &, const Cue &cue) {
      return cue.category == CueCategory::kQuestion;
    });
  }
  return result;
}

ClassificationResult Classify(const std::vector<Token> &tokens,
                              const RuleSet &rules) {
  return Classify(TokenSurfaces(tokens), rules);
}

}  // namespace intentarg
