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
#include <map>

#include "intentarg/errors.h"
#include "intentarg/textnorm.h"

namespace intentarg {
namespace {

struct Range {
  int begin;
  int end;
};

// Per-token state over the original utterance.
struct Working {
  std::vector<std::string> text;
  std::vector<bool> alive;

  void Kill(int begin, int end) {
    for (int i = begin; i < end; ++i) alive[i] = false;
  }
};

bool IsSuffixGlob(const Cue &cue) {
  return cue.pattern.size() == 1 && cue.pattern[0].size() > 1 &&
         cue.pattern[0].front() == '*';
}

// Removes a cue occurrence; a suffix cue leaves the token's stem behind.
// Returns true when a stem remains.
bool RemoveHit(const CueHit &hit, const Cue &cue, Working *w) {
  if (IsSuffixGlob(cue)) {
    std::string &token = w->text[hit.begin];
    size_t suffix = cue.pattern[0].size() - 1;
    if (token.size() > suffix) {
      token.erase(token.size() - suffix);
      return true;
    }
  }
  w->Kill(hit.begin, hit.end);
  return false;
}

void StripFrames(const Range &region, const std::vector<CueHit> &hits,
                 const RuleSet &rules, Working *w) {
  std::map<int, const CueHit *> by_begin, by_end;
  for (const CueHit &hit : hits) {
    if (hit.begin >= region.begin && hit.end <= region.end) {
      by_begin[hit.begin] = &hit;
      by_end[hit.end] = &hit;
    }
  }
  bool final_cues = rules.cue_position() == HeadPosition::kFinal;
  int cursor = region.begin;
  for (auto it = by_begin.find(cursor); it != by_begin.end();
       it = by_begin.find(cursor)) {
    const Cue &cue = rules.cues()[it->second->cue];
    if (final_cues && cue.category != CueCategory::kFiller) break;
    if (!cue.keep) RemoveHit(*it->second, cue, w);
    cursor = it->second->end;
  }
  if (!final_cues) return;
  cursor = region.end;
  for (auto it = by_end.find(cursor); it != by_end.end();
       it = by_end.find(cursor)) {
    const Cue &cue = rules.cues()[it->second->cue];
    if (!cue.keep && RemoveHit(*it->second, cue, w)) break;
    cursor = it->second->begin;
  }
}

// Picks the wh table entry for a matched wh cue: entries sharing the cue
// text whose "with" tokens are all present win over the plain entry.
const Cue *ResolveWhEntry(const Cue &matched, const std::vector<int> &order,
                          const Working &w, const RuleSet &rules) {
  const Cue *plain = nullptr;
  for (const Cue &cue : rules.cues()) {
    if (cue.category != CueCategory::kWh || cue.text != matched.text) continue;
    if (cue.with.empty()) {
      if (!plain) plain = &cue;
      continue;
    }
    bool all = true;
    for (const std::string &t : cue.with) {
      bool found = false;
      for (int i : order) found |= w.alive[i] && w.text[i] == t;
      all &= found;
    }
    if (all) return &cue;
  }
  return plain;
}

std::vector<std::string> Tokens(const std::string &phrase) {
  return SplitWhitespace(phrase);
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

CoreferenceResult NormalizeCoreference(const std::vector<std::string> &tokens,
                                       const RuleSet &rules,
                                       BroadIntent context) {
  CoreferenceResult result;
  for (const std::string &token : tokens) {
    const PronounEntry *hit = nullptr;
    for (const PronounEntry &p : rules.pronouns()) {
      if (p.surface == token) {
        hit = &p;
        break;
      }
    }
    if (!hit) {
      result.tokens.push_back(token);
      continue;
    }
    (hit->speaker ? result.referents.speaker : result.referents.addressee) =
        true;
    for (std::string &t : Tokens(hit->ReplacementFor(context))) {
      result.tokens.push_back(std::move(t));
    }
  }
  return result;
}

std::vector<std::string> StripPoliteness(const std::vector<std::string> &tokens,
                                         const RuleSet &rules) {
  std::vector<const Cue *> markers = rules.PolitenessCues();
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < tokens.size()) {
    size_t best = 0;
    for (const Cue *cue : markers) {
      size_t len = cue->pattern.size();
      if (len <= best || pos + len > tokens.size()) continue;
      bool match = true;
      for (size_t k = 0; k < len && match; ++k) {
        match = TokenMatches(cue->pattern[k], tokens[pos + k]) &&
                !rules.deictic_tokens().count(tokens[pos + k]);
      }
      if (match) best = len;
    }
    if (best == 0) {
      out.push_back(tokens[pos]);
      ++pos;
    } else {
      pos += best;
    }
  }
  return out;
}

std::vector<std::string> ResolveStrongRequirement(
    const std::vector<ClauseSpan> &spans,
    const std::vector<std::string> &tokens) {
  const ClauseSpan *req = nullptr;
  for (const ClauseSpan &span : spans) {
    if (span.tag != ClauseTag::kRequirement) continue;
    if (req && req->end != span.begin) {
      throw Error(ErrorCode::kMalformedStrongRequirement,
                  "more than one REQ clause");
    }
    if (!req) req = &span;
  }
  if (!req) {
    throw Error(ErrorCode::kMalformedStrongRequirement, "no REQ clause");
  }
  int end = req->end;
  for (const ClauseSpan &span : spans) {
    if (span.tag == ClauseTag::kRequirement && span.begin >= req->begin) {
      end = std::max(end, span.end);
    }
  }
  end = std::min<int>(end, static_cast<int>(tokens.size()));
  return std::vector<std::string>(tokens.begin() + req->begin,
                                  tokens.begin() + end);
}

Head HeadForLabel(SpeechActType label, bool wh_phrased) {
  switch (label) {
    case SpeechActType::kYesNoQuestion: return Head::kIf;
    case SpeechActType::kAlternativeQuestion:
      return wh_phrased ? Head::kNominal : Head::kWhetherOr;
    case SpeechActType::kWhQuestion: return Head::kNominal;
    case SpeechActType::kProhibition: return Head::kNotTo;
    case SpeechActType::kRequirement:
    case SpeechActType::kStrongRequirement: return Head::kTo;
  }
  return Head::kTo;
}

bool HeadAllowed(SpeechActType label, Head head) {
  if (head == HeadForLabel(label, false)) return true;
  return label == SpeechActType::kAlternativeQuestion && head == Head::kNominal;
}

IntentArgument Extract(const std::vector<std::string> &tokens,
                       std::optional<SpeechActType> label,
                       const ExtractionConfig &cfg) {
  if (!label) {
    throw Error(ErrorCode::kNotADirective,
                "cannot extract an argument from a non-directive");
  }
  return Extract(tokens, *label, cfg);
}

IntentArgument Extract(const std::vector<std::string> &tokens,
                       SpeechActType label, const ExtractionConfig &cfg) {
  if (!cfg.rules) {
    throw Error(ErrorCode::kInvalidArgument, "extraction config has no rules");
  }
  const RuleSet &rules = *cfg.rules;
  const int n = static_cast<int>(tokens.size());
  std::vector<CueHit> hits = ScanCues(tokens, rules);
  BroadIntent intent = BroadIntentOf(label);

  const CueHit *first_wh = nullptr;
  for (const CueHit &hit : hits) {
    if (rules.cues()[hit.cue].category == CueCategory::kWh) {
      first_wh = &hit;
      break;
    }
  }

  IntentArgument arg;
  arg.position = cfg.head_position;
  arg.head = HeadForLabel(label, first_wh != nullptr);

  // Regions of the utterance that carry the core content.
  std::vector<Range> regions;
  if (intent == BroadIntent::kCommand) {
    std::vector<ClauseSpan> clauses = SplitClauses(tokens, hits, rules);
    ClauseTag wanted = label == SpeechActType::kProhibition
                           ? ClauseTag::kProhibition
                           : ClauseTag::kRequirement;
    if (label == SpeechActType::kStrongRequirement) {
      auto spans = StrongRequirementSpans(clauses);
      if (!spans) {
        throw Error(ErrorCode::kMalformedStrongRequirement,
                    "utterance has no PH + REQ clause pair");
      }
      const ClauseSpan &req = spans->second;
      for (const ClauseSpan &c : clauses) {
        if (c.begin >= req.begin && c.end <= req.end) {
          regions.push_back({c.begin, c.end});
        }
      }
    } else {
      for (const ClauseSpan &c : clauses) {
        if (c.tag == wanted) regions.push_back({c.begin, c.end});
      }
      if (regions.empty()) {
        for (const ClauseSpan &c : clauses) regions.push_back({c.begin, c.end});
      }
    }
  }
  if (regions.empty()) regions.push_back({0, n});

  Working w{tokens, std::vector<bool>(n, true)};
  for (const Range &r : regions) StripFrames(r, hits, rules, &w);

  std::vector<int> order;
  for (const Range &r : regions) {
    for (int i = r.begin; i < r.end; ++i) order.push_back(i);
  }
  auto in_regions = [&](const CueHit &hit) {
    for (const Range &r : regions) {
      if (hit.begin >= r.begin && hit.end <= r.end) return true;
    }
    return false;
  };

  std::vector<std::string> connector;
  if (arg.head == Head::kNominal) {
    const Cue *entry = nullptr;
    if (first_wh) {
      entry = ResolveWhEntry(rules.cues()[first_wh->cue], order, w, rules);
    }
    for (const CueHit &hit : hits) {
      if (rules.cues()[hit.cue].category == CueCategory::kWh &&
          in_regions(hit)) {
        w.Kill(hit.begin, hit.end);
      }
    }
    if (entry) {
      arg.nominal = entry->nominal;
      connector = Tokens(entry->connector);
      for (const std::string &t : entry->with) {
        for (int i : order) {
          if (w.alive[i] && w.text[i] == t) {
            w.alive[i] = false;
            break;
          }
        }
      }
    } else {
      arg.nominal = rules.generic_nominal();
    }
    for (int i : order) {
      if (w.alive[i] && rules.nominal_drop().count(w.text[i])) {
        w.alive[i] = false;
      }
    }
  }

  // Surviving tokens with their source index (-1 for inserted tokens).
  std::vector<std::pair<std::string, int>> seq;
  for (int i : order) {
    if (w.alive[i]) seq.emplace_back(w.text[i], i);
  }

  if (label == SpeechActType::kAlternativeQuestion) {
    bool dropped = true;
    while (dropped) {
      dropped = false;
      for (const auto &tail : rules.alternative_tails()) {
        if (tail.size() > seq.size()) continue;
        bool match = true;
        for (size_t k = 0; k < tail.size(); ++k) {
          match &= seq[seq.size() - tail.size() + k].first == tail[k];
        }
        if (match && tail.size() < seq.size()) {
          seq.resize(seq.size() - tail.size());
          dropped = true;
        }
      }
    }
    if (arg.head == Head::kNominal) {
      for (const CueHit &hit : hits) {
        const Cue &cue = rules.cues()[hit.cue];
        if (cue.category != CueCategory::kAlternative) continue;
        auto at = std::find_if(seq.begin(), seq.end(), [&](const auto &p) {
          return p.second == hit.begin;
        });
        if (at == seq.end() || at == seq.begin()) continue;
        size_t pos = at - seq.begin();
        if (!cue.joiner.empty()) {
          seq.erase(seq.begin() + pos, seq.begin() + pos + (hit.end - hit.begin));
          std::vector<std::string> joiner = Tokens(cue.joiner);
          for (size_t k = 0; k < joiner.size(); ++k) {
            seq.insert(seq.begin() + pos + k, {joiner[k], -1});
          }
        }
        if (!cue.between.empty()) {
          size_t left = pos - 1;
          if (left > 0 &&
              rules.alternative_prepositions().count(seq[left - 1].first)) {
            seq.erase(seq.begin() + left - 1);
            --left;
          }
          std::vector<std::string> between = Tokens(cue.between);
          for (size_t k = 0; k < between.size(); ++k) {
            seq.insert(seq.begin() + left + k, {between[k], -1});
          }
        }
        break;
      }
    }
  }

  std::vector<std::string> content;
  content.reserve(seq.size());
  for (auto &p : seq) content.push_back(std::move(p.first));
  content = StripPoliteness(content, rules);
  CoreferenceResult coref = NormalizeCoreference(content, rules, intent);
  arg.referents = coref.referents;
  arg.content = std::move(connector);
  for (std::string &t : coref.tokens) arg.content.push_back(std::move(t));
  return arg;
}

std::string Render(const IntentArgument &arg, const RuleSet &rules) {
  std::string head = arg.head == Head::kNominal ? arg.nominal
                                                : rules.MarkerFor(arg.head).text;
  bool glue = arg.head != Head::kNominal && rules.MarkerFor(arg.head).glue;
  std::string body = JoinTokens(arg.content);
  if (head.empty()) return body;
  if (body.empty()) return head;
  if (arg.position == HeadPosition::kInitial) return head + " " + body;
  return glue ? body + head : body + " " + head;
}

IntentArgument ParseArgument(const std::string &text, const RuleSet &rules,
                             HeadPosition position) {
  IntentArgument arg;
  arg.position = position;
  std::string norm = JoinTokens(SplitWhitespace(text));

  // Longest marker first so "not to" wins over "to".
  std::vector<Head> heads = {Head::kNotTo, Head::kTo, Head::kWhetherOr,
                             Head::kIf};
  std::stable_sort(heads.begin(), heads.end(), [&](Head a, Head b) {
    return rules.MarkerFor(a).text.size() > rules.MarkerFor(b).text.size();
  });
  std::string rest;
  bool found = false;
  for (Head head : heads) {
    const Marker &m = rules.MarkerFor(head);
    if (m.text.empty()) continue;
    if (position == HeadPosition::kInitial) {
      if (norm == m.text) {
        rest.clear();
      } else if (StartsWith(norm, m.text + " ")) {
        rest = norm.substr(m.text.size() + 1);
      } else {
        continue;
      }
    } else {
      if (norm == m.text) {
        rest.clear();
      } else if (!m.glue && EndsWith(norm, " " + m.text)) {
        rest = norm.substr(0, norm.size() - m.text.size() - 1);
      } else if (m.glue && EndsWith(norm, m.text) &&
                 norm.size() > m.text.size() &&
                 norm[norm.size() - m.text.size() - 1] != ' ') {
        rest = norm.substr(0, norm.size() - m.text.size());
      } else {
        continue;
      }
    }
    arg.head = head;
    found = true;
    break;
  }
  if (!found) {
    arg.head = Head::kNominal;
    std::vector<std::string> nominals;
    for (const Cue &cue : rules.cues()) {
      if (cue.category == CueCategory::kWh && !cue.nominal.empty()) {
        nominals.push_back(cue.nominal);
      }
    }
    if (!rules.generic_nominal().empty()) {
      nominals.push_back(rules.generic_nominal());
    }
    std::string best;
    for (const std::string &nominal : nominals) {
      if (nominal.size() <= best.size()) continue;
      bool match = position == HeadPosition::kInitial
                       ? (norm == nominal || StartsWith(norm, nominal + " "))
                       : (norm == nominal || EndsWith(norm, " " + nominal));
      if (match) best = nominal;
    }
    arg.nominal = best;
    if (best.empty()) {
      rest = norm;
    } else if (norm == best) {
      rest.clear();
    } else if (position == HeadPosition::kInitial) {
      rest = norm.substr(best.size() + 1);
    } else {
      rest = norm.substr(0, norm.size() - best.size() - 1);
    }
  }
  arg.content = SplitWhitespace(rest);

  for (const PronounEntry &p : rules.pronouns()) {
    for (const std::string &phrase : {p.replacement, p.command_replacement}) {
      if (phrase.empty()) continue;
      std::vector<std::string> pt = Tokens(phrase);
      for (size_t i = 0; i + pt.size() <= arg.content.size(); ++i) {
        if (std::equal(pt.begin(), pt.end(), arg.content.begin() + i)) {
          (p.speaker ? arg.referents.speaker : arg.referents.addressee) = true;
        }
      }
    }
  }
  return arg;
}

ReferentNotation NotationFor(const ReferentSet &referents,
                             const RuleSet &rules) {
  if (referents.speaker && referents.addressee) return ReferentNotation::kBoth;
  if (referents.speaker) return ReferentNotation::kSpeakerOnly;
  if (referents.addressee) return ReferentNotation::kAddresseeOnly;
  return rules.subject_drop() ? ReferentNotation::kUnknown
                              : ReferentNotation::kNone;
}

}  // namespace intentarg
