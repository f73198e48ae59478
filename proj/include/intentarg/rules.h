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

// Language-specific lexicons that drive the classifier, extractor and
// variant generator. A RuleSet is immutable after loading and can be shared
// between threads.
//
// File schema (JSON, one file per language):
//
//   language              string tag, e.g. "en"
//   head_position         "initial" | "final"   default rendering order
//   cue_position          "initial" | "final"   where clause cues sit
//   wh_in_situ            bool   wh cues match anywhere, not only up front
//   subject_drop          bool   no pronoun => notation "unknown"
//   fillers               [cue]  skippable discourse prefix ("yeah", "but")
//   politeness_markers    [cue]  removed from every extracted argument
//   question_cues         [cue]
//   wh_cues               [{cue, nominal, connector?, with?}]
//   generic_nominal       string nominal for wh cues without a mapping
//   alternative_cues      [{cue, between?, joiner?}]
//   alternative_tails     [phrase]  dropped from alternative questions
//   alternative_prepositions [token]
//   prohibition_cues      [cue]
//   imperative_cues       [cue]
//   imperative_verbs      [token]  bare verbs, only at utterance start
//   conditional_cues      [cue]
//   pronouns              [{surface, referent, replacement,
//                           command_replacement?}]
//   deictic_tokens        [token]
//   nominal_drop          [token]  auxiliaries dropped from nominal content
//   markers               {if, whether_or, to, not_to}: {text, glue?}
//   synonyms              [[token, ...], ...]
//   frames                {if, whether_or, nominal, to, not_to}: [template]
//   politeness_insertions {question: [phrase], command: [phrase]}
//   scramble_joiners      [token]
//
// A cue is either a string or {cue, anchor?, keep?}. Cue strings are token
// sequences separated by spaces; a single token may start or end with '*'
// to match a suffix or prefix ("*렴" matches "대기하렴"). anchor is one of
// "leading", "trailing", "any"; keep = true leaves the matched tokens in
// the extracted content.

#ifndef INTENTARG_RULES_H_
#define INTENTARG_RULES_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "intentarg/types.h"
#include "json.hpp"

namespace intentarg {

// Declaration order is the tie-break priority for equally long matches.
enum class CueCategory {
  kProhibition,
  kImperative,
  kConditional,
  kAlternative,
  kWh,
  kQuestion,
  kPoliteness,
  kFiller,
};

std::string_view CueCategoryName(CueCategory category);

enum class Anchor { kLeading, kTrailing, kAny };

struct Cue {
  CueCategory category = CueCategory::kQuestion;
  std::string text;
  std::vector<std::string> pattern;
  Anchor anchor = Anchor::kAny;
  bool keep = false;
  bool bare_verb = false;

  // Wh cues.
  std::string nominal;
  std::string connector;
  std::vector<std::string> with;

  // Alternative cues.
  std::string between;
  std::string joiner;

  // Trace entry, "category:text".
  std::string TraceName() const;
};

struct PronounEntry {
  std::string surface;
  bool speaker = false;  // false: addressee
  std::string replacement;
  std::string command_replacement;

  const std::string &ReplacementFor(BroadIntent intent) const {
    return intent == BroadIntent::kCommand && !command_replacement.empty()
               ? command_replacement
               : replacement;
  }
};

struct Marker {
  std::string text;
  bool glue = false;
};

// Token-level glob: "*x" suffix, "x*" prefix, otherwise exact.
bool TokenMatches(std::string_view pattern, std::string_view token);

class RuleSet {
 public:
  RuleSet() = default;

  static RuleSet FromJson(const nlohmann::json &doc);
  static RuleSet Load(const std::string &path);

  const std::string &language() const { return language_; }
  HeadPosition head_position() const { return head_position_; }
  HeadPosition cue_position() const { return cue_position_; }
  bool subject_drop() const { return subject_drop_; }

  const std::vector<Cue> &cues() const { return cues_; }
  // Indices of cues whose first pattern token could match `token`.
  std::vector<int> CandidatesAt(std::string_view token) const;
  bool HasCue(const std::string &trace_name) const;

  const std::vector<std::vector<std::string>> &alternative_tails() const {
    return alternative_tails_;
  }
  const std::set<std::string> &alternative_prepositions() const {
    return alternative_prepositions_;
  }
  const std::vector<PronounEntry> &pronouns() const { return pronouns_; }
  const std::set<std::string> &deictic_tokens() const { return deictic_; }
  const std::set<std::string> &nominal_drop() const { return nominal_drop_; }
  const std::string &generic_nominal() const { return generic_nominal_; }
  const Marker &MarkerFor(Head head) const;

  // Equivalence classes; Canonical maps every member to the first entry.
  const std::vector<std::vector<std::string>> &synonyms() const {
    return synonyms_;
  }
  std::vector<std::string> SynonymsOf(const std::string &token) const;
  std::string Canonical(const std::string &token) const;

  const std::vector<std::string> &FramesFor(Head head) const;
  const std::vector<std::string> &PolitenessInsertions(
      BroadIntent intent) const;
  const std::set<std::string> &scramble_joiners() const {
    return scramble_joiners_;
  }

  // Politeness markers as token patterns, for strip_politeness.
  std::vector<const Cue *> PolitenessCues() const;
  bool IsPronoun(std::string_view token) const;

  // Adds a cue after construction; used by tests that build rule sets in
  // code. Rebuilds the lookup index.
  void AddCue(Cue cue);
  void AddPronoun(PronounEntry entry) { pronouns_.push_back(std::move(entry)); }
  void set_head_position(HeadPosition p) { head_position_ = p; }
  void set_cue_position(HeadPosition p) { cue_position_ = p; }
  void SetMarker(Head head, Marker marker) { markers_[head] = marker; }
  void SetFrames(Head head, std::vector<std::string> frames) {
    frames_[head] = std::move(frames);
  }
  void SetPolitenessInsertions(BroadIntent intent,
                               std::vector<std::string> phrases) {
    insertions_[intent] = std::move(phrases);
  }
  void AddSynonyms(std::vector<std::string> group);
  void AddDeictic(std::string token) { deictic_.insert(std::move(token)); }
  void AddScrambleJoiner(std::string token) {
    scramble_joiners_.insert(std::move(token));
  }

 private:
  void Reindex();

  std::string language_;
  HeadPosition head_position_ = HeadPosition::kInitial;
  HeadPosition cue_position_ = HeadPosition::kInitial;
  bool wh_in_situ_ = false;
  bool subject_drop_ = false;

  std::vector<Cue> cues_;
  std::map<std::string, std::vector<int>, std::less<>> exact_index_;
  std::vector<int> glob_index_;
  std::set<std::string> trace_names_;

  std::vector<std::vector<std::string>> alternative_tails_;
  std::set<std::string> alternative_prepositions_;
  std::vector<PronounEntry> pronouns_;
  std::set<std::string> deictic_;
  std::set<std::string> nominal_drop_;
  std::string generic_nominal_ = "the thing";
  std::map<Head, Marker> markers_;
  std::vector<std::vector<std::string>> synonyms_;
  std::map<std::string, int> synonym_group_;
  std::map<Head, std::vector<std::string>> frames_;
  std::map<BroadIntent, std::vector<std::string>> insertions_;
  std::set<std::string> scramble_joiners_;
};

}  // namespace intentarg

#endif  // INTENTARG_RULES_H_
