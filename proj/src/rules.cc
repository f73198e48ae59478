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

#include "intentarg/rules.h"

#include <fstream>
#include <sstream>

#include "intentarg/errors.h"
#include "intentarg/textnorm.h"

namespace intentarg {

using nlohmann::json;

namespace {

const std::vector<std::string> kNoStrings;

[[noreturn]] void Invalid(const std::string &message) {
  throw Error(ErrorCode::kInvalidRules, message);
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() &&
         s.compare(0, prefix.size(), prefix) == 0;
}

bool IsGlob(std::string_view token) {
  return !token.empty() && (token.front() == '*' || token.back() == '*');
}

void CheckNormalizedToken(const std::string &token, const std::string &where) {
  std::string bare = token;
  if (!bare.empty() && bare.front() == '*') bare.erase(bare.begin());
  if (!bare.empty() && bare.back() == '*') bare.pop_back();
  if (bare.empty() || Normalize(bare) != bare || bare.find(' ') != std::string::npos) {
    Invalid(where + ": token '" + token + "' is not normalized");
  }
}

std::vector<std::string> PatternOf(const std::string &text,
                                   const std::string &where) {
  std::vector<std::string> pattern = SplitWhitespace(text);
  if (pattern.empty()) Invalid(where + ": empty cue");
  for (const std::string &t : pattern) CheckNormalizedToken(t, where);
  if (pattern.size() > 1) {
    for (const std::string &t : pattern) {
      if (IsGlob(t)) Invalid(where + ": globs only allowed in 1-token cues");
    }
  }
  return pattern;
}

Anchor AnchorFromName(const std::string &name, const std::string &where) {
  if (name == "leading") return Anchor::kLeading;
  if (name == "trailing") return Anchor::kTrailing;
  if (name == "any") return Anchor::kAny;
  Invalid(where + ": unknown anchor '" + name + "'");
}

Cue ParseCue(const json &item, CueCategory category, Anchor default_anchor,
             const std::string &where) {
  Cue cue;
  cue.category = category;
  cue.anchor = default_anchor;
  if (item.is_string()) {
    cue.text = item.get<std::string>();
  } else if (item.is_object() && item.contains("cue")) {
    cue.text = item.at("cue").get<std::string>();
    if (item.contains("anchor")) {
      cue.anchor = AnchorFromName(item.at("anchor").get<std::string>(), where);
    }
    cue.keep = item.value("keep", false);
    cue.nominal = item.value("nominal", std::string());
    cue.connector = item.value("connector", std::string());
    if (item.contains("with")) {
      cue.with = item.at("with").get<std::vector<std::string>>();
    }
    cue.between = item.value("between", std::string());
    cue.joiner = item.value("joiner", std::string());
  } else {
    Invalid(where + ": cue must be a string or an object with 'cue'");
  }
  cue.pattern = PatternOf(cue.text, where);
  return cue;
}

Head HeadFromKey(const std::string &key) {
  if (key == "if") return Head::kIf;
  if (key == "whether_or") return Head::kWhetherOr;
  if (key == "nominal") return Head::kNominal;
  if (key == "to") return Head::kTo;
  if (key == "not_to") return Head::kNotTo;
  Invalid("unknown head key '" + key + "'");
}

HeadPosition PositionField(const json &doc, const char *key) {
  std::string name = doc.value(key, std::string("initial"));
  if (name == "initial") return HeadPosition::kInitial;
  if (name == "final") return HeadPosition::kFinal;
  Invalid(std::string(key) + " must be 'initial' or 'final'");
}

}  // namespace

std::string_view CueCategoryName(CueCategory category) {
  switch (category) {
    case CueCategory::kProhibition: return "prohibition";
    case CueCategory::kImperative: return "imperative";
    case CueCategory::kConditional: return "conditional";
    case CueCategory::kAlternative: return "alternative";
    case CueCategory::kWh: return "wh";
    case CueCategory::kQuestion: return "question";
    case CueCategory::kPoliteness: return "politeness";
    case CueCategory::kFiller: return "filler";
  }
  return "?";
}

std::string Cue::TraceName() const {
  return std::string(CueCategoryName(category)) + ":" + text;
}

bool TokenMatches(std::string_view pattern, std::string_view token) {
  if (pattern.size() > 1 && pattern.front() == '*') {
    return EndsWith(token, pattern.substr(1));
  }
  if (pattern.size() > 1 && pattern.back() == '*') {
    return StartsWith(token, pattern.substr(0, pattern.size() - 1));
  }
  return pattern == token;
}

RuleSet RuleSet::FromJson(const json &doc) {
  if (!doc.is_object()) Invalid("rule file must hold a JSON object");
  RuleSet rules;
  try {
    rules.language_ = doc.value("language", std::string());
    rules.head_position_ = PositionField(doc, "head_position");
    rules.cue_position_ = PositionField(doc, "cue_position");
    rules.wh_in_situ_ = doc.value("wh_in_situ", false);
    rules.subject_drop_ = doc.value("subject_drop", false);
    bool final_cues = rules.cue_position_ == HeadPosition::kFinal;

    struct Section {
      const char *key;
      CueCategory category;
      Anchor anchor;
    };
    const Section sections[] = {
        {"fillers", CueCategory::kFiller, Anchor::kLeading},
        {"politeness_markers", CueCategory::kPoliteness, Anchor::kAny},
        {"question_cues", CueCategory::kQuestion,
         final_cues ? Anchor::kTrailing : Anchor::kLeading},
        {"wh_cues", CueCategory::kWh,
         (rules.wh_in_situ_ || final_cues) ? Anchor::kAny : Anchor::kLeading},
        {"alternative_cues", CueCategory::kAlternative, Anchor::kAny},
        {"prohibition_cues", CueCategory::kProhibition, Anchor::kAny},
        {"imperative_cues", CueCategory::kImperative,
         final_cues ? Anchor::kTrailing : Anchor::kAny},
        {"conditional_cues", CueCategory::kConditional,
         final_cues ? Anchor::kAny : Anchor::kLeading},
    };
    for (const Section &section : sections) {
      if (!doc.contains(section.key)) continue;
      for (const json &item : doc.at(section.key)) {
        Cue cue = ParseCue(item, section.category, section.anchor,
                           section.key);
        if (section.category == CueCategory::kFiller) {
          cue.anchor = Anchor::kLeading;
        }
        rules.cues_.push_back(std::move(cue));
      }
    }
    if (doc.contains("imperative_verbs")) {
      for (const json &item : doc.at("imperative_verbs")) {
        Cue cue = ParseCue(item, CueCategory::kImperative, Anchor::kLeading,
                           "imperative_verbs");
        cue.keep = true;
        cue.bare_verb = true;
        rules.cues_.push_back(std::move(cue));
      }
    }

    if (doc.contains("alternative_tails")) {
      for (const json &item : doc.at("alternative_tails")) {
        rules.alternative_tails_.push_back(
            PatternOf(item.get<std::string>(), "alternative_tails"));
      }
    }
    for (const std::string &t : doc.value("alternative_prepositions",
                                          std::vector<std::string>())) {
      CheckNormalizedToken(t, "alternative_prepositions");
      rules.alternative_prepositions_.insert(t);
    }
    if (doc.contains("pronouns")) {
      for (const json &item : doc.at("pronouns")) {
        PronounEntry entry;
        entry.surface = item.at("surface").get<std::string>();
        CheckNormalizedToken(entry.surface, "pronouns");
        std::string referent = item.at("referent").get<std::string>();
        if (referent != "speaker" && referent != "addressee") {
          Invalid("pronouns: referent must be 'speaker' or 'addressee'");
        }
        entry.speaker = referent == "speaker";
        entry.replacement = item.at("replacement").get<std::string>();
        entry.command_replacement =
            item.value("command_replacement", std::string());
        rules.pronouns_.push_back(std::move(entry));
      }
      bool speaker = false, addressee = false;
      for (const PronounEntry &p : rules.pronouns_) {
        (p.speaker ? speaker : addressee) = true;
      }
      if (!speaker || !addressee) {
        Invalid("pronouns must cover both speaker and addressee forms");
      }
    }
    for (const std::string &t :
         doc.value("deictic_tokens", std::vector<std::string>())) {
      CheckNormalizedToken(t, "deictic_tokens");
      rules.deictic_.insert(t);
    }
    for (const std::string &t :
         doc.value("nominal_drop", std::vector<std::string>())) {
      CheckNormalizedToken(t, "nominal_drop");
      rules.nominal_drop_.insert(t);
    }
    rules.generic_nominal_ =
        doc.value("generic_nominal", std::string("the thing"));
    if (doc.contains("markers")) {
      for (const auto &[key, value] : doc.at("markers").items()) {
        Head head = HeadFromKey(key);
        if (head == Head::kNominal) Invalid("markers: nominal has no marker");
        Marker marker;
        if (value.is_string()) {
          marker.text = value.get<std::string>();
        } else {
          marker.text = value.at("text").get<std::string>();
          marker.glue = value.value("glue", false);
        }
        rules.markers_[head] = marker;
      }
    }
    if (doc.contains("synonyms")) {
      for (const json &group : doc.at("synonyms")) {
        rules.AddSynonyms(group.get<std::vector<std::string>>());
      }
    }
    if (doc.contains("frames")) {
      for (const auto &[key, value] : doc.at("frames").items()) {
        rules.frames_[HeadFromKey(key)] = value.get<std::vector<std::string>>();
      }
    }
    if (doc.contains("politeness_insertions")) {
      const json &ins = doc.at("politeness_insertions");
      rules.insertions_[BroadIntent::kQuestion] =
          ins.value("question", std::vector<std::string>());
      rules.insertions_[BroadIntent::kCommand] =
          ins.value("command", std::vector<std::string>());
    }
    for (const std::string &t :
         doc.value("scramble_joiners", std::vector<std::string>())) {
      rules.scramble_joiners_.insert(t);
    }
  } catch (const json::exception &e) {
    Invalid(std::string("malformed rule file: ") + e.what());
  }

  // Deictic tokens are never removed by extraction, so no removable list
  // may contain them.
  for (const Cue &cue : rules.cues_) {
    for (const std::string &t : cue.pattern) {
      if (rules.deictic_.count(t)) {
        Invalid("deictic token '" + t + "' appears in cue '" + cue.text + "'");
      }
    }
  }
  for (const std::string &t : rules.nominal_drop_) {
    if (rules.deictic_.count(t)) {
      Invalid("deictic token '" + t + "' appears in nominal_drop");
    }
  }
  rules.Reindex();
  return rules;
}

RuleSet RuleSet::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open rule file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception &e) {
    Invalid(path + ": " + e.what());
  }
  return FromJson(doc);
}

void RuleSet::AddCue(Cue cue) {
  if (cue.pattern.empty()) cue.pattern = SplitWhitespace(cue.text);
  cues_.push_back(std::move(cue));
  Reindex();
}

void RuleSet::AddSynonyms(std::vector<std::string> group) {
  if (group.size() < 2) Invalid("synonym groups need at least two tokens");
  int id = static_cast<int>(synonyms_.size());
  for (const std::string &t : group) {
    CheckNormalizedToken(t, "synonyms");
    if (synonym_group_.count(t)) {
      Invalid("token '" + t + "' appears in two synonym groups");
    }
    synonym_group_[t] = id;
  }
  synonyms_.push_back(std::move(group));
}

void RuleSet::Reindex() {
  exact_index_.clear();
  glob_index_.clear();
  trace_names_.clear();
  for (size_t i = 0; i < cues_.size(); ++i) {
    const std::string &first = cues_[i].pattern.front();
    if (IsGlob(first)) {
      glob_index_.push_back(static_cast<int>(i));
    } else {
      exact_index_[first].push_back(static_cast<int>(i));
    }
    trace_names_.insert(cues_[i].TraceName());
  }
}

std::vector<int> RuleSet::CandidatesAt(std::string_view token) const {
  std::vector<int> out;
  auto it = exact_index_.find(token);
  if (it != exact_index_.end()) out = it->second;
  for (int i : glob_index_) {
    if (TokenMatches(cues_[i].pattern.front(), token)) out.push_back(i);
  }
  return out;
}

bool RuleSet::HasCue(const std::string &trace_name) const {
  return trace_names_.count(trace_name) > 0;
}

const Marker &RuleSet::MarkerFor(Head head) const {
  static const Marker kIf{"if", false};
  static const Marker kWhether{"whether", false};
  static const Marker kTo{"to", false};
  static const Marker kNotTo{"not to", false};
  static const Marker kNone{"", false};
  auto it = markers_.find(head);
  if (it != markers_.end()) return it->second;
  switch (head) {
    case Head::kIf: return kIf;
    case Head::kWhetherOr: return kWhether;
    case Head::kTo: return kTo;
    case Head::kNotTo: return kNotTo;
    case Head::kNominal: return kNone;
  }
  return kNone;
}

std::vector<std::string> RuleSet::SynonymsOf(const std::string &token) const {
  auto it = synonym_group_.find(token);
  if (it == synonym_group_.end()) return {};
  std::vector<std::string> out;
  for (const std::string &s : synonyms_[it->second]) {
    if (s != token) out.push_back(s);
  }
  return out;
}

std::string RuleSet::Canonical(const std::string &token) const {
  auto it = synonym_group_.find(token);
  return it == synonym_group_.end() ? token : synonyms_[it->second].front();
}

const std::vector<std::string> &RuleSet::FramesFor(Head head) const {
  auto it = frames_.find(head);
  return it == frames_.end() ? kNoStrings : it->second;
}

const std::vector<std::string> &RuleSet::PolitenessInsertions(
    BroadIntent intent) const {
  auto it = insertions_.find(intent);
  return it == insertions_.end() ? kNoStrings : it->second;
}

std::vector<const Cue *> RuleSet::PolitenessCues() const {
  std::vector<const Cue *> out;
  for (const Cue &cue : cues_) {
    if (cue.category == CueCategory::kPoliteness) out.push_back(&cue);
  }
  return out;
}

bool RuleSet::IsPronoun(std::string_view token) const {
  for (const PronounEntry &p : pronouns_) {
    if (p.surface == token) return true;
  }
  return false;
}

}  // namespace intentarg
