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

// Domain types shared by every module: speech act labels, referent
// notation, topics, corpus records and the structured intent argument.

#ifndef INTENTARG_TYPES_H_
#define INTENTARG_TYPES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intentarg {

// The six directive subtypes. The integer codes follow the order
// yes/no, alternative, wh-, prohibition, requirement, strong requirement.
enum class SpeechActType {
  kYesNoQuestion = 0,
  kAlternativeQuestion = 1,
  kWhQuestion = 2,
  kProhibition = 3,
  kRequirement = 4,
  kStrongRequirement = 5,
};

inline constexpr std::array<SpeechActType, 6> kAllSpeechActTypes = {
    SpeechActType::kYesNoQuestion,    SpeechActType::kAlternativeQuestion,
    SpeechActType::kWhQuestion,       SpeechActType::kProhibition,
    SpeechActType::kRequirement,      SpeechActType::kStrongRequirement,
};

enum class BroadIntent { kQuestion, kCommand };

int LabelCode(SpeechActType type);
SpeechActType LabelFromCode(int code);

// Short canonical string tags: yn, alt, wh, ph, req, sreq.
std::string_view LabelTag(SpeechActType type);
SpeechActType LabelFromTag(std::string_view tag);

// Human-readable name, e.g. "AlternativeQuestion".
std::string_view LabelName(SpeechActType type);

BroadIntent BroadIntentOf(SpeechActType type);
std::string_view BroadIntentName(BroadIntent intent);

enum class ReferentNotation { kSpeakerOnly, kAddresseeOnly, kBoth, kNone,
                              kUnknown };

inline constexpr std::array<ReferentNotation, 5> kAllNotations = {
    ReferentNotation::kSpeakerOnly, ReferentNotation::kAddresseeOnly,
    ReferentNotation::kBoth, ReferentNotation::kNone,
    ReferentNotation::kUnknown,
};

// Tags: speaker, addressee, both, none, unknown.
std::string_view NotationTag(ReferentNotation notation);
ReferentNotation NotationFromTag(std::string_view tag);

enum class Topic { kMail, kSchedule, kSmartHome, kWeather, kFree };

inline constexpr std::array<Topic, 5> kAllTopics = {
    Topic::kMail, Topic::kSchedule, Topic::kSmartHome, Topic::kWeather,
    Topic::kFree,
};

// Default augmentation weights, in kAllTopics order.
inline constexpr std::array<int, 5> kDefaultTopicWeights = {1, 1, 1, 1, 4};

// Tags: mail, schedule, smarthome, weather, free.
std::string_view TopicTag(Topic topic);
Topic TopicFromTag(std::string_view tag);

struct CorpusRecord {
  SpeechActType label = SpeechActType::kYesNoQuestion;
  std::string sentence;
  std::string argument;
  std::optional<ReferentNotation> notation;
  std::optional<Topic> topic;

  bool operator==(const CorpusRecord &other) const = default;
};

enum class Head { kIf, kWhetherOr, kNominal, kTo, kNotTo };

std::string_view HeadName(Head head);
bool IsQuestionHead(Head head);

enum class HeadPosition { kInitial, kFinal };

std::string_view HeadPositionName(HeadPosition position);
HeadPosition HeadPositionFromName(std::string_view name);

struct ReferentSet {
  bool speaker = false;
  bool addressee = false;

  bool empty() const { return !speaker && !addressee; }
  bool operator==(const ReferentSet &other) const = default;
};

// Structured core content of a directive. For nominal heads `nominal`
// holds the head noun phrase ("the number"), possibly empty when the
// content is itself a noun phrase.
struct IntentArgument {
  Head head = Head::kTo;
  std::string nominal;
  std::vector<std::string> content;
  HeadPosition position = HeadPosition::kInitial;
  ReferentSet referents;

  bool operator==(const IntentArgument &other) const = default;
};

}  // namespace intentarg

#endif  // INTENTARG_TYPES_H_
