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

#include "intentarg/types.h"

#include <string>

#include "intentarg/errors.h"

namespace intentarg {
namespace {

constexpr std::array<std::string_view, 6> kLabelTags = {
    "yn", "alt", "wh", "ph", "req", "sreq"};
constexpr std::array<std::string_view, 6> kLabelNames = {
    "YesNoQuestion", "AlternativeQuestion", "WhQuestion",
    "Prohibition",   "Requirement",         "StrongRequirement"};
constexpr std::array<std::string_view, 5> kNotationTags = {
    "speaker", "addressee", "both", "none", "unknown"};
constexpr std::array<std::string_view, 5> kTopicTags = {
    "mail", "schedule", "smarthome", "weather", "free"};

}  // namespace

int LabelCode(SpeechActType type) { return static_cast<int>(type); }

SpeechActType LabelFromCode(int code) {
  if (code < 0 || code > 5) {
    throw Error(ErrorCode::kInvalidLabel,
                "label code " + std::to_string(code) + " is not in 0..5");
  }
  return static_cast<SpeechActType>(code);
}

std::string_view LabelTag(SpeechActType type) {
  return kLabelTags[LabelCode(type)];
}

SpeechActType LabelFromTag(std::string_view tag) {
  for (size_t i = 0; i < kLabelTags.size(); ++i) {
    if (kLabelTags[i] == tag || kLabelNames[i] == tag) {
      return static_cast<SpeechActType>(i);
    }
  }
  throw Error(ErrorCode::kInvalidLabel,
              "unknown label '" + std::string(tag) + "'");
}

std::string_view LabelName(SpeechActType type) {
  return kLabelNames[LabelCode(type)];
}

BroadIntent BroadIntentOf(SpeechActType type) {
  return LabelCode(type) <= 2 ? BroadIntent::kQuestion : BroadIntent::kCommand;
}

std::string_view BroadIntentName(BroadIntent intent) {
  return intent == BroadIntent::kQuestion ? "Question" : "Command";
}

std::string_view NotationTag(ReferentNotation notation) {
  return kNotationTags[static_cast<int>(notation)];
}

ReferentNotation NotationFromTag(std::string_view tag) {
  for (size_t i = 0; i < kNotationTags.size(); ++i) {
    if (kNotationTags[i] == tag) return static_cast<ReferentNotation>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown notation '" + std::string(tag) + "'");
}

std::string_view TopicTag(Topic topic) {
  return kTopicTags[static_cast<int>(topic)];
}

Topic TopicFromTag(std::string_view tag) {
  for (size_t i = 0; i < kTopicTags.size(); ++i) {
    if (kTopicTags[i] == tag) return static_cast<Topic>(i);
  }
  throw Error(ErrorCode::kParseError,
              "unknown topic '" + std::string(tag) + "'");
}

std::string_view HeadName(Head head) {
  switch (head) {
    case Head::kIf: return "If";
    case Head::kWhetherOr: return "WhetherOr";
    case Head::kNominal: return "Nominal";
    case Head::kTo: return "To";
    case Head::kNotTo: return "NotTo";
  }
  return "?";
}

bool IsQuestionHead(Head head) {
  return head == Head::kIf || head == Head::kWhetherOr ||
         head == Head::kNominal;
}

std::string_view HeadPositionName(HeadPosition position) {
  return position == HeadPosition::kInitial ? "initial" : "final";
}

HeadPosition HeadPositionFromName(std::string_view name) {
  if (name == "initial") return HeadPosition::kInitial;
  if (name == "final") return HeadPosition::kFinal;
  throw Error(ErrorCode::kInvalidArgument,
              "head position must be 'initial' or 'final', got '" +
                  std::string(name) + "'");
}

}  // namespace intentarg
