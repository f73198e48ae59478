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

#include "intentarg/errors.h"

namespace intentarg {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kEmptyUtterance: return "EmptyUtterance";
    case ErrorCode::kAnalyzerUnavailable: return "AnalyzerUnavailable";
    case ErrorCode::kNotADirective: return "NotADirective";
    case ErrorCode::kMalformedStrongRequirement:
      return "MalformedStrongRequirement";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kMalformedMatrix: return "MalformedMatrix";
    case ErrorCode::kNothingToPlan: return "NothingToPlan";
    case ErrorCode::kVariantExhausted: return "VariantExhausted";
    case ErrorCode::kMalformedEmbeddings: return "MalformedEmbeddings";
    case ErrorCode::kAlignmentError: return "AlignmentError";
    case ErrorCode::kNoTrainingData: return "NoTrainingData";
    case ErrorCode::kInvalidRules: return "InvalidRules";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

static std::string Decorate(ErrorCode code, const std::string &message,
                            std::optional<int> line) {
  std::string text = ErrorCodeName(code);
  if (line) text += " (line " + std::to_string(*line) + ")";
  text += ": " + message;
  return text;
}

Error::Error(ErrorCode code, const std::string &message,
             std::optional<int> line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace intentarg
