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

#ifndef INTENTARG_ERRORS_H_
#define INTENTARG_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>

namespace intentarg {

enum class ErrorCode {
  kInvalidLabel,
  kEmptyUtterance,
  kAnalyzerUnavailable,
  kNotADirective,
  kMalformedStrongRequirement,
  kParseError,
  kIoError,
  kTooSmall,
  kMalformedMatrix,
  kNothingToPlan,
  kVariantExhausted,
  kMalformedEmbeddings,
  kAlignmentError,
  kNoTrainingData,
  kInvalidRules,
  kInvalidArgument,
};

const char *ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The optional
// line number refers to a 1-based line of the input file being read.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message,
        std::optional<int> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<int> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
};

}  // namespace intentarg

#endif  // INTENTARG_ERRORS_H_
