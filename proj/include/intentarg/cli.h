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

// Command-line front end. Exit codes: 0 success, 1 validation found
// violations, 2 usage error, 3 I/O or format error.

#ifndef INTENTARG_CLI_H_
#define INTENTARG_CLI_H_

#include <ostream>

namespace intentarg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace intentarg

#endif  // INTENTARG_CLI_H_
