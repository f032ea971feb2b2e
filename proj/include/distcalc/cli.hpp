// Copyright 2026 The distcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.

#ifndef DISTCALC_CLI_HPP_
#define DISTCALC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace distcalc {

enum ExitCode { kExitOk = 0, kExitDomainError = 1, kExitUsageError = 2 };

// Parses `args` (without the program name), runs the subcommand and writes
// the document to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distcalc

#endif  // DISTCALC_CLI_HPP_
