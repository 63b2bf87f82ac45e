// Copyright 2023 The Authors.
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

// The mcone command line: subcommands validate, cone, invariant, transfer,
// reconstruct, compare, certify-pair, and higgs.

#ifndef MCONE_TOOLS_COMMANDS_H_
#define MCONE_TOOLS_COMMANDS_H_

#include <iosfwd>

namespace mcone::cli {

enum ExitCode {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitUnequal = 2,
  kExitTooLarge = 3,
  kExitInternal = 4,
};

// Runs one command line. Results go to `out`, diagnostics to `err`; a file
// argument "-" reads `in`.
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mcone::cli

#endif  // MCONE_TOOLS_COMMANDS_H_
