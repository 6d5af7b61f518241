/*
   Copyright 2026 The kstab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KSTAB_CLI_HPP
#define KSTAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kstab {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCoverageGap = 1,
    kExitInputError = 2,
    kExitInternalError = 3,
};

/// Runs one invocation. \p args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kstab

#endif  // KSTAB_CLI_HPP
