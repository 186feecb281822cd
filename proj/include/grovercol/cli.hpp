// Copyright 2026 The grovercol Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>

namespace grovercol {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitRuntime = 1, kExitConfig = 2 };

/**
 * Entry point of the `grovercol` tool with subcommands search, collide,
 * compare and sweep. Diagnostics go to `err`. Returns an ExitCode.
 */
int run_cli(int argc, const char *const *argv, std::ostream &err);

} // namespace grovercol
