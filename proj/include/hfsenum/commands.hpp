// Copyright 2026 The hfsenum Authors
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

#ifndef HFSENUM_COMMANDS_HPP_
#define HFSENUM_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hfs {

enum class OutputFormat { kJson, kCsv, kPlain };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitResourceCap = 3,
};

// Everything one invocation depends on.
struct CommandSpec {
  std::string subcommand;                // levels | table | rank-profile | ...
  std::size_t n = 0;
  std::vector<std::size_t> u;            // atoms: one column per value
  std::string f = "half";                // bounded
  bool skip_duplicates = false;          // bounded
  std::string variant = "plain";         // table, oracle-verify
  std::optional<std::size_t> t_max;      // profiles
  std::size_t digits = 30;               // constant
  std::size_t terms = 12;                // constant
  bool dump = false;                     // oracle-verify
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> cache;

  // Flags in command-line form, for error messages.
  std::string echo() const;
};

// Dispatches one command. Results go to `out`, diagnostics to `err`.
int run(const CommandSpec& command, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfs

#endif  // HFSENUM_COMMANDS_HPP_
