// Copyright 2026 The hcsteiner Authors.
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

#ifndef HCSTEINER_TOOLS_CLI_H_
#define HCSTEINER_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "hcsteiner/budget.h"
#include "hcsteiner/error.h"

namespace hcsteiner::cli {

enum class Command { kExact, kBound, kCds, kGroupVerify, kExperiment, kSdiam };
enum class OutputFormat { kText, kJson, kCsv };

struct RunConfig {
  Command command = Command::kExact;
  std::optional<int> n;
  // "<file>", "even", "odd", "all" or "inline:v1,v2,...".
  std::string set;
  std::optional<int> k;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  bool exhaustive = false;
  bool transcript = false;
  // cds construction: best, greedy, hamming, exact, steinerized-greedy,
  // steinerized-hamming.
  std::string method = "best";
  Budget budget;
  OutputFormat format = OutputFormat::kText;
};

// Exit status for each error category; 0 is success.
int ExitCode(ErrorCategory category);

// Throws Error(kParse) on malformed or missing flags. Returns std::nullopt
// after printing help to `out` when --help was given.
std::optional<RunConfig> ParseCommandLine(int argc, const char* const* argv,
                                          std::ostream& out);

// Executes one command and writes the report to `out`. Library errors are
// reported on `err` as "error[<category>]: <message>" (and as an error
// object on `out` in JSON mode); the return value is the exit status.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// ParseCommandLine followed by Run, with parse failures reported the same
// way as other errors.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace hcsteiner::cli

#endif  // HCSTEINER_TOOLS_CLI_H_
