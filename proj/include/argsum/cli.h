// Copyright 2026 The argsum Authors.
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

#ifndef ARGSUM_CLI_H_
#define ARGSUM_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace argsum::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceError = 3;
inline constexpr int kParseError = 4;
inline constexpr int kValidationError = 5;
inline constexpr int kConfigError = 6;
inline constexpr int kInvalidArgument = 7;

// Environment variables named kEnvPrefix + upper-cased flag (dashes as
// underscores) override config-file values; command-line flags win over
// both.
inline constexpr const char *kEnvPrefix = "ARGSUM_";
inline constexpr unsigned long long kDefaultSeed = 2017;

// Runs one subcommand. args[0] is the program name.
int Run(std::span<const std::string> args, std::ostream &out,
        std::ostream &err);

}  // namespace argsum::cli

#endif  // ARGSUM_CLI_H_
