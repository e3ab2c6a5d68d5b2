// SPDX-License-Identifier: Apache-2.0
//
// pinch-est: channel estimation simulator for pinching-antenna systems
// Copyright (C) 2026 The pinch-est authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PINCH_CLI_HPP
#define PINCH_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pinch::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitFailure = 1;
    inline constexpr int kExitConfigError = 2;
    inline constexpr int kExitSelfcheckFailed = 3;

    struct CommandSpec
    {
        std::string subcommand; ///< uplink-snr, beta-sweep, power-profile, downlink-snr, gram-report, selfcheck
        std::optional<std::filesystem::path> config_path;
        std::filesystem::path output_dir = ".";
        std::vector<std::string> overrides; ///< KEY=VALUE, applied in order
        std::optional<std::uint64_t> seed;
        unsigned workers = 1;
        bool svg = false;
        int verbosity = 0;
        std::string protocol = "smatrix"; ///< gram-report only
    };

    /*!
     * Parses argv into a CommandSpec. Returns std::nullopt after printing
     * help or a usage error; `exit_code` then holds the status to return.
     */
    std::optional<CommandSpec> parse_command_line(int argc, const char *const *argv, std::ostream &out,
                                                  std::ostream &err, int &exit_code);

    /// Executes one command. Seed precedence: --seed, then --set/config file, then PINCH_EST_SEED.
    int run(const CommandSpec &command, std::ostream &out, std::ostream &err);

    /// parse_command_line followed by run.
    int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
} // namespace pinch::cli

#endif
