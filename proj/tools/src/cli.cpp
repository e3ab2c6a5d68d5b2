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

#include "pinch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pinch/activation.hpp"
#include "pinch/config.hpp"
#include "pinch/experiments.hpp"
#include "pinch/result_io.hpp"
#include "pinch/selfcheck.hpp"

namespace pinch::cli
{
    namespace
    {
        constexpr const char *kSubcommands[] = {"uplink-snr",   "beta-sweep", "power-profile",
                                                "downlink-snr", "gram-report", "selfcheck"};

        constexpr const char *kSeedEnv = "PINCH_EST_SEED";

        std::filesystem::path open_output(const CommandSpec &command, std::string_view ext, std::ofstream &file)
        {
            const auto path = command.output_dir / fmt::format("{}.{}", command.subcommand, ext);
            file.open(path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
            return path;
        }

        ExperimentConfig build_config(const CommandSpec &command)
        {
            ExperimentConfig config;
            if (const char *env = std::getenv(kSeedEnv); env && *env)
            {
                try
                {
                    config.set("seed", env);
                }
                catch (const ConfigError &e)
                {
                    throw ConfigError(fmt::format("{}: {}", kSeedEnv, e.what()), "seed");
                }
            }
            if (command.config_path)
                apply_config_file(config, *command.config_path);
            apply_overrides(config, command.overrides);
            if (command.seed)
                config.seed = *command.seed;
            config.validate();
            return config;
        }

        void print_matrix(std::ostream &out, const IntMatrix &m)
        {
            const auto width = static_cast<int>(
                std::max(fmt::format("{}", m.maxCoeff()).size(), fmt::format("{}", m.minCoeff()).size()));
            for (Eigen::Index i = 0; i < m.rows(); ++i)
            {
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    out << fmt::format("{}{:>{}}", j ? " " : "  ", m(i, j), width);
                out << '\n';
            }
        }

        std::string csv_quote(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + '"';
        }

        int report_config_error(const ConfigError &e, std::ostream &err)
        {
            err << "pinch-est: config error: " << e.what();
            if (!e.key().empty())
                err << " [key " << e.key() << "]";
            if (e.line() > 0)
                err << " [line " << e.line() << "]";
            err << '\n';
            return kExitConfigError;
        }

        int run_sweep(const CommandSpec &command, const ExperimentConfig &config, std::ostream &out,
                      std::ostream &err)
        {
            const auto result = run_experiment(command.subcommand, config, command.workers);

            std::ofstream csv;
            const auto csv_path = open_output(command, "csv", csv);
            write_csv(csv, result);
            csv.close();

            if (command.svg)
            {
                std::ifstream in(csv_path, std::ios::binary);
                const auto table = read_csv(in);
                std::ofstream svg;
                const auto svg_path = open_output(command, "svg", svg);
                write_svg(svg, table, command.subcommand);
                if (command.verbosity > 0)
                    out << "wrote " << svg_path.string() << '\n';
            }

            for (const auto &s : result.series)
                for (std::size_t i = 0; i < s.exclusion_rates.size(); ++i)
                    if (s.exclusion_rates[i] > kUnreliableExclusionRate)
                        err << fmt::format("warning: {} at {}={} excluded {:.2f}% of trials (singular systems)\n",
                                           s.name, result.axis_name, result.axis[i], 100.0 * s.exclusion_rates[i]);

            out << fmt::format("{} (seed {}, trials {}, config {:016x})\n", result.experiment, result.seed,
                               result.trials, result.config_hash);
            out << summary_table(result);
            if (command.verbosity > 0)
                out << "wrote " << csv_path.string() << '\n';
            return kExitOk;
        }

        int run_gram_report(const CommandSpec &command, const ExperimentConfig &config, std::ostream &out)
        {
            const Protocol protocol = parse_protocol(command.protocol);
            const auto n = config.n_pas;
            const auto w = make_activation(protocol, n);
            const IntMatrix gram = gram_crosstalk(w);

            IntMatrix expected;
            std::string identity;
            switch (protocol)
            {
            case Protocol::Serial:
                expected = IntMatrix::Identity(w.size(), w.size());
                identity = "W^T W = I";
                break;
            case Protocol::HadamardIdeal:
                expected = static_cast<long long>(n) * IntMatrix::Identity(w.size(), w.size());
                identity = "H^T H = N I";
                break;
            case Protocol::SMatrix:
                expected = s_matrix_gram_expansion(n);
                identity = "4 S^T S = N I + H J + J H + N J";
                break;
            }
            const IntMatrix lhs = protocol == Protocol::SMatrix ? IntMatrix(4LL * gram) : gram;
            const bool ok = lhs == expected;

            out << fmt::format("protocol {} N={}\n\nW =\n", to_string(protocol), n);
            print_matrix(out, w.entries());
            out << "\nW^T W =\n";
            print_matrix(out, gram);
            if (protocol == Protocol::SMatrix)
            {
                out << "\nN I + H J + J H + N J =\n";
                print_matrix(out, expected);
            }
            out << fmt::format("\n{}: {}\n", identity, ok ? "PASS" : "FAIL");

            std::ofstream csv;
            const auto path = open_output(command, "csv", csv);
            csv << fmt::format("# protocol: {}\n# N: {}\n# identity: {} {}\n# matrix: W\n", to_string(protocol), n,
                               identity, ok ? "pass" : "fail");
            write_matrix_csv(csv, w.entries());
            csv << "# matrix: gram\n";
            write_matrix_csv(csv, gram);
            if (command.verbosity > 0)
                out << "wrote " << path.string() << '\n';
            return ok ? kExitOk : kExitSelfcheckFailed;
        }

        int run_selfcheck_command(const CommandSpec &command, const ExperimentConfig &config, std::ostream &out)
        {
            const auto checks = run_selfcheck(config);
            std::ofstream csv;
            const auto path = open_output(command, "csv", csv);
            csv << "check,passed,detail\n";
            bool all = true;
            for (const auto &c : checks)
            {
                all = all && c.passed;
                out << fmt::format("[{}] {:<42} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
                csv << c.name << ',' << (c.passed ? 1 : 0) << ',' << csv_quote(c.detail) << '\n';
            }
            out << fmt::format("{} of {} checks passed\n",
                               std::count_if(checks.begin(), checks.end(), [](const auto &c) { return c.passed; }),
                               checks.size());
            if (command.verbosity > 0)
                out << "wrote " << path.string() << '\n';
            return all ? kExitOk : kExitSelfcheckFailed;
        }
    } // namespace

    std::optional<CommandSpec> parse_command_line(int argc, const char *const *argv, std::ostream &out,
                                                  std::ostream &err, int &exit_code)
    {
        CLI::App app{"Pilot-based channel estimation simulator for pinching-antenna waveguides", "pinch-est"};
        app.require_subcommand(1, 1);

        CommandSpec spec;
        std::string config_path, out_dir = ".";
        std::uint64_t seed = 0;
        unsigned workers = 1;
        const char *protocols[] = {"serial", "smatrix", "hadamard-ideal"};

        for (const char *name : kSubcommands)
        {
            auto *sub = app.add_subcommand(name);
            sub->add_option("--config", config_path, "key=value or JSON config file")->check(CLI::ExistingFile);
            sub->add_option("--out", out_dir, "output directory");
            sub->add_option("--set", spec.overrides, "override KEY=VALUE (repeatable, last wins)")
                ->allow_extra_args(false);
            sub->add_option("--seed", seed, "master seed (falls back to PINCH_EST_SEED)");
            sub->add_option("--workers", workers, "worker threads, 0 = hardware concurrency");
            sub->add_flag("--svg", spec.svg, "also write an SVG plot");
            sub->add_flag("-v,--verbose", "verbose output");
            if (std::string_view(name) == "gram-report")
                sub->add_option("--protocol", spec.protocol, "activation protocol")
                    ->check(CLI::IsMember(std::vector<std::string>(std::begin(protocols), std::end(protocols))));
        }

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            exit_code = kExitOk;
            return std::nullopt;
        }
        catch (const CLI::ParseError &e)
        {
            err << "pinch-est: " << e.what() << "\nRun with --help for usage.\n";
            exit_code = kExitConfigError;
            return std::nullopt;
        }

        auto *sub = app.get_subcommands().front();
        spec.subcommand = sub->get_name();
        if (!config_path.empty())
            spec.config_path = config_path;
        spec.output_dir = out_dir;
        spec.verbosity = static_cast<int>(sub->count("--verbose"));
        if (sub->count("--seed") > 0)
            spec.seed = seed;
        spec.workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
        exit_code = kExitOk;
        return spec;
    }

    int run(const CommandSpec &command, std::ostream &out, std::ostream &err)
    {
        ExperimentConfig config;
        try
        {
            config = build_config(command);
        }
        catch (const ConfigError &e)
        {
            return report_config_error(e, err);
        }

        try
        {
            std::filesystem::create_directories(command.output_dir);
            if (command.verbosity > 0)
                out << fmt::format("config {:016x}, seed {}, workers {}\n", config.hash(), config.seed,
                                   command.workers);
            if (command.subcommand == "gram-report")
                return run_gram_report(command, config, out);
            if (command.subcommand == "selfcheck")
                return run_selfcheck_command(command, config, out);
            return run_sweep(command, config, out, err);
        }
        catch (const ConfigError &e)
        {
            return report_config_error(e, err);
        }
        catch (const std::exception &e)
        {
            err << "pinch-est: " << command.subcommand << ": " << e.what() << '\n';
            return kExitFailure;
        }
    }

    int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        int code = kExitOk;
        const auto spec = parse_command_line(argc, argv, out, err, code);
        if (!spec)
            return code;
        return run(*spec, out, err);
    }
} // namespace pinch::cli
