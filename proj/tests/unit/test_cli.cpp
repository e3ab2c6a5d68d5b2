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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pinch/cli.hpp"
#include "pinch/experiments.hpp"
#include "pinch/result_io.hpp"

namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    Outcome invoke(std::vector<std::string> args)
    {
        args.insert(args.begin(), "pinch-est");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = pinch::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path scratch(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("pinch_cli_" + name);
        fs::remove_all(dir);
        return dir;
    }
} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("uplink sweep twice gives byte-identical csv")
    {
        const auto a = scratch("a"), b = scratch("b");
        const std::vector<std::string> common{"--set", "N=4", "--set", "trials=100", "--seed", "7"};
        auto args = common;
        args.insert(args.begin(), "uplink-snr");
        args.insert(args.end(), {"--out", a.string()});
        REQUIRE(invoke(args).code == 0);
        args.back() = b.string();
        args.push_back("--workers");
        args.push_back("3");
        REQUIRE(invoke(args).code == 0);
        const auto text = slurp(a / "uplink-snr.csv");
        CHECK(!text.empty());
        CHECK(text == slurp(b / "uplink-snr.csv"));
        CHECK(text.find("# seed: 7\n") != std::string::npos);
    }

    TEST_CASE("cli output equals the library call")
    {
        const auto dir = scratch("lib");
        REQUIRE(invoke({"beta-sweep", "--set", "N=8", "--set", "trials=60", "--set", "seed=3", "--out", dir.string()}).code == 0);
        pinch::ExperimentConfig cfg;
        cfg.n_pas = 8;
        cfg.trials = 60;
        cfg.seed = 3;
        std::ostringstream expected;
        pinch::write_csv(expected, pinch::run_nmse_vs_beta(cfg));
        CHECK(slurp(dir / "beta-sweep.csv") == expected.str());
    }

    TEST_CASE("gram report prints the S-matrix and its Gram")
    {
        const auto dir = scratch("gram");
        const auto r = invoke({"gram-report", "--set", "N=4", "--out", dir.string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("  1 1 1 1\n  1 0 1 0\n  1 1 0 0\n  1 0 0 1\n") != std::string::npos);
        CHECK(r.out.find("  4 2 2 2\n  2 2 1 1\n  2 1 2 1\n  2 1 1 2\n") != std::string::npos);
        CHECK(r.out.find("PASS") != std::string::npos);
        CHECK(fs::exists(dir / "gram-report.csv"));

        const auto h = invoke({"gram-report", "--set", "N=4", "--protocol", "hadamard-ideal", "--out", dir.string()});
        CHECK(h.code == 0);
        CHECK(h.out.find("H^T H = N I: PASS") != std::string::npos);
        CHECK(invoke({"gram-report", "--protocol", "fourier"}).code == 2);
    }

    TEST_CASE("selfcheck passes on defaults")
    {
        const auto dir = scratch("self");
        const auto r = invoke({"selfcheck", "--out", dir.string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(slurp(dir / "selfcheck.csv").rfind("check,passed,detail\n", 0) == 0);
    }

    TEST_CASE("bad configuration exits with code 2 and names the key")
    {
        auto r = invoke({"uplink-snr", "--set", "bogus=1", "--out", scratch("bad").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("bogus") != std::string::npos);

        r = invoke({"uplink-snr", "--set", "N=6", "--out", scratch("bad").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("[key N]") != std::string::npos);

        const auto dir = scratch("badfile");
        fs::create_directories(dir);
        std::ofstream(dir / "c.cfg") << "N = 8\ntrials = many\n";
        r = invoke({"uplink-snr", "--config", (dir / "c.cfg").string(), "--out", dir.string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("[line 2]") != std::string::npos);
        CHECK(r.err.find("[key trials]") != std::string::npos);

        CHECK(invoke({}).code == 2);
        CHECK(invoke({"fig-2"}).code == 2);
        CHECK(invoke({"uplink-snr", "--config", "/nonexistent/x.cfg"}).code == 2);
    }

    TEST_CASE("help exits cleanly")
    {
        const auto r = invoke({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("uplink-snr") != std::string::npos);
    }

    TEST_CASE("svg and config file")
    {
        const auto dir = scratch("svg");
        fs::create_directories(dir);
        std::ofstream(dir / "c.json") << R"({"N": 4, "trials": 20, "snr_grid": "0:15:30"})";
        const auto r = invoke({"downlink-snr", "--config", (dir / "c.json").string(), "--set", "downlink.G=2", "--svg",
                               "--out", dir.string(), "-v"});
        CHECK(r.code == 0);
        CHECK(fs::exists(dir / "downlink-snr.svg"));
        CHECK(slurp(dir / "downlink-snr.csv").find("# config: downlink.G = 2\n") != std::string::npos);
        CHECK(r.out.find("wrote") != std::string::npos);
    }

    TEST_CASE("seed falls back to the environment")
    {
        const auto a = scratch("env");
        ::setenv("PINCH_EST_SEED", "12345", 1);
        REQUIRE(invoke({"power-profile", "--set", "N=4", "--out", a.string()}).code == 0);
        CHECK(slurp(a / "power-profile.csv").find("# seed: 12345\n") != std::string::npos);
        REQUIRE(invoke({"power-profile", "--set", "N=4", "--seed", "8", "--out", a.string()}).code == 0);
        CHECK(slurp(a / "power-profile.csv").find("# seed: 8\n") != std::string::npos);
        ::setenv("PINCH_EST_SEED", "not-a-number", 1);
        CHECK(invoke({"power-profile", "--out", a.string()}).code == 2);
        ::unsetenv("PINCH_EST_SEED");
    }

    TEST_CASE("unreliable points produce warnings but exit 0")
    {
        const auto dir = scratch("warn");
        const auto r = invoke({"beta-sweep", "--set", "N=4", "--set", "trials=20", "--set", "beta_grid=0,0.9", "--out", dir.string()});
        CHECK(r.code == 0);
        CHECK(r.err.find("warning: parallel_proportional at beta=0") != std::string::npos);
    }
}
