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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pinch/config.hpp"

using namespace pinch;

TEST_SUITE("config")
{
    TEST_CASE("defaults")
    {
        const ExperimentConfig c;
        CHECK(c.n_pas == 16);
        CHECK(c.carrier_hz == 60e9);
        CHECK(c.wavelength() == doctest::Approx(299792458.0 / 60e9).epsilon(1e-15));
        CHECK(c.epsilon == 0.1);
        CHECK(c.gamma == 0.5);
        CHECK(c.eta == 0.9);
        CHECK(c.beta == 0.9);
        CHECK(c.trials == 1000);
        CHECK(c.snr_grid_db == std::vector<double>{0, 5, 10, 15, 20, 25, 30});
        CHECK(c.beta_grid.front() == 0.5);
        CHECK(c.beta_grid.back() == 0.999);
        CHECK(c.beta_grid.size() == 12);
        CHECK(c.probed_components == 8);
        CHECK_NOTHROW(c.validate());
    }

    TEST_CASE("key value text with comments, ranges and dotted keys")
    {
        ExperimentConfig c;
        apply_key_value_text(c, "# sweep\nN = 8\nsnr_grid = 0:10:30  # coarse\nwaveguide.spacing=0.25\n\nprotocols = serial, smatrix\n");
        CHECK(c.n_pas == 8);
        CHECK(c.snr_grid_db == std::vector<double>{0, 10, 20, 30});
        CHECK(c.pa_spacing == 0.25);
        CHECK(c.has_protocol(Protocol::Serial));
        CHECK(c.has_protocol(Protocol::SMatrix));
        CHECK_FALSE(c.has_protocol(Protocol::HadamardIdeal));
    }

    TEST_CASE("errors carry key and line")
    {
        ExperimentConfig c;
        try
        {
            apply_key_value_text(c, "N = 8\n\nmystery = 3\n");
            FAIL("expected ConfigError");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.line() == 3);
            CHECK(e.key() == "mystery");
        }
        try
        {
            apply_key_value_text(c, "epsilon = fast\n");
            FAIL("expected ConfigError");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.line() == 1);
            CHECK(e.key() == "epsilon");
        }
        CHECK_THROWS_AS(apply_key_value_text(c, "just words\n"), ConfigError);
        CHECK_THROWS_AS(c.set("snr_grid", "0:-1:10"), ConfigError);
        CHECK_THROWS_AS(c.set("protocols", "serial,fourier"), ConfigError);
    }

    TEST_CASE("validation")
    {
        ExperimentConfig c;
        c.set("N", "12");
        CHECK_THROWS_AS(c.validate(), ConfigError);
        c.set("protocols", "serial");
        CHECK_NOTHROW(c.validate());

        ExperimentConfig bad;
        bad.set("gamma", "1.5");
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        try
        {
            ExperimentConfig e;
            e.set("eta", "1");
            e.validate();
            FAIL("expected ConfigError");
        }
        catch (const ConfigError &err)
        {
            CHECK(err.key() == "eta");
        }
        ExperimentConfig beta;
        beta.set("beta_grid", "0.5,1.0");
        CHECK_THROWS_AS(beta.validate(), ConfigError);
        ExperimentConfig trials;
        trials.set("trials", "0");
        CHECK_THROWS_AS(trials.validate(), ConfigError);
    }

    TEST_CASE("json documents map nested objects to dotted keys")
    {
        ExperimentConfig c;
        apply_json_text(c, R"({"N": 4, "gamma": 0.4, "waveguide": {"n_eff": 1.5}, "snr_grid": [0, 15, 30],
                               "protocols": ["serial", "hadamard-ideal"], "downlink": {"G": 2}})");
        CHECK(c.n_pas == 4);
        CHECK(c.gamma == 0.4);
        CHECK(c.effective_index == 1.5);
        CHECK(c.snr_grid_db == std::vector<double>{0, 15, 30});
        CHECK(c.has_protocol(Protocol::HadamardIdeal));
        CHECK(c.probed_components == 2);

        CHECK_THROWS_AS(apply_json_text(c, R"({"region": {"depth": 2}})"), ConfigError);
        CHECK_THROWS_AS(apply_json_text(c, "{ not json"), ConfigError);
        CHECK_THROWS_AS(apply_json_text(c, "[1, 2]"), ConfigError);
    }

    TEST_CASE("files and overrides")
    {
        const auto dir = std::filesystem::temp_directory_path() / "pinch_config_test";
        std::filesystem::create_directories(dir);
        {
            std::ofstream(dir / "a.cfg") << "N = 8\ntrials = 50\n";
            std::ofstream(dir / "b.json") << "  {\"N\": 4}\n";
        }
        auto c = load_config_file(dir / "a.cfg");
        CHECK(c.n_pas == 8);
        CHECK(c.trials == 50);
        CHECK(load_config_file(dir / "b.json").n_pas == 4);
        CHECK_THROWS_AS(load_config_file(dir / "missing.cfg"), ConfigError);

        apply_overrides(c, {"N=4", "seed=9", "N=2"});
        CHECK(c.n_pas == 2);
        CHECK(c.seed == 9);
        CHECK_THROWS_AS(apply_overrides(c, {"N"}), ConfigError);
        CHECK_THROWS_AS(apply_overrides(c, {"Q=1"}), ConfigError);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("canonical text and hash")
    {
        ExperimentConfig a, b;
        CHECK(a.hash() == b.hash());
        CHECK(a.canonical_text() == b.canonical_text());
        b.set("epsilon", "0.2");
        CHECK(a.hash() != b.hash());
        for (const auto &key : ExperimentConfig::known_keys())
            CHECK(a.canonical_text().find(key + " = ") != std::string::npos);

        // canonical text round-trips through the parser
        ExperimentConfig c;
        apply_key_value_text(c, b.canonical_text());
        CHECK(c.hash() == b.hash());
    }

    TEST_CASE("path loss reference defaults to free space")
    {
        ExperimentConfig c;
        const double r = c.wavelength() / (4.0 * 3.14159265358979323846);
        CHECK(c.beta0() == doctest::Approx(r * r).epsilon(1e-14));
        c.set("channel.beta0", "1e-6");
        CHECK(c.beta0() == 1e-6);
    }
}
