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

#ifndef PINCH_CONFIG_HPP
#define PINCH_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pinch/activation.hpp"

namespace pinch
{
    /// Bad configuration input. Carries the offending key and, for text files, the line.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &what, std::string key = {}, int line = 0);

        const std::string &key() const noexcept { return key_; }
        int line() const noexcept { return line_; }

    private:
        std::string key_;
        int line_;
    };

    /*!
     * Every knob of the figure sweeps. Keys use dotted names, e.g.
     * `waveguide.spacing`; top-level keys are `N`, `carrier_hz`, `epsilon`,
     * `gamma`, `eta`, `beta`, `serial_alpha`, `beta_grid`, `snr_grid`,
     * `snr_db`, `trials`, `seed`, `protocols`.
     *
     * Lists accept `a,b,c` or a `start:step:stop` range (inclusive).
     */
    struct ExperimentConfig
    {
        std::size_t n_pas = 16;
        double carrier_hz = 60e9;
        double epsilon = 0.1; ///< [Np/m]
        double gamma = 0.5;
        double eta = 0.9;
        double beta = 0.9;         ///< uniform pass-through of the parallel models
        double serial_alpha = 1.0; ///< coupling of a PA that is active on its own
        std::vector<double> beta_grid{0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 0.99, 0.999};
        std::vector<double> snr_grid_db{0, 5, 10, 15, 20, 25, 30};
        double snr_db = 20.0; ///< fixed SNR of the beta sweep
        std::size_t trials = 1000;
        std::uint64_t seed = 1;
        std::vector<Protocol> protocols{Protocol::Serial, Protocol::SMatrix, Protocol::HadamardIdeal};

        // waveguide.*
        double effective_index = 1.4;
        double pa_spacing = 0.5;
        double first_offset = 0.5;
        std::vector<double> pa_positions; ///< overrides spacing/offset when non-empty

        // region.*
        double region_x = 10.0;
        double region_y = 6.0;
        double height = 3.0;
        std::optional<double> waveguide_y; ///< default: region_y / 2

        // scatterers.*, visibility.*, channel.*
        std::size_t scatterer_count = 4;
        double scatterer_variance = 1.0;
        double block_probability = 0.0;
        std::optional<double> path_loss_ref; ///< default: (lambda / 4 pi)^2

        // power.*, downlink.*, estimation.*
        double p_ue = 1.0;
        double p_total = 1.0;
        std::size_t probed_components = 8; ///< G
        double relative_cutoff = 0.0;

        double wavelength() const;
        double beta0() const;
        bool has_protocol(Protocol p) const;

        /// Sets one key from its textual value. Throws ConfigError for unknown keys or bad values.
        void set(std::string_view key, std::string_view value);

        /// Checks cross-field invariants. Throws ConfigError.
        void validate() const;

        /// Stable `key = value` lines covering every field, sorted by key.
        std::string canonical_text() const;

        /// FNV-1a 64 of canonical_text().
        std::uint64_t hash() const;

        static const std::vector<std::string> &known_keys();
    };

    /// Parses a flat `key = value` document (# comments allowed).
    void apply_key_value_text(ExperimentConfig &config, std::string_view text);

    /// Parses a JSON object; nested objects map to dotted keys.
    void apply_json_text(ExperimentConfig &config, std::string_view text);

    /// Applies a file on top of `config`, choosing JSON when the first non-blank character is '{'.
    void apply_config_file(ExperimentConfig &config, const std::filesystem::path &path);

    /// Reads a file, choosing JSON when the first non-blank character is '{'.
    ExperimentConfig load_config_file(const std::filesystem::path &path);

    /// Applies `key=value` overrides in order (last wins).
    void apply_overrides(ExperimentConfig &config, const std::vector<std::string> &overrides);
} // namespace pinch

#endif
