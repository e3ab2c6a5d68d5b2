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

#ifndef PINCH_EXPERIMENTS_HPP
#define PINCH_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pinch/activation.hpp"
#include "pinch/config.hpp"
#include "pinch/estimation.hpp"
#include "pinch/rng.hpp"
#include "pinch/waveguide.hpp"
#include "pinch/wireless_channel.hpp"

namespace pinch
{
    enum class Direction
    {
        Uplink,
        Downlink
    };

    enum class RadiationModel
    {
        Proportional, ///< passive coupling, per-PA power decays along the guide
        EqualPower    ///< captured energy redistributed uniformly over the PAs
    };

    /// One NMSE curve of the figure sweeps. The numeric value selects the noise stream.
    enum class Curve : std::uint8_t
    {
        IdealSerial = 0,
        IdealParallel = 1,
        PracticalSerial = 2,
        ParallelProportional = 3,
        ParallelEqualPower = 4,
        DownlinkSerial = 5,
        DownlinkParallel = 6
    };

    std::string_view curve_name(Curve curve) noexcept;
    Protocol curve_protocol(Curve curve) noexcept;

    /// NMSE value written when every trial of a point was excluded.
    inline constexpr double kUnavailableDb = 300.0;

    /// Share of excluded trials above which a sweep point is flagged unreliable.
    inline constexpr double kUnreliableExclusionRate = 0.01;

    WaveguideLayout make_layout(const ExperimentConfig &config);

    /// Random UE / scatterer / blockage geometry of one trial, and the channel it induces.
    struct ChannelModel
    {
        DeploymentRegion region;
        std::size_t scatterer_count = 4;
        double scatterer_variance = 1.0;
        double block_probability = 0.0;
        double path_loss_ref = 0.0;
        double wavelength = 0.0;

        static ChannelModel from_config(const ExperimentConfig &config);

        /// UE uniform in the region, scatterers uniform in the region at heights
        /// uniform in [0, height], Bernoulli blockage, then h via sample_channel.
        ComplexVector draw(Engine &engine) const;
    };

    /*!
     * Everything one Monte Carlo NMSE point needs: the observation matrix
     * (already scaled by the square root of the pilot power), the noise level
     * and the channel generator.
     */
    struct EstimationScenario
    {
        Curve curve = Curve::PracticalSerial;
        Direction direction = Direction::Uplink;
        Protocol protocol = Protocol::Serial;
        RadiationModel radiation = RadiationModel::Proportional;
        ComplexVector transfer;
        double pilot_power = 1.0;
        double noise_variance = 1.0;
        double snr_db = 0.0;
        LsOptions ls;
        ObservationMatrix observation;
        ChannelModel channel;
    };

    /// Builds the scenario of `curve` at transmit SNR `snr_db` and uniform pass-through `beta`.
    EstimationScenario make_scenario(const ExperimentConfig &config, Curve curve, double snr_db, double beta);

    struct NmseEstimate
    {
        double mean = 0.0;           ///< linear NMSE over the included trials
        double standard_error = 0.0; ///< linear
        std::size_t trials = 0;
        std::size_t excluded = 0;

        double exclusion_rate() const noexcept
        {
            return trials ? static_cast<double>(excluded) / static_cast<double>(trials) : 0.0;
        }
        bool reliable() const noexcept { return exclusion_rate() <= kUnreliableExclusionRate; }
        double mean_db() const;
        double standard_error_db() const;
    };

    /*!
     * Mean NMSE over `trials` draws of channel and noise.
     *
     * Trial t uses the streams derive_seed(seed, point_index, t, 0) for the
     * channel and derive_seed(seed, point_index, t, 1 + curve) for the noise
     * (downlink parallel reuses the downlink serial noise stream),
     * so the result is bit-identical for any `workers` count. Trials with a
     * zero channel or a singular system are excluded and counted.
     */
    NmseEstimate monte_carlo_nmse(const EstimationScenario &scenario, std::size_t trials, std::uint64_t seed,
                                  std::uint64_t point_index = 0, unsigned workers = 1);

    struct Series
    {
        std::string name;
        std::vector<double> values;          ///< dB
        std::vector<double> standard_errors; ///< dB, empty for deterministic series
        std::vector<double> exclusion_rates; ///< empty for deterministic series
        std::vector<double> condition_numbers; ///< kappa(A) per point, empty when not applicable
    };

    struct ExperimentResult
    {
        std::string experiment;
        std::string axis_name;
        std::string value_name; ///< "nmse_db" or "power_db"
        std::vector<double> axis;
        std::vector<Series> series;
        std::size_t trials = 0; ///< 0 for deterministic experiments
        std::uint64_t seed = 0;
        std::uint64_t config_hash = 0;
        std::string config_echo;

        const Series &at(std::string_view name) const;
        bool has(std::string_view name) const;
    };

    /// Ideal serial/parallel and practical serial / proportional / equal-power NMSE vs SNR.
    ExperimentResult run_uplink_nmse_vs_snr(const ExperimentConfig &config, unsigned workers = 1);

    /// Practical uplink NMSE vs beta at config.snr_db. Every beta reuses the same draws.
    ExperimentResult run_nmse_vs_beta(const ExperimentConfig &config, unsigned workers = 1);

    /// Per-PA captured power in dB relative to the ideal full-coupling level.
    ExperimentResult run_power_profile(const ExperimentConfig &config);

    /// Downlink serial (full P_Total) vs parallel (P_Total / G), with uplink serial for reference.
    ExperimentResult run_downlink_nmse_vs_snr(const ExperimentConfig &config, unsigned workers = 1);

    /// Dispatch by subcommand name: uplink-snr, beta-sweep, power-profile, downlink-snr.
    ExperimentResult run_experiment(std::string_view name, const ExperimentConfig &config, unsigned workers = 1);
} // namespace pinch

#endif
