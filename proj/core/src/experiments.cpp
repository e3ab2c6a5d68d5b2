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

#include "pinch/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        // Work items are claimed dynamically but every result lands in its own
        // slot, so the caller's ordered reduction is independent of `workers`.
        template <typename Fn>
        void parallel_for(std::size_t count, unsigned workers, Fn &&fn)
        {
            const std::size_t n_threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
            if (n_threads == 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    fn(i);
                return;
            }

            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            {
                std::vector<std::jthread> pool;
                pool.reserve(n_threads);
                for (std::size_t w = 0; w < n_threads; ++w)
                    pool.emplace_back([&]
                                      {
                        for (std::size_t i = next++; i < count; i = next++)
                        {
                            try
                            {
                                fn(i);
                            }
                            catch (...)
                            {
                                std::lock_guard lock(failure_mutex);
                                if (!failure)
                                    failure = std::current_exception();
                                next = count;
                            }
                        } });
            }
            if (failure)
                std::rethrow_exception(failure);
        }

        // Neumaier-compensated sum in index order.
        struct CompensatedSum
        {
            double sum = 0.0;
            double carry = 0.0;

            void add(double x)
            {
                const double t = sum + x;
                if (std::abs(sum) >= std::abs(x))
                    carry += (sum - t) + x;
                else
                    carry += (x - t) + sum;
                sum = t;
            }
            double value() const { return sum + carry; }
        };

        std::vector<Curve> filter(const ExperimentConfig &config, std::initializer_list<Curve> curves)
        {
            std::vector<Curve> out;
            for (Curve c : curves)
                if (config.has_protocol(curve_protocol(c)))
                    out.push_back(c);
            return out;
        }

        ExperimentResult make_result(const ExperimentConfig &config, std::string experiment, std::string axis_name,
                                     std::vector<double> axis, std::size_t trials)
        {
            ExperimentResult r;
            r.experiment = std::move(experiment);
            r.axis_name = std::move(axis_name);
            r.value_name = trials ? "nmse_db" : "power_db";
            r.axis = std::move(axis);
            r.trials = trials;
            r.seed = config.seed;
            r.config_hash = config.hash();
            r.config_echo = config.canonical_text();
            return r;
        }

        void append_point(Series &series, const EstimationScenario &scenario, const NmseEstimate &estimate)
        {
            series.values.push_back(estimate.mean_db());
            series.standard_errors.push_back(estimate.standard_error_db());
            series.exclusion_rates.push_back(estimate.exclusion_rate());
            series.condition_numbers.push_back(condition_number(scenario.observation).value);
        }

        double validated_snr_noise(double snr_db, double reference_power)
        {
            return NoiseSpec::from_transmit_snr_db(snr_db, reference_power).variance;
        }
    } // namespace

    std::string_view curve_name(Curve curve) noexcept
    {
        switch (curve)
        {
        case Curve::IdealSerial:
            return "ideal_serial";
        case Curve::IdealParallel:
            return "ideal_parallel";
        case Curve::PracticalSerial:
            return "practical_serial";
        case Curve::ParallelProportional:
            return "parallel_proportional";
        case Curve::ParallelEqualPower:
            return "parallel_equal_power";
        case Curve::DownlinkSerial:
            return "downlink_serial";
        case Curve::DownlinkParallel:
            return "downlink_parallel";
        }
        return "unknown";
    }

    Protocol curve_protocol(Curve curve) noexcept
    {
        switch (curve)
        {
        case Curve::IdealParallel:
            return Protocol::HadamardIdeal;
        case Curve::ParallelProportional:
        case Curve::ParallelEqualPower:
        case Curve::DownlinkParallel:
            return Protocol::SMatrix;
        default:
            return Protocol::Serial;
        }
    }

    WaveguideLayout make_layout(const ExperimentConfig &config)
    {
        if (config.pa_positions.empty())
            return WaveguideLayout::uniform(config.n_pas, config.pa_spacing, config.first_offset, config.wavelength(),
                                            config.effective_index, config.epsilon);
        WaveguideLayout layout;
        layout.feed_position = 0.0;
        layout.pa_positions = config.pa_positions;
        layout.carrier_wavelength = config.wavelength();
        layout.guided_wavelength = config.wavelength() / config.effective_index;
        layout.attenuation = config.epsilon;
        layout.validate();
        return layout;
    }

    // ---- ChannelModel -------------------------------------------------------

    ChannelModel ChannelModel::from_config(const ExperimentConfig &config)
    {
        ChannelModel m;
        m.region = DeploymentRegion::from_layout(make_layout(config), config.region_x, config.region_y, config.height,
                                                 config.waveguide_y.value_or(0.5 * config.region_y));
        m.scatterer_count = config.scatterer_count;
        m.scatterer_variance = config.scatterer_variance;
        m.block_probability = config.block_probability;
        m.path_loss_ref = config.beta0();
        m.wavelength = config.wavelength();
        return m;
    }

    ComplexVector ChannelModel::draw(Engine &engine) const
    {
        UePlacement ue;
        ue.position = {uniform(engine, 0.0, region.width_x), uniform(engine, 0.0, region.width_y), 0.0};

        ScattererSet scatterers;
        scatterers.gain_variance = scatterer_variance;
        scatterers.path_loss_ref = path_loss_ref;
        scatterers.wavelength = wavelength;
        scatterers.positions.reserve(scatterer_count);
        for (std::size_t s = 0; s < scatterer_count; ++s)
            scatterers.positions.emplace_back(uniform(engine, 0.0, region.width_x), uniform(engine, 0.0, region.width_y),
                                              uniform(engine, 0.0, region.height));

        VisibilityVector visibility(region.size(), 1);
        if (block_probability > 0.0)
        {
            std::bernoulli_distribution blocked(block_probability);
            for (auto &v : visibility)
                v = blocked(engine) ? 0 : 1;
        }

        const std::uint64_t gain_seed = engine();
        return sample_channel(region, ue, std::move(scatterers), visibility, gain_seed);
    }

    // ---- scenarios ------------------------------------------------------------

    EstimationScenario make_scenario(const ExperimentConfig &config, Curve curve, double snr_db, double beta)
    {
        const auto layout = make_layout(config);
        const std::size_t n = config.n_pas;
        const auto coupling_of = [&](double alpha)
        { return CouplingSpec::uniform_from_alpha(n, alpha, config.gamma, config.eta); };
        const auto leaky = [&]
        { return CouplingSpec::uniform_from_beta(n, beta, config.gamma, config.eta); };

        Direction direction = Direction::Uplink;
        RadiationModel radiation = RadiationModel::Proportional;
        ComplexVector g;
        ActivationMatrix w = serial_activation(n);
        double pilot_power = config.p_ue;
        double reference_power = config.p_ue;

        switch (curve)
        {
        case Curve::IdealSerial:
            g = ideal_inwaveguide(layout, coupling_of(1.0));
            break;
        case Curve::IdealParallel:
            g = ideal_inwaveguide(layout, coupling_of(1.0));
            w = hadamard(n);
            break;
        case Curve::PracticalSerial:
            g = serial_inwaveguide(layout, coupling_of(config.serial_alpha));
            break;
        case Curve::ParallelProportional:
            g = parallel_inwaveguide(layout, leaky());
            w = s_matrix(n);
            break;
        case Curve::ParallelEqualPower:
            g = equalize_radiation(parallel_inwaveguide(layout, leaky()));
            w = s_matrix(n);
            radiation = RadiationModel::EqualPower;
            break;
        case Curve::DownlinkSerial:
        case Curve::DownlinkParallel:
            // Each probed component keeps the single-PA path; parallel probing
            // splits P_Total over G simultaneous components.
            direction = Direction::Downlink;
            g = downlink_serial_inwaveguide(layout, coupling_of(config.serial_alpha));
            reference_power = config.p_total;
            pilot_power = curve == Curve::DownlinkSerial
                              ? config.p_total
                              : config.p_total / static_cast<double>(config.probed_components);
            break;
        }

        auto observation = observation_matrix(w, g, std::sqrt(pilot_power));
        return EstimationScenario{curve,
                                  direction,
                                  curve_protocol(curve),
                                  radiation,
                                  std::move(g),
                                  pilot_power,
                                  validated_snr_noise(snr_db, reference_power),
                                  snr_db,
                                  LsOptions{config.relative_cutoff},
                                  std::move(observation),
                                  ChannelModel::from_config(config)};
    }

    // ---- Monte Carlo ----------------------------------------------------------

    double NmseEstimate::mean_db() const
    {
        if (excluded == trials || !std::isfinite(mean))
            return kUnavailableDb;
        return power_db(mean);
    }

    double NmseEstimate::standard_error_db() const
    {
        if (excluded == trials || !(mean > 0.0))
            return 0.0;
        return 10.0 / std::numbers::ln10 * standard_error / mean;
    }

    NmseEstimate monte_carlo_nmse(const EstimationScenario &scenario, std::size_t trials, std::uint64_t seed,
                                  std::uint64_t point_index, unsigned workers)
    {
        if (trials < 1)
            throw ContractError("Monte Carlo needs at least one trial");

        NmseEstimate out;
        out.trials = trials;

        const auto &a = scenario.observation;
        const double noise = scenario.noise_variance;
        // The two downlink curves share noise draws; they differ only in pilot power.
        const Curve noise_curve = scenario.curve == Curve::DownlinkParallel ? Curve::DownlinkSerial : scenario.curve;
        const auto stream = 1 + static_cast<std::uint64_t>(noise_curve);
        const double nan = std::numeric_limits<double>::quiet_NaN();

        std::vector<double> per_trial(trials, nan);
        parallel_for(trials, workers, [&](std::size_t t)
                     {
            auto channel_engine = make_engine(derive_seed(seed, point_index, t, 0));
            const ComplexVector h = scenario.channel.draw(channel_engine);
            if (!(h.squaredNorm() > 0.0))
                return;

            auto noise_engine = make_engine(derive_seed(seed, point_index, t, stream));
            const ComplexVector y = a.matrix() * h + complex_gaussian_vector(noise_engine, h.size(), noise);
            try
            {
                per_trial[t] = nmse(ls_estimate(a, y, scenario.ls), h);
            }
            catch (const SingularSystemError &)
            {
            } });

        CompensatedSum sum;
        std::size_t used = 0;
        for (double v : per_trial)
            if (std::isfinite(v))
            {
                sum.add(v);
                ++used;
            }
        out.excluded = trials - used;
        if (used == 0)
        {
            out.mean = nan;
            return out;
        }
        out.mean = sum.value() / static_cast<double>(used);

        CompensatedSum squares;
        for (double v : per_trial)
            if (std::isfinite(v))
                squares.add((v - out.mean) * (v - out.mean));
        if (used > 1)
            out.standard_error = std::sqrt(squares.value() / static_cast<double>(used - 1) / static_cast<double>(used));
        return out;
    }

    // ---- results --------------------------------------------------------------

    const Series &ExperimentResult::at(std::string_view name) const
    {
        for (const auto &s : series)
            if (s.name == name)
                return s;
        throw ContractError(fmt::format("experiment '{}' has no series '{}'", experiment, name));
    }

    bool ExperimentResult::has(std::string_view name) const
    {
        return std::any_of(series.begin(), series.end(), [&](const Series &s)
                           { return s.name == name; });
    }

    // ---- sweeps ---------------------------------------------------------------

    ExperimentResult run_uplink_nmse_vs_snr(const ExperimentConfig &config, unsigned workers)
    {
        config.validate();
        auto result = make_result(config, "uplink-snr", "snr_db", config.snr_grid_db, config.trials);
        for (Curve curve : filter(config, {Curve::IdealSerial, Curve::IdealParallel, Curve::PracticalSerial,
                                           Curve::ParallelProportional, Curve::ParallelEqualPower}))
        {
            Series s{std::string(curve_name(curve)), {}, {}, {}, {}};
            for (std::size_t p = 0; p < config.snr_grid_db.size(); ++p)
            {
                const auto scenario = make_scenario(config, curve, config.snr_grid_db[p], config.beta);
                append_point(s, scenario, monte_carlo_nmse(scenario, config.trials, config.seed, p, workers));
            }
            result.series.push_back(std::move(s));
        }
        return result;
    }

    ExperimentResult run_nmse_vs_beta(const ExperimentConfig &config, unsigned workers)
    {
        config.validate();
        auto result = make_result(config, "beta-sweep", "beta", config.beta_grid, config.trials);
        for (Curve curve : filter(config, {Curve::PracticalSerial, Curve::ParallelProportional, Curve::ParallelEqualPower}))
        {
            Series s{std::string(curve_name(curve)), {}, {}, {}, {}};
            for (double beta : config.beta_grid)
            {
                const auto scenario = make_scenario(config, curve, config.snr_db, beta);
                append_point(s, scenario, monte_carlo_nmse(scenario, config.trials, config.seed, 0, workers));
            }
            result.series.push_back(std::move(s));
        }
        return result;
    }

    ExperimentResult run_power_profile(const ExperimentConfig &config)
    {
        config.validate();
        const auto layout = make_layout(config);
        const std::size_t n = config.n_pas;

        std::vector<double> index(n);
        for (std::size_t i = 0; i < n; ++i)
            index[i] = static_cast<double>(i + 1);
        auto result = make_result(config, "power-profile", "pa_index", std::move(index), 0);

        const auto full = CouplingSpec::uniform_from_alpha(n, 1.0, config.gamma, config.eta);
        const auto single = CouplingSpec::uniform_from_alpha(n, config.serial_alpha, config.gamma, config.eta);
        const auto leaky = CouplingSpec::uniform_from_beta(n, config.beta, config.gamma, config.eta);
        const ComplexVector proportional = parallel_inwaveguide(layout, leaky);

        // Each PA is referenced to the ideal lossless, fully coupled PA at the same position.
        const ComplexVector ideal = ideal_inwaveguide(layout, full);
        auto add = [&](std::string name, const ComplexVector &g)
        {
            std::vector<double> db(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto k = static_cast<Eigen::Index>(i);
                db[i] = pa_power_profile(g.segment(k, 1), std::norm(ideal(k))).front();
            }
            result.series.push_back(Series{std::move(name), std::move(db), {}, {}, {}});
        };
        add("ideal", ideal);
        add("serial", serial_inwaveguide(layout, single));
        add("proportional", proportional);
        add("equal_power", equalize_radiation(proportional));
        return result;
    }

    ExperimentResult run_downlink_nmse_vs_snr(const ExperimentConfig &config, unsigned workers)
    {
        config.validate();
        if (config.probed_components > config.n_pas)
            throw ConfigError(fmt::format("downlink.G: must lie in [1, N = {}]", config.n_pas), "downlink.G");
        auto result = make_result(config, "downlink-snr", "snr_db", config.snr_grid_db, config.trials);
        for (Curve curve : filter(config, {Curve::DownlinkSerial, Curve::DownlinkParallel, Curve::PracticalSerial}))
        {
            std::string name = curve == Curve::PracticalSerial ? "uplink_serial" : std::string(curve_name(curve));
            Series s{std::move(name), {}, {}, {}, {}};
            for (std::size_t p = 0; p < config.snr_grid_db.size(); ++p)
            {
                const auto scenario = make_scenario(config, curve, config.snr_grid_db[p], config.beta);
                append_point(s, scenario, monte_carlo_nmse(scenario, config.trials, config.seed, p, workers));
            }
            result.series.push_back(std::move(s));
        }
        return result;
    }

    ExperimentResult run_experiment(std::string_view name, const ExperimentConfig &config, unsigned workers)
    {
        if (name == "uplink-snr")
            return run_uplink_nmse_vs_snr(config, workers);
        if (name == "beta-sweep")
            return run_nmse_vs_beta(config, workers);
        if (name == "power-profile")
            return run_power_profile(config);
        if (name == "downlink-snr")
            return run_downlink_nmse_vs_snr(config, workers);
        throw ContractError(fmt::format("unknown experiment '{}'", name));
    }
} // namespace pinch
