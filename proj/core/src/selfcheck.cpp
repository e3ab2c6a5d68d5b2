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

#include "pinch/selfcheck.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "pinch/experiments.hpp"

namespace pinch
{
    namespace
    {
        double relative_error(double got, double want)
        {
            return std::abs(got - want) / std::abs(want);
        }

        CheckResult guarded(std::string name, const std::function<CheckResult()> &body)
        {
            try
            {
                auto r = body();
                r.name = std::move(name);
                return r;
            }
            catch (const std::exception &e)
            {
                return {std::move(name), false, fmt::format("threw: {}", e.what())};
            }
        }

        CheckResult hadamard_orthogonality()
        {
            for (std::size_t n = 1; n <= 32; n *= 2)
            {
                const auto h = hadamard(n);
                const auto m = static_cast<Eigen::Index>(n);
                if (gram_crosstalk(h) != static_cast<long long>(n) * IntMatrix::Identity(m, m))
                    return {{}, false, fmt::format("H^T H != N I at N = {}", n)};
            }
            return {{}, true, "H^T H = N I for N = 1..32"};
        }

        CheckResult smatrix_gram()
        {
            for (std::size_t n = 2; n <= 32; n *= 2)
                if (4LL * gram_crosstalk(s_matrix(n)) != s_matrix_gram_expansion(n))
                    return {{}, false, fmt::format("4 S^T S != N I + HJ + JH + N J at N = {}", n)};
            return {{}, true, "4 S^T S = N I + HJ + JH + N J for N = 2..32"};
        }

        CheckResult closed_form_vs_monte_carlo(const ExperimentConfig &config)
        {
            const auto scenario = make_scenario(config, Curve::PracticalSerial, 10.0, config.beta);
            auto engine = make_engine(derive_seed(config.seed, 0xC0FFEE, 0, 0));
            const ComplexVector h = scenario.channel.draw(engine);

            constexpr std::size_t draws = 10000;
            double total = 0.0;
            auto noise_engine = make_engine(derive_seed(config.seed, 0xC0FFEE, 0, 1));
            const auto &a = scenario.observation;
            for (std::size_t i = 0; i < draws; ++i)
            {
                const ComplexVector y = a.matrix() * h + complex_gaussian_vector(noise_engine, h.size(), scenario.noise_variance);
                total += (ls_estimate(a, y) - h).squaredNorm();
            }
            const double empirical = total / static_cast<double>(draws);
            const double predicted = mse_closed_form(a, scenario.noise_variance);
            const double err = relative_error(empirical, predicted);
            return {{}, err < 0.05, fmt::format("empirical {:.6g} vs closed form {:.6g} (rel err {:.3g})", empirical, predicted, err)};
        }

        CheckResult parallel_conditioning(const ExperimentConfig &config)
        {
            double worst = 0.0;
            for (std::size_t n : {4u, 8u, 16u})
                for (double beta : {0.5, 0.9})
                {
                    auto layout = WaveguideLayout::uniform(n, config.pa_spacing, config.first_offset, config.wavelength(),
                                                           config.effective_index, 0.0);
                    const auto g = parallel_inwaveguide(layout, CouplingSpec::uniform_from_beta(n, beta, config.gamma, config.eta));
                    const auto k = condition_number(ObservationMatrix(ComplexMatrix(g.asDiagonal())));
                    worst = std::max(worst, relative_error(k.value, std::pow(beta, -static_cast<double>(n - 1))));
                }
            return {{}, worst < 1e-12, fmt::format("max rel err of kappa(G) vs beta^-(N-1): {:.3g}", worst)};
        }

        CheckResult condition_bound(const ExperimentConfig &config)
        {
            auto engine = make_engine(derive_seed(config.seed, 0xB0B, 0, 0));
            for (int trial = 0; trial < 100; ++trial)
            {
                const std::size_t n = std::size_t{1} << static_cast<unsigned>(uniform(engine, 1.0, 5.0));
                const double beta = uniform(engine, 0.3, 0.99);
                const double eps = uniform(engine, 0.0, 0.3);
                auto layout = WaveguideLayout::uniform(n, uniform(engine, 0.1, 1.0), 0.5, config.wavelength(),
                                                       uniform(engine, 1.0, 2.0), eps);
                const auto g = parallel_inwaveguide(layout, CouplingSpec::uniform_from_beta(n, beta, config.gamma, config.eta));
                const auto w = s_matrix(n);
                if (!condition_bound_check(observation_matrix(w, g), w, g))
                    return {{}, false, fmt::format("bound violated at N = {}, beta = {}", n, beta)};
            }
            return {{}, true, "kappa(A) >= kappa(G) / kappa(W) on 100 random instances"};
        }

        CheckResult energy_conservation(const ExperimentConfig &config)
        {
            const auto layout = make_layout(config);
            const auto g = parallel_inwaveguide(layout, CouplingSpec::uniform_from_beta(config.n_pas, config.beta, config.gamma, config.eta));
            const auto eq = equalize_radiation(g);
            const double err = relative_error(eq.squaredNorm(), g.squaredNorm());
            return {{}, err < 1e-12, fmt::format("sum |g|^2 proportional {:.12g}, equal-power {:.12g}", g.squaredNorm(), eq.squaredNorm())};
        }

        CheckResult non_reciprocity(const ExperimentConfig &config)
        {
            const auto layout = make_layout(config);
            const auto coupling = CouplingSpec::uniform_from_beta(config.n_pas, config.beta, config.gamma, config.eta);
            const auto up = parallel_inwaveguide(layout, coupling);
            const auto down = downlink_inwaveguide(layout, coupling);
            const double scale = std::sqrt(config.eta / config.gamma);
            const double err = (down - scale * up).cwiseAbs().maxCoeff() / down.cwiseAbs().maxCoeff();
            return {{}, err < 1e-12, fmt::format("g_down = sqrt(eta/gamma) g_up to {:.3g}", err)};
        }

        CheckResult downlink_ratio(const ExperimentConfig &config)
        {
            const auto scenario = make_scenario(config, Curve::DownlinkSerial, 10.0, config.beta);
            auto engine = make_engine(derive_seed(config.seed, 0xD0, 0, 0));
            const ComplexVector h = scenario.channel.draw(engine);
            const std::size_t g_count = config.probed_components;
            double worst = 0.0;
            for (std::size_t n = 1; n <= config.n_pas; ++n)
            {
                const double s = snr_downlink(scenario.transfer, h, scenario.noise_variance, n, config.p_total, DownlinkMode::Serial, g_count);
                const double p = snr_downlink(scenario.transfer, h, scenario.noise_variance, n, config.p_total, DownlinkMode::Parallel, g_count);
                worst = std::max(worst, relative_error(p * static_cast<double>(g_count), s));
            }
            return {{}, worst < 1e-14, fmt::format("SNR_parallel * G vs SNR_serial, max rel err {:.3g}", worst)};
        }

        CheckResult noiseless_recovery(const ExperimentConfig &config)
        {
            const auto scenario = make_scenario(config, Curve::ParallelProportional, 10.0, config.beta);
            auto engine = make_engine(derive_seed(config.seed, 0xAB, 0, 0));
            const ComplexVector h = scenario.channel.draw(engine);
            const double err = std::sqrt(nmse(ls_estimate(scenario.observation, scenario.observation.matrix() * h), h));
            return {{}, err < 1e-10, fmt::format("||h_hat - h|| / ||h|| = {:.3g} without noise", err)};
        }
    } // namespace

    std::vector<CheckResult> run_selfcheck(const ExperimentConfig &config)
    {
        config.validate();
        std::vector<CheckResult> out;
        out.push_back(guarded("hadamard_orthogonality", hadamard_orthogonality));
        out.push_back(guarded("smatrix_gram_expansion", smatrix_gram));
        out.push_back(guarded("serial_mse_closed_form_vs_monte_carlo", [&]
                              { return closed_form_vs_monte_carlo(config); }));
        out.push_back(guarded("parallel_condition_number", [&]
                              { return parallel_conditioning(config); }));
        out.push_back(guarded("condition_bound", [&]
                              { return condition_bound(config); }));
        out.push_back(guarded("equal_power_energy_conservation", [&]
                              { return energy_conservation(config); }));
        out.push_back(guarded("downlink_uplink_non_reciprocity", [&]
                              { return non_reciprocity(config); }));
        out.push_back(guarded("downlink_snr_ratio", [&]
                              { return downlink_ratio(config); }));
        out.push_back(guarded("ls_noiseless_recovery", [&]
                              { return noiseless_recovery(config); }));
        return out;
    }
} // namespace pinch
