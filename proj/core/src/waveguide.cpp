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

#include "pinch/waveguide.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        void check_gamma_eta(double gamma, double eta)
        {
            if (!(gamma >= 0.0 && gamma <= 1.0))
                throw ContractError("gamma must lie in [0, 1], got " + std::to_string(gamma));
            if (!(eta > 0.0 && eta < 1.0))
                throw ContractError("eta must lie in (0, 1), got " + std::to_string(eta));
        }

        void check_sizes(const WaveguideLayout &layout, const CouplingSpec &coupling)
        {
            layout.validate();
            if (layout.size() != coupling.size())
                throw ContractError(fmt::format("layout has {} PAs but coupling spec has {}",
                                                layout.size(), coupling.size()));
        }

        // exp(-j 2 pi d / lambda_g) scaled by `magnitude`. The integer number of
        // guided wavelengths is removed before the trig call.
        Complex guided_phasor(double magnitude, double distance, double guided_wavelength)
        {
            double cycles = distance / guided_wavelength;
            cycles -= std::floor(cycles);
            return std::polar(magnitude, -2.0 * std::numbers::pi * cycles);
        }

        template <typename Gain>
        ComplexVector build_transfer(const WaveguideLayout &layout, Gain &&gain)
        {
            const auto d = layout.distances();
            ComplexVector g(static_cast<Eigen::Index>(d.size()));
            for (std::size_t n = 0; n < d.size(); ++n)
                g(static_cast<Eigen::Index>(n)) = guided_phasor(gain(n, d[n]), d[n], layout.guided_wavelength);
            return g;
        }
    } // namespace

    // ---- WaveguideLayout --------------------------------------------------------

    std::vector<double> WaveguideLayout::distances() const
    {
        std::vector<double> d;
        d.reserve(pa_positions.size());
        for (double p : pa_positions)
            d.push_back(std::abs(feed_position - p));
        return d;
    }

    void WaveguideLayout::validate() const
    {
        if (pa_positions.empty())
            throw ContractError("waveguide layout needs at least one PA");
        if (!(guided_wavelength > 0.0) || !std::isfinite(guided_wavelength))
            throw ContractError("guided wavelength must be positive");
        if (!(attenuation >= 0.0) || !std::isfinite(attenuation))
            throw ContractError("attenuation must be non-negative");
        if (!(carrier_wavelength > 0.0) || !std::isfinite(carrier_wavelength))
            throw ContractError("carrier wavelength must be positive");

        const auto d = distances();
        for (std::size_t n = 0; n < d.size(); ++n)
        {
            if (!std::isfinite(d[n]))
                throw ContractError("PA positions must be finite");
            if (n > 0 && !(d[n] > d[n - 1]))
                throw ContractError(fmt::format(
                    "PA distances from the feed must be strictly increasing (d[{}]={} after d[{}]={})",
                    n + 1, d[n], n, d[n - 1]));
        }
    }

    WaveguideLayout WaveguideLayout::uniform(std::size_t n_pas, double spacing, double first_offset,
                                             double carrier_wavelength, double effective_index,
                                             double attenuation, double feed_position)
    {
        if (!(effective_index > 0.0))
            throw ContractError("effective index must be positive");
        if (!(spacing > 0.0))
            throw ContractError("PA spacing must be positive");

        WaveguideLayout layout;
        layout.feed_position = feed_position;
        layout.pa_positions.reserve(n_pas);
        for (std::size_t n = 0; n < n_pas; ++n)
            layout.pa_positions.push_back(feed_position + first_offset + spacing * static_cast<double>(n));
        layout.carrier_wavelength = carrier_wavelength;
        layout.guided_wavelength = carrier_wavelength / effective_index;
        layout.attenuation = attenuation;
        layout.validate();
        return layout;
    }

    // ---- CouplingSpec -----------------------------------------------------------

    CouplingSpec::CouplingSpec(std::vector<double> alphas, std::vector<double> betas, double gamma, double eta)
        : alphas_(std::move(alphas)), betas_(std::move(betas)), gamma_(gamma), eta_(eta)
    {
        check_gamma_eta(gamma_, eta_);
        if (alphas_.empty())
            throw ContractError("coupling spec needs at least one PA");
        if (alphas_.size() != betas_.size())
            throw ContractError("alpha and beta lists differ in length");
    }

    CouplingSpec CouplingSpec::from_alphas(std::vector<double> alphas, double gamma, double eta)
    {
        std::vector<double> betas;
        betas.reserve(alphas.size());
        for (double a : alphas)
        {
            if (!(a > 0.0 && a <= 1.0))
                throw ContractError("coupling coefficient alpha must lie in (0, 1], got " + std::to_string(a));
            betas.push_back(std::sqrt(1.0 - a * a));
        }
        return CouplingSpec(std::move(alphas), std::move(betas), gamma, eta);
    }

    CouplingSpec CouplingSpec::from_betas(std::vector<double> betas, double gamma, double eta)
    {
        std::vector<double> alphas;
        alphas.reserve(betas.size());
        for (double b : betas)
        {
            // beta = 1 would give alpha = 0, i.e. a PA that couples nothing.
            if (!(b >= 0.0 && b < 1.0))
                throw ContractError("pass-through coefficient beta must lie in [0, 1), got " + std::to_string(b));
            alphas.push_back(std::sqrt(1.0 - b * b));
        }
        return CouplingSpec(std::move(alphas), std::move(betas), gamma, eta);
    }

    CouplingSpec CouplingSpec::uniform_from_beta(std::size_t n_pas, double beta, double gamma, double eta)
    {
        return from_betas(std::vector<double>(n_pas, beta), gamma, eta);
    }

    CouplingSpec CouplingSpec::uniform_from_alpha(std::size_t n_pas, double alpha, double gamma, double eta)
    {
        return from_alphas(std::vector<double>(n_pas, alpha), gamma, eta);
    }

    CouplingSpec CouplingSpec::from_phase_matching(std::span<const double> strengths,
                                                   std::span<const double> lengths,
                                                   double gamma, double eta)
    {
        if (strengths.size() != lengths.size())
            throw ContractError("coupling strength and length lists differ in length");
        std::vector<double> alphas;
        std::vector<double> betas;
        alphas.reserve(strengths.size());
        betas.reserve(strengths.size());
        for (std::size_t n = 0; n < strengths.size(); ++n)
        {
            const double phase = strengths[n] * lengths[n];
            const double a = std::sin(phase);
            if (!(a > 0.0 && a <= 1.0))
                throw ContractError(fmt::format("sin(strength*length) = {} for PA {} is outside (0, 1]", a, n + 1));
            alphas.push_back(a);
            betas.push_back(std::abs(std::cos(phase)));
        }
        return CouplingSpec(std::move(alphas), std::move(betas), gamma, eta);
    }

    CouplingSpec CouplingSpec::unconstrained(std::vector<double> alphas, std::vector<double> betas,
                                             double gamma, double eta)
    {
        for (double a : alphas)
            if (!(a >= 0.0 && a <= 1.0))
                throw ContractError("alpha must lie in [0, 1]");
        for (double b : betas)
            if (!(b >= 0.0 && b <= 1.0))
                throw ContractError("beta must lie in [0, 1]");
        return CouplingSpec(std::move(alphas), std::move(betas), gamma, eta);
    }

    bool CouplingSpec::conserves_power() const
    {
        for (std::size_t n = 0; n < alphas_.size(); ++n)
        {
            const double total = alphas_[n] * alphas_[n] + betas_[n] * betas_[n];
            if (std::abs(total - 1.0) > 1e-12)
                return false;
        }
        return true;
    }

    // ---- transfer vectors -------------------------------------------------------

    ComplexVector ideal_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling)
    {
        check_sizes(layout, coupling);
        const auto &alpha = coupling.alphas();
        return build_transfer(layout, [&](std::size_t n, double) { return alpha[n]; });
    }

    ComplexVector serial_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling)
    {
        check_sizes(layout, coupling);
        const auto &alpha = coupling.alphas();
        const double split = std::sqrt(coupling.gamma());
        const double eps = layout.attenuation;
        return build_transfer(layout, [&](std::size_t n, double d)
                              { return split * alpha[n] * std::exp(-eps * d); });
    }

    ComplexVector parallel_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling)
    {
        check_sizes(layout, coupling);
        const auto &alpha = coupling.alphas();
        const auto &beta = coupling.betas();
        const double split = std::sqrt(coupling.gamma());
        const double eps = layout.attenuation;

        double pass_through = 1.0; // empty product for n = 1
        return build_transfer(layout, [&](std::size_t n, double d)
                              {
                                  const double m = split * alpha[n] * std::exp(-eps * d) * pass_through;
                                  pass_through *= beta[n];
                                  return m; });
    }

    ComplexVector downlink_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling)
    {
        check_sizes(layout, coupling);
        const auto &alpha = coupling.alphas();
        const double feed = std::sqrt(coupling.eta());
        const double eps = layout.attenuation;

        double radiated_remaining = 1.0;
        return build_transfer(layout, [&](std::size_t n, double d)
                              {
                                  const double m = feed * alpha[n] * std::exp(-eps * d) * radiated_remaining;
                                  radiated_remaining *= std::sqrt(1.0 - alpha[n] * alpha[n]);
                                  return m; });
    }

    ComplexVector downlink_serial_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling)
    {
        check_sizes(layout, coupling);
        const auto &alpha = coupling.alphas();
        const double feed = std::sqrt(coupling.eta());
        const double eps = layout.attenuation;
        return build_transfer(layout, [&](std::size_t n, double d)
                              { return feed * alpha[n] * std::exp(-eps * d); });
    }

    ComplexVector equalize_radiation(const ComplexVector &g)
    {
        if (g.size() == 0)
            throw ContractError("cannot equalize an empty transfer vector");
        const double total = g.squaredNorm();
        if (!(total > 0.0))
            throw DegenerateInputError("equal-power radiation needs nonzero total captured power");

        const double level = std::sqrt(total / static_cast<double>(g.size()));
        ComplexVector out(g.size());
        for (Eigen::Index n = 0; n < g.size(); ++n)
        {
            // A zero entry has no phase to preserve; it is given phase 0.
            const double phase = g(n) == Complex{} ? 0.0 : std::arg(g(n));
            out(n) = std::polar(level, phase);
        }
        return out;
    }

    std::vector<double> pa_power_profile(const ComplexVector &g, double reference_power)
    {
        if (!(reference_power > 0.0))
            throw ContractError("reference power must be positive");
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(g.size()));
        for (Eigen::Index n = 0; n < g.size(); ++n)
            out.push_back(power_db(std::norm(g(n)) / reference_power));
        return out;
    }

    void write_transfer_csv(std::ostream &os, const ComplexVector &g)
    {
        os << "index,real,imag,magnitude_db\n";
        for (Eigen::Index n = 0; n < g.size(); ++n)
            os << fmt::format("{},{:.17g},{:.17g},{:.17g}\n", n + 1, g(n).real(), g(n).imag(),
                              power_db(std::norm(g(n))));
    }
} // namespace pinch
