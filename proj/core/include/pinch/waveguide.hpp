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

#ifndef PINCH_WAVEGUIDE_HPP
#define PINCH_WAVEGUIDE_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "pinch/types.hpp"

namespace pinch
{
    /*!
     * Geometry of a single dielectric waveguide with N pinching antennas.
     *
     * Positions are 1-D coordinates along the waveguide axis. The in-waveguide
     * distance of PA n is |feed_position - pa_positions[n]|; those distances
     * must be strictly increasing with n (PA 1 is closest to the feed).
     */
    struct WaveguideLayout
    {
        double feed_position = 0.0;       ///< [m]
        std::vector<double> pa_positions; ///< [m], ordered by distance from the feed
        double guided_wavelength = 0.0;   ///< lambda_g [m]
        double attenuation = 0.0;         ///< epsilon [Np/m]
        double carrier_wavelength = 0.0;  ///< lambda [m]

        std::size_t size() const noexcept { return pa_positions.size(); }

        /// In-waveguide distances d_n from the feed point.
        std::vector<double> distances() const;

        /// Throws ContractError if any invariant is violated.
        void validate() const;

        /// Uniformly spaced PAs at first_offset, first_offset + spacing, ...
        /// with lambda_g = carrier_wavelength / effective_index.
        static WaveguideLayout uniform(std::size_t n_pas, double spacing, double first_offset,
                                       double carrier_wavelength, double effective_index,
                                       double attenuation, double feed_position = 0.0);
    };

    /*!
     * Per-PA coupling (alpha_n) and pass-through (beta_n) amplitudes together
     * with the uplink bidirectional split gamma and downlink feed efficiency eta.
     *
     * All named constructors except `unconstrained` enforce the power exchange
     * relation alpha_n^2 + beta_n^2 = 1.
     */
    class CouplingSpec
    {
    public:
        static CouplingSpec from_alphas(std::vector<double> alphas, double gamma, double eta);
        static CouplingSpec from_betas(std::vector<double> betas, double gamma, double eta);
        static CouplingSpec uniform_from_beta(std::size_t n_pas, double beta, double gamma, double eta);
        static CouplingSpec uniform_from_alpha(std::size_t n_pas, double alpha, double gamma, double eta);

        /// alpha_n = sin(strength_n * length_n) under perfect phase matching.
        static CouplingSpec from_phase_matching(std::span<const double> strengths,
                                                std::span<const double> lengths,
                                                double gamma, double eta);

        /// alpha and beta set independently; only range checks apply.
        /// Intended for probing the transfer formulas outside the physical manifold.
        static CouplingSpec unconstrained(std::vector<double> alphas, std::vector<double> betas,
                                          double gamma, double eta);

        std::size_t size() const noexcept { return alphas_.size(); }
        const std::vector<double> &alphas() const noexcept { return alphas_; }
        const std::vector<double> &betas() const noexcept { return betas_; }
        double gamma() const noexcept { return gamma_; }
        double eta() const noexcept { return eta_; }

        /// True if alpha_n^2 + beta_n^2 = 1 holds to relative 1e-12 for all n.
        bool conserves_power() const;

    private:
        CouplingSpec(std::vector<double> alphas, std::vector<double> betas, double gamma, double eta);

        std::vector<double> alphas_;
        std::vector<double> betas_;
        double gamma_ = 1.0;
        double eta_ = 1.0;
    };

    // ---- in-waveguide transfer vectors ----------------------------------------
    //
    // All transfer elements share the guided phase exp(-j 2 pi d_n / lambda_g);
    // every loss mechanism is real-valued.

    /// Lossless model: alpha_n exp(-j 2 pi d_n / lambda_g).
    ComplexVector ideal_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling);

    /// Single active PA: sqrt(gamma) alpha_n e^{-eps d_n} (no cumulative leakage).
    ComplexVector serial_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling);

    /// Several active PAs: serial element times prod_{i<n} beta_i.
    ComplexVector parallel_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling);

    /// Feed-to-PA radiation vector: sqrt(eta) alpha_n e^{-eps d_n} prod_{i<n} sqrt(1 - alpha_i^2).
    ComplexVector downlink_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling);

    /// Downlink with a single radiating PA: sqrt(eta) alpha_n e^{-eps d_n}.
    ComplexVector downlink_serial_inwaveguide(const WaveguideLayout &layout, const CouplingSpec &coupling);

    /// Equal-power radiation model: every magnitude becomes sqrt(sum |g|^2 / N),
    /// phases kept. Throws DegenerateInputError on an all-zero vector.
    ComplexVector equalize_radiation(const ComplexVector &g);

    /// 10 log10(|g_n|^2 / reference_power); zero entries map to kZeroPowerDb.
    std::vector<double> pa_power_profile(const ComplexVector &g, double reference_power);

    /// CSV rows `index,real,imag,magnitude_db` (1-based index) with a header line.
    void write_transfer_csv(std::ostream &os, const ComplexVector &g);
} // namespace pinch

#endif
