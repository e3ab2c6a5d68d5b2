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

#ifndef PINCH_ESTIMATION_HPP
#define PINCH_ESTIMATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pinch/activation.hpp"
#include "pinch/types.hpp"

namespace pinch
{
    /// Receiver noise, CN(0, variance I). SNR axes are transmit-referenced: P / variance.
    struct NoiseSpec
    {
        double variance = 1.0;

        static NoiseSpec from_transmit_snr_db(double snr_db, double transmit_power = 1.0);
    };

    struct PowerBudget
    {
        double total_downlink = 1.0; ///< P_Total at the AP
        double ue_uplink = 1.0;      ///< P_UE
        std::size_t probed_components = 1; ///< G, downlink parallel mode

        void validate(std::size_t n_pas) const;
    };

    enum class DownlinkMode
    {
        Serial,
        Parallel
    };

    /// Stand-in value for an infinite condition number.
    inline constexpr double kConditionSentinel = 1e300;

    struct ConditionNumber
    {
        double value = 1.0;                   ///< s_max / s_min, or kConditionSentinel
        double smallest_singular_value = 0.0; ///< raw s_min
        bool infinite = false;
    };

    struct LsOptions
    {
        /// Singular values below cutoff * s_max are discarded. 0 disables truncation.
        double relative_cutoff = 0.0;
    };

    /*!
     * Least-squares estimate of h from y = A h + n.
     *
     * Uses the SVD held by `a` (never the normal equations); a diagonal A is
     * solved by elementwise division. Throws SingularSystemError when A is
     * numerically rank deficient and no truncation cutoff is configured.
     */
    ComplexVector ls_estimate(const ObservationMatrix &a, const ComplexVector &y, const LsOptions &options = {});

    /// sigma^2 Tr((A^H A)^{-1}) = sigma^2 sum_i 1 / s_i^2.
    double mse_closed_form(const ObservationMatrix &a, double noise_variance);

    ConditionNumber condition_number(const ObservationMatrix &a);
    ConditionNumber condition_number(const ActivationMatrix &w);

    /// Checks kappa(A) >= kappa(diag(g)) / kappa(W) for A = W diag(g).
    bool condition_bound_check(const ObservationMatrix &a, const ActivationMatrix &w, const ComplexVector &g);

    /// P_UE |g_t|^2 |h_t|^2 / sigma^2 for 1-based slot t.
    double snr_serial_uplink(const ComplexVector &g_serial, const ComplexVector &h, double noise_variance,
                             std::size_t slot, double p_ue);

    /// (P_UE / sigma^2) sum_{i in active} |g_i|^2 |h_i|^2, assuming uncorrelated paths
    /// and evaluated with the realized h. `active` holds 1-based PA indices.
    double snr_parallel_uplink(const ComplexVector &g_parallel, const ComplexVector &h, double noise_variance,
                               std::size_t slot, std::span<const std::size_t> active, double p_ue);

    /// Per-component downlink SNR for component n (1-based). Parallel mode spreads
    /// P_Total over `probed_components` and is exactly serial / G.
    double snr_downlink(const ComplexVector &g_downlink, const ComplexVector &h, double noise_variance,
                        std::size_t component, double p_total, DownlinkMode mode, std::size_t probed_components);

    /// ||h_hat - h||^2 / ||h||^2. Throws DegenerateInputError when h = 0.
    double nmse(const ComplexVector &h_hat, const ComplexVector &h);

    struct EstimationReport
    {
        ComplexVector estimate;
        double squared_error = 0.0;
        double predicted_mse = 0.0;
        ConditionNumber condition;
        std::vector<double> slot_snrs; ///< |(A h)_t|^2 / sigma^2
    };

    /// Runs LS on y and scores it against the known h.
    EstimationReport estimate_with_report(const ObservationMatrix &a, const ComplexVector &y,
                                          const ComplexVector &h_true, double noise_variance,
                                          const LsOptions &options = {});
} // namespace pinch

#endif
