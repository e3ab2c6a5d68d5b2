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

#include "pinch/estimation.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        void check_index(std::size_t index, Eigen::Index n, const char *what)
        {
            if (index < 1 || index > static_cast<std::size_t>(n))
                throw ContractError(fmt::format("{} {} outside [1, {}]", what, index, n));
        }

        void check_noise(double noise_variance)
        {
            if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
                throw ContractError("noise variance must be positive and finite for an SNR");
        }

        // Numerical rank test relative to the largest singular value.
        bool rank_deficient(const RealVector &s)
        {
            const double tol = static_cast<double>(s.size()) * std::numeric_limits<double>::epsilon() * s(0);
            return !(s(s.size() - 1) > tol);
        }
    } // namespace

    NoiseSpec NoiseSpec::from_transmit_snr_db(double snr_db, double transmit_power)
    {
        if (!(transmit_power > 0.0))
            throw ContractError("transmit power must be positive");
        return NoiseSpec{transmit_power / std::pow(10.0, snr_db / 10.0)};
    }

    void PowerBudget::validate(std::size_t n_pas) const
    {
        if (!(total_downlink > 0.0 && ue_uplink > 0.0))
            throw ContractError("pilot powers must be positive");
        if (probed_components < 1 || probed_components > n_pas)
            throw ContractError(fmt::format("G = {} must lie in [1, {}]", probed_components, n_pas));
    }

    ComplexVector ls_estimate(const ObservationMatrix &a, const ComplexVector &y, const LsOptions &options)
    {
        if (y.size() != a.size())
            throw ContractError(fmt::format("observation has {} entries, expected {}", y.size(), a.size()));

        const RealVector &s = a.singular_values();
        const bool truncate = options.relative_cutoff > 0.0;
        if (!truncate && rank_deficient(s))
            throw SingularSystemError(fmt::format("observation matrix is rank deficient (s_min = {:g}, s_max = {:g})",
                                                  s(s.size() - 1), s(0)),
                                      s(s.size() - 1));

        if (a.is_diagonal() && !truncate)
            return y.cwiseQuotient(a.matrix().diagonal());

        const auto &svd = a.svd();
        const double floor = truncate ? options.relative_cutoff * s(0) : 0.0;
        ComplexVector coeff = svd.matrixU().adjoint() * y;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            coeff(i) = s(i) > floor ? coeff(i) / s(i) : Complex{};
        return svd.matrixV() * coeff;
    }

    double mse_closed_form(const ObservationMatrix &a, double noise_variance)
    {
        if (noise_variance < 0.0)
            throw ContractError("noise variance must be non-negative");
        const RealVector &s = a.singular_values();
        if (rank_deficient(s))
            throw SingularSystemError("closed-form MSE undefined for a rank deficient observation matrix",
                                      s(s.size() - 1));
        double trace = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            trace += 1.0 / (s(i) * s(i));
        return noise_variance * trace;
    }

    ConditionNumber condition_number(const ObservationMatrix &a)
    {
        const RealVector &s = a.singular_values();
        const double s_max = s(0);
        const double s_min = s(s.size() - 1);
        if (!(s_max > 0.0))
            throw DegenerateInputError("condition number of the zero matrix is undefined");

        ConditionNumber out;
        out.smallest_singular_value = s_min;
        const double ratio = s_max / s_min;
        if (!(s_min > 0.0) || !std::isfinite(ratio) || ratio > kConditionSentinel)
        {
            out.value = kConditionSentinel;
            out.infinite = true;
        }
        else
        {
            out.value = ratio;
        }
        return out;
    }

    ConditionNumber condition_number(const ActivationMatrix &w)
    {
        return condition_number(ObservationMatrix(w.to_complex()));
    }

    bool condition_bound_check(const ObservationMatrix &a, const ActivationMatrix &w, const ComplexVector &g)
    {
        const auto ka = condition_number(a);
        const auto kw = condition_number(w);
        const auto kg = condition_number(ObservationMatrix(ComplexMatrix(g.asDiagonal())));
        if (ka.infinite)
            return true;
        if (kg.infinite)
            return false;
        // Relative slack for the rounding in three independent SVDs.
        return ka.value * (1.0 + 1e-10) >= kg.value / kw.value;
    }

    double snr_serial_uplink(const ComplexVector &g_serial, const ComplexVector &h, double noise_variance,
                             std::size_t slot, double p_ue)
    {
        check_noise(noise_variance);
        if (g_serial.size() != h.size())
            throw ContractError("transfer vector and channel differ in length");
        check_index(slot, h.size(), "slot");
        const auto t = static_cast<Eigen::Index>(slot - 1);
        return p_ue * std::norm(g_serial(t)) * std::norm(h(t)) / noise_variance;
    }

    double snr_parallel_uplink(const ComplexVector &g_parallel, const ComplexVector &h, double noise_variance,
                               std::size_t slot, std::span<const std::size_t> active, double p_ue)
    {
        check_noise(noise_variance);
        if (g_parallel.size() != h.size())
            throw ContractError("transfer vector and channel differ in length");
        check_index(slot, h.size(), "slot");
        double power = 0.0;
        for (std::size_t i : active)
        {
            check_index(i, h.size(), "active PA");
            const auto k = static_cast<Eigen::Index>(i - 1);
            power += std::norm(g_parallel(k)) * std::norm(h(k));
        }
        return p_ue * power / noise_variance;
    }

    double snr_downlink(const ComplexVector &g_downlink, const ComplexVector &h, double noise_variance,
                        std::size_t component, double p_total, DownlinkMode mode, std::size_t probed_components)
    {
        check_noise(noise_variance);
        if (g_downlink.size() != h.size())
            throw ContractError("transfer vector and channel differ in length");
        check_index(component, h.size(), "component");
        PowerBudget{p_total, 1.0, probed_components}.validate(static_cast<std::size_t>(h.size()));

        const auto n = static_cast<Eigen::Index>(component - 1);
        const double serial = p_total * std::norm(g_downlink(n)) * std::norm(h(n)) / noise_variance;
        return mode == DownlinkMode::Serial ? serial : serial / static_cast<double>(probed_components);
    }

    double nmse(const ComplexVector &h_hat, const ComplexVector &h)
    {
        if (h_hat.size() != h.size())
            throw ContractError("estimate and channel differ in length");
        const double ref = h.squaredNorm();
        if (!(ref > 0.0))
            throw DegenerateInputError("NMSE is undefined for a zero channel");
        return (h_hat - h).squaredNorm() / ref;
    }

    EstimationReport estimate_with_report(const ObservationMatrix &a, const ComplexVector &y,
                                          const ComplexVector &h_true, double noise_variance,
                                          const LsOptions &options)
    {
        EstimationReport r;
        r.estimate = ls_estimate(a, y, options);
        r.squared_error = (r.estimate - h_true).squaredNorm();
        r.predicted_mse = mse_closed_form(a, noise_variance);
        r.condition = condition_number(a);
        const ComplexVector clean = a.matrix() * h_true;
        r.slot_snrs.reserve(static_cast<std::size_t>(clean.size()));
        for (Eigen::Index t = 0; t < clean.size(); ++t)
            r.slot_snrs.push_back(noise_variance > 0.0 ? std::norm(clean(t)) / noise_variance
                                                       : std::numeric_limits<double>::infinity());
        return r;
    }
} // namespace pinch
