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

#include "pinch/activation.hpp"

#include <bit>
#include <ostream>

#include <Eigen/LU>
#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        void check_power_of_two(std::size_t n)
        {
            if (n == 0 || !std::has_single_bit(n))
                throw UnsupportedOrderError(fmt::format("order {} is not a power of two", n));
        }

        IntMatrix sylvester(std::size_t n)
        {
            check_power_of_two(n);
            IntMatrix h = IntMatrix::Ones(1, 1);
            while (static_cast<std::size_t>(h.rows()) < n)
            {
                const Eigen::Index m = h.rows();
                IntMatrix next(2 * m, 2 * m);
                next.topLeftCorner(m, m) = h;
                next.topRightCorner(m, m) = h;
                next.bottomLeftCorner(m, m) = h;
                next.bottomRightCorner(m, m) = -h;
                h = std::move(next);
            }
            return h;
        }
    } // namespace

    std::string_view to_string(Protocol p) noexcept
    {
        switch (p)
        {
        case Protocol::Serial:
            return "serial";
        case Protocol::SMatrix:
            return "smatrix";
        case Protocol::HadamardIdeal:
            return "hadamard-ideal";
        }
        return "unknown";
    }

    Protocol parse_protocol(std::string_view name)
    {
        if (name == "serial")
            return Protocol::Serial;
        if (name == "smatrix" || name == "s-matrix")
            return Protocol::SMatrix;
        if (name == "hadamard-ideal" || name == "hadamard")
            return Protocol::HadamardIdeal;
        throw ContractError(fmt::format("unknown protocol '{}' (expected serial, smatrix or hadamard-ideal)", name));
    }

    ActivationMatrix::ActivationMatrix(IntMatrix entries, Alphabet alphabet, Protocol protocol)
        : entries_(std::move(entries)), alphabet_(alphabet), protocol_(protocol)
    {
        if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
            throw ContractError("activation matrix must be square and non-empty");

        for (Eigen::Index i = 0; i < entries_.rows(); ++i)
            for (Eigen::Index j = 0; j < entries_.cols(); ++j)
            {
                const long long v = entries_(i, j);
                const bool ok = alphabet_ == Alphabet::Binary ? (v == 0 || v == 1) : (v == -1 || v == 1);
                if (!ok)
                    throw ContractError(fmt::format("entry ({}, {}) = {} outside the declared alphabet", i + 1, j + 1, v));
            }

        if (protocol_ == Protocol::Serial && !entries_.isIdentity())
            throw ContractError("serial activation must be the identity matrix");

        // Entries are small integers; pivoted LU decides the rank reliably here.
        Eigen::FullPivLU<RealMatrix> lu(entries_.cast<double>());
        if (lu.rank() != entries_.rows())
            throw ContractError("activation matrix is rank deficient");
    }

    ActivationMatrix hadamard(std::size_t n)
    {
        return ActivationMatrix(sylvester(n), Alphabet::Signed, Protocol::HadamardIdeal);
    }

    ActivationMatrix s_matrix(std::size_t n)
    {
        const IntMatrix h = sylvester(n);
        const IntMatrix sum = h + IntMatrix::Ones(h.rows(), h.cols());
        return ActivationMatrix(sum / 2, Alphabet::Binary, Protocol::SMatrix);
    }

    ActivationMatrix serial_activation(std::size_t n)
    {
        if (n == 0)
            throw ContractError("serial activation needs N >= 1");
        const auto m = static_cast<Eigen::Index>(n);
        return ActivationMatrix(IntMatrix::Identity(m, m), Alphabet::Binary, Protocol::Serial);
    }

    ActivationMatrix make_activation(Protocol protocol, std::size_t n)
    {
        switch (protocol)
        {
        case Protocol::Serial:
            return serial_activation(n);
        case Protocol::SMatrix:
            return s_matrix(n);
        case Protocol::HadamardIdeal:
            return hadamard(n);
        }
        throw ContractError("unknown protocol");
    }

    IntMatrix gram_crosstalk(const ActivationMatrix &w)
    {
        return w.entries().transpose() * w.entries();
    }

    IntMatrix s_matrix_gram_expansion(std::size_t n)
    {
        const IntMatrix h = sylvester(n);
        const auto m = h.rows();
        const auto nn = static_cast<long long>(n);
        const IntMatrix j = IntMatrix::Ones(m, m);
        const IntMatrix i = IntMatrix::Identity(m, m);
        return nn * i + h * j + j * h + nn * j;
    }

    std::vector<std::size_t> active_set(const ActivationMatrix &w, std::size_t slot)
    {
        const auto n = static_cast<std::size_t>(w.size());
        if (slot < 1 || slot > n)
            throw ContractError(fmt::format("slot {} outside [1, {}]", slot, n));
        std::vector<std::size_t> out;
        const auto row = static_cast<Eigen::Index>(slot - 1);
        for (Eigen::Index j = 0; j < w.size(); ++j)
            if (w.entries()(row, j) != 0)
                out.push_back(static_cast<std::size_t>(j) + 1);
        return out;
    }

    void write_matrix_csv(std::ostream &os, const IntMatrix &m)
    {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
        {
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                os << (j ? "," : "") << m(i, j);
            os << '\n';
        }
    }

    ObservationMatrix::ObservationMatrix(ComplexMatrix a)
        : a_(std::move(a))
    {
        if (a_.rows() == 0 || a_.rows() != a_.cols())
            throw ContractError("observation matrix must be square and non-empty");
        if (!a_.allFinite())
            throw ContractError("observation matrix has non-finite entries");
        svd_.compute(a_, Eigen::ComputeFullU | Eigen::ComputeFullV);

        diagonal_ = true;
        for (Eigen::Index i = 0; i < a_.rows() && diagonal_; ++i)
            for (Eigen::Index j = 0; j < a_.cols(); ++j)
                if (i != j && a_(i, j) != Complex{})
                {
                    diagonal_ = false;
                    break;
                }
    }

    ObservationMatrix observation_matrix(const ActivationMatrix &w, const ComplexVector &g, double amplitude_scale)
    {
        if (g.size() != w.size())
            throw ContractError(fmt::format("activation is {}x{} but transfer vector has {} entries",
                                            w.size(), w.size(), g.size()));
        ComplexMatrix a = w.to_complex() * g.asDiagonal();
        a *= amplitude_scale;
        return ObservationMatrix(std::move(a));
    }
} // namespace pinch
