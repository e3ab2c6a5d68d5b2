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

#ifndef PINCH_ACTIVATION_HPP
#define PINCH_ACTIVATION_HPP

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/SVD>

#include "pinch/types.hpp"

namespace pinch
{
    enum class Protocol
    {
        Serial,       ///< identity activation, one PA per slot
        SMatrix,      ///< binary (H + J) / 2
        HadamardIdeal ///< +/-1 Sylvester Hadamard, not physically switchable
    };

    enum class Alphabet
    {
        Binary, ///< {0, 1}
        Signed  ///< {-1, +1}
    };

    std::string_view to_string(Protocol p) noexcept;

    /// Parses "serial", "smatrix", "hadamard-ideal". Throws ContractError otherwise.
    Protocol parse_protocol(std::string_view name);

    /*!
     * Square pilot activation matrix W with exact integer entries.
     *
     * Row t lists which PAs are switched on in pilot slot t. The constructor
     * checks the declared alphabet, that serial matrices are the identity and
     * that W has full rank.
     */
    class ActivationMatrix
    {
    public:
        ActivationMatrix(IntMatrix entries, Alphabet alphabet, Protocol protocol);

        const IntMatrix &entries() const noexcept { return entries_; }
        Alphabet alphabet() const noexcept { return alphabet_; }
        Protocol protocol() const noexcept { return protocol_; }
        Eigen::Index size() const noexcept { return entries_.rows(); }

        ComplexMatrix to_complex() const { return entries_.cast<double>().cast<Complex>(); }

    private:
        IntMatrix entries_;
        Alphabet alphabet_;
        Protocol protocol_;
    };

    /// Sylvester Hadamard matrix of order n (power of two).
    ActivationMatrix hadamard(std::size_t n);

    /// S-Matrix (H_n + J_n) / 2.
    ActivationMatrix s_matrix(std::size_t n);

    ActivationMatrix serial_activation(std::size_t n);

    ActivationMatrix make_activation(Protocol protocol, std::size_t n);

    /// W^T W, the measurement crosstalk pattern. Exact.
    IntMatrix gram_crosstalk(const ActivationMatrix &w);

    /// N I + H J + J H + N J, which equals 4 S^T S for the S-Matrix of order n.
    IntMatrix s_matrix_gram_expansion(std::size_t n);

    /// 1-based indices of the PAs active in 1-based slot t.
    std::vector<std::size_t> active_set(const ActivationMatrix &w, std::size_t slot);

    /// Integer matrix as CSV, one row per line.
    void write_matrix_csv(std::ostream &os, const IntMatrix &m);

    /*!
     * A = W diag(g), scaled by a real amplitude (sqrt of pilot power).
     *
     * The full SVD is computed once at construction; singular values are
     * stored in descending order and the factorization is reused by the
     * least-squares estimator. Instances are immutable and may be shared
     * across threads.
     */
    class ObservationMatrix
    {
    public:
        explicit ObservationMatrix(ComplexMatrix a);

        const ComplexMatrix &matrix() const noexcept { return a_; }
        const RealVector &singular_values() const noexcept { return svd_.singularValues(); }
        const Eigen::JacobiSVD<ComplexMatrix> &svd() const noexcept { return svd_; }
        Eigen::Index size() const noexcept { return a_.rows(); }

        /// True if every off-diagonal entry is exactly zero.
        bool is_diagonal() const noexcept { return diagonal_; }

    private:
        ComplexMatrix a_;
        Eigen::JacobiSVD<ComplexMatrix> svd_;
        bool diagonal_ = false;
    };

    ObservationMatrix observation_matrix(const ActivationMatrix &w, const ComplexVector &g,
                                         double amplitude_scale = 1.0);
} // namespace pinch

#endif
