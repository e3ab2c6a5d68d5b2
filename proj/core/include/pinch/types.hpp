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

#ifndef PINCH_TYPES_HPP
#define PINCH_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace pinch
{
    using Complex = std::complex<double>;
    using ComplexVector = Eigen::VectorXcd;
    using ComplexMatrix = Eigen::MatrixXcd;
    using RealVector = Eigen::VectorXd;
    using RealMatrix = Eigen::MatrixXd;

    // Activation matrices are kept in exact integer arithmetic until they are
    // multiplied into a complex observation matrix.
    using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

    /// Power level used in dB outputs for an exactly-zero amplitude.
    inline constexpr double kZeroPowerDb = -300.0;

    /// Violated precondition on dimensions, ranges or value domains.
    class ContractError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Input is well-formed but carries no usable information (e.g. zero power).
    class DegenerateInputError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Hadamard-family constructions only exist for powers of two here.
    class UnsupportedOrderError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Two positions coincide where a distance appears in a denominator.
    class SingularityError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// Least-squares system is rank deficient.
    class SingularSystemError : public std::runtime_error
    {
    public:
        SingularSystemError(const std::string &what, double smallest_singular_value)
            : std::runtime_error(what), smallest_singular_value_(smallest_singular_value) {}

        double smallest_singular_value() const noexcept { return smallest_singular_value_; }

    private:
        double smallest_singular_value_;
    };

    /// Power in dB, clamped to kZeroPowerDb for zero input.
    inline double power_db(double linear_power)
    {
        if (!(linear_power > 0.0))
            return kZeroPowerDb;
        return std::max(kZeroPowerDb, 10.0 * std::log10(linear_power));
    }
} // namespace pinch

#endif
