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

// Reference computations written independently of the library code paths.

#ifndef PINCH_TESTS_ORACLES_HPP
#define PINCH_TESTS_ORACLES_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pinch/types.hpp"

namespace oracle
{
    using IntRows = std::vector<std::vector<long long>>;

    // Sylvester Hadamard entry in closed form: (-1)^popcount(i & j).
    inline long long hadamard_entry(std::size_t i, std::size_t j)
    {
        return std::popcount(i & j) % 2 ? -1 : 1;
    }

    inline IntRows hadamard_rows(std::size_t n)
    {
        IntRows h(n, std::vector<long long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                h[i][j] = hadamard_entry(i, j);
        return h;
    }

    inline IntRows multiply_transpose_left(const IntRows &a, const IntRows &b)
    {
        const std::size_t n = a.size();
        IntRows out(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    out[i][j] += a[k][i] * b[k][j];
        return out;
    }

    // Fraction-free Gaussian elimination; exact for integer matrices of modest size.
    inline __int128 bareiss_determinant(IntRows rows)
    {
        const std::size_t n = rows.size();
        std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = rows[i][j];
        __int128 sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k)
        {
            if (m[k][k] == 0)
            {
                std::size_t p = k + 1;
                while (p < n && m[p][k] == 0)
                    ++p;
                if (p == n)
                    return 0;
                std::swap(m[p], m[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    // Hand-evaluated transfer element: sqrt(scale) * alpha * e^{-eps d} * prod(leak) * e^{-j 2 pi d / lg}.
    inline std::complex<double> transfer_element(double scale, double alpha, double eps, double d, double lg,
                                                 double leak_product)
    {
        const double mag = std::sqrt(scale) * alpha * std::exp(-eps * d) * leak_product;
        const double phase = -2.0 * std::numbers::pi * d / lg;
        return {mag * std::cos(phase), mag * std::sin(phase)};
    }

    // sigma^2 Tr((A^H A)^{-1}) by explicit inversion of the normal matrix.
    inline double mse_normal_equations(const pinch::ComplexMatrix &a, double noise_variance)
    {
        const pinch::ComplexMatrix gram = a.adjoint() * a;
        return noise_variance * gram.inverse().trace().real();
    }

    // Condition number through a divide-and-conquer SVD rather than the Jacobi one.
    inline double kappa(const pinch::ComplexMatrix &a)
    {
        Eigen::BDCSVD<pinch::ComplexMatrix> svd(a);
        const auto &s = svd.singularValues();
        return s(0) / s(s.size() - 1);
    }

    inline pinch::ComplexVector random_complex(std::mt19937_64 &rng, Eigen::Index n, double scale = 1.0)
    {
        std::normal_distribution<double> nd(0.0, scale);
        pinch::ComplexVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = {nd(rng), nd(rng)};
        return v;
    }

    inline double wrap_phase(double x)
    {
        double r = std::remainder(x, 2.0 * std::numbers::pi);
        return r;
    }
} // namespace oracle

#endif
