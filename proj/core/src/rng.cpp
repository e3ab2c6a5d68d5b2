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

#include "pinch/rng.hpp"

#include <cmath>

namespace pinch
{
    std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                              std::uint64_t stream) noexcept
    {
        std::uint64_t h = splitmix64(master);
        h = splitmix64(h ^ point);
        h = splitmix64(h ^ trial);
        return splitmix64(h ^ stream);
    }

    Complex complex_gaussian(Engine &engine, double variance)
    {
        if (variance <= 0.0)
            return {};
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * variance));
        const double re = normal(engine);
        const double im = normal(engine);
        return {re, im};
    }

    ComplexVector complex_gaussian_vector(Engine &engine, Eigen::Index n, double variance)
    {
        ComplexVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = complex_gaussian(engine, variance);
        return v;
    }
} // namespace pinch
