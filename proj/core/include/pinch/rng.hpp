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

#ifndef PINCH_RNG_HPP
#define PINCH_RNG_HPP

#include <cstdint>
#include <random>

#include "pinch/types.hpp"

namespace pinch
{
    using Engine = std::mt19937_64;

    /// One round of the splitmix64 finalizer.
    std::uint64_t splitmix64(std::uint64_t x) noexcept;

    /*!
     * Counter-based seed for one random stream of one Monte Carlo trial.
     *
     * The result depends only on the four coordinates, so trial t of sweep
     * point p draws the same numbers regardless of execution order or worker
     * count. Stream 0 is reserved for the wireless channel; noise streams use
     * 1 + curve id.
     */
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                              std::uint64_t stream) noexcept;

    inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

    /// Circularly-symmetric complex Gaussian sample, CN(0, variance).
    Complex complex_gaussian(Engine &engine, double variance);

    /// Vector of i.i.d. CN(0, variance) samples.
    ComplexVector complex_gaussian_vector(Engine &engine, Eigen::Index n, double variance);

    inline double uniform(Engine &engine, double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
} // namespace pinch

#endif
