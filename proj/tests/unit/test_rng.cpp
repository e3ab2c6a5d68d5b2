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

#include <doctest.h>

#include <set>

#include "pinch/rng.hpp"

using namespace pinch;

TEST_SUITE("rng")
{
    TEST_CASE("derived seeds are distinct and stable")
    {
        std::set<std::uint64_t> seen;
        for (std::uint64_t p = 0; p < 8; ++p)
            for (std::uint64_t t = 0; t < 64; ++t)
                for (std::uint64_t s = 0; s < 8; ++s)
                    seen.insert(derive_seed(1, p, t, s));
        CHECK(seen.size() == 8 * 64 * 8);
        CHECK(derive_seed(5, 1, 2, 3) == derive_seed(5, 1, 2, 3));
        CHECK(derive_seed(5, 1, 2, 3) != derive_seed(6, 1, 2, 3));
    }

    TEST_CASE("complex gaussian moments")
    {
        auto e = make_engine(3);
        constexpr int draws = 200000;
        double power = 0, re2 = 0, im2 = 0;
        Complex mean{};
        for (int i = 0; i < draws; ++i)
        {
            const auto z = complex_gaussian(e, 4.0);
            power += std::norm(z);
            re2 += z.real() * z.real();
            im2 += z.imag() * z.imag();
            mean += z;
        }
        CHECK(power / draws == doctest::Approx(4.0).epsilon(0.01));
        CHECK(re2 / draws == doctest::Approx(2.0).epsilon(0.015));
        CHECK(im2 / draws == doctest::Approx(2.0).epsilon(0.015));
        CHECK(std::abs(mean / static_cast<double>(draws)) < 3.0 * std::sqrt(4.0 / draws));
        CHECK(complex_gaussian(e, 0.0) == Complex(0, 0));
    }
}
