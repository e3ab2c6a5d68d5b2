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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pinch/waveguide.hpp"

using namespace pinch;

namespace
{
    WaveguideLayout layout_at(std::vector<double> positions, double lg = 0.005, double eps = 0.0)
    {
        WaveguideLayout l;
        l.pa_positions = std::move(positions);
        l.guided_wavelength = lg;
        l.attenuation = eps;
        l.carrier_wavelength = lg * 1.4;
        return l;
    }

    double phase_error(Complex z, double expected)
    {
        return std::abs(oracle::wrap_phase(std::arg(z) - expected));
    }
} // namespace

TEST_SUITE("waveguide")
{
    TEST_CASE("ideal transfer examples")
    {
        const auto full = CouplingSpec::uniform_from_alpha(1, 1.0, 1.0, 0.9);

        auto g = ideal_inwaveguide(layout_at({0.0}), full);
        CHECK(g(0).real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(g(0).imag()) < 1e-15);

        g = ideal_inwaveguide(layout_at({0.0025}), full);
        CHECK(g(0).real() == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(g(0).imag()) < 1e-12);

        const auto two = CouplingSpec::from_alphas({0.8, 0.6}, 1.0, 0.9);
        g = ideal_inwaveguide(layout_at({0.5, 1.0}), two);
        CHECK(std::abs(g(0)) == doctest::Approx(0.8).epsilon(1e-15));
        CHECK(std::abs(g(1)) == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(phase_error(g(0), 0.0) < 1e-9);
        CHECK(phase_error(g(1), 0.0) < 1e-9);
    }

    TEST_CASE("serial transfer examples")
    {
        auto g = serial_inwaveguide(layout_at({0.1, 0.2, 0.3}), CouplingSpec::uniform_from_alpha(3, 1.0, 1.0, 0.9));
        for (int n = 0; n < 3; ++n)
            CHECK(std::abs(g(n)) == doctest::Approx(1.0).epsilon(1e-15));

        g = serial_inwaveguide(layout_at({1.0}, 0.005, 0.1), CouplingSpec::uniform_from_alpha(1, 1.0, 0.5, 0.9));
        CHECK(std::abs(g(0)) == doctest::Approx(std::sqrt(0.5) * std::exp(-0.1)).epsilon(1e-14));
        CHECK(std::abs(g(0)) == doctest::Approx(0.63982).epsilon(1e-5));

        g = serial_inwaveguide(layout_at({0.0}, 0.005, 0.1), CouplingSpec::uniform_from_alpha(1, 0.5, 0.25, 0.9));
        CHECK(std::abs(g(0)) == doctest::Approx(0.25).epsilon(1e-15));
    }

    TEST_CASE("parallel transfer examples")
    {
        const auto l = layout_at({0.5, 1.0, 1.5, 2.0}, 0.005, 0.1);
        const std::vector<double> a(4, 0.7);
        const auto no_leak = CouplingSpec::unconstrained(a, {1, 1, 1, 1}, 0.5, 0.9);
        const auto gs = serial_inwaveguide(l, no_leak);
        const auto gp = parallel_inwaveguide(l, no_leak);
        CHECK((gs - gp).cwiseAbs().maxCoeff() == 0.0);

        const auto cut = CouplingSpec::unconstrained(a, {0, 0.5, 0.5, 0.5}, 0.5, 0.9);
        const auto gc = parallel_inwaveguide(l, cut);
        CHECK(gc(0) == serial_inwaveguide(l, cut)(0));
        for (int n = 1; n < 4; ++n)
            CHECK(std::abs(gc(n)) == 0.0);

        const auto geometric = CouplingSpec::unconstrained({1, 1, 1, 1}, {0.5, 0.5, 0.5, 0.5}, 1.0, 0.9);
        const auto gg = parallel_inwaveguide(layout_at({0.5, 1.0, 1.5, 2.0}), geometric);
        const double expected[] = {1.0, 0.5, 0.25, 0.125};
        for (int n = 0; n < 4; ++n)
            CHECK(std::abs(gg(n)) == doctest::Approx(expected[n]).epsilon(1e-15));
    }

    TEST_CASE("downlink transfer examples")
    {
        const auto l = layout_at({0.5, 1.1, 1.4, 2.9, 3.0}, 0.0035, 0.1);
        const auto c = CouplingSpec::from_alphas({0.3, 0.5, 0.2, 0.9, 0.4}, 0.5, 0.9);
        const auto down = downlink_inwaveguide(l, c);
        const auto up = parallel_inwaveguide(l, c);
        for (int n = 0; n < 5; ++n)
            CHECK(std::abs(down(n) - std::sqrt(1.8) * up(n)) <= 1e-12 * std::abs(down(n)));

        const auto one = downlink_inwaveguide(layout_at({0.0}), CouplingSpec::uniform_from_alpha(1, 1.0, 0.5, 0.9));
        CHECK(std::abs(one(0)) == doctest::Approx(std::sqrt(0.9)).epsilon(1e-15));
        CHECK(std::abs(one(0)) == doctest::Approx(0.94868).epsilon(1e-5));

        const auto sym = CouplingSpec::from_alphas({0.3, 0.5, 0.2, 0.9, 0.4}, 0.6, 0.6);
        CHECK((downlink_inwaveguide(l, sym) - parallel_inwaveguide(l, sym)).cwiseAbs().maxCoeff() < 1e-15);
    }

    TEST_CASE("equalize_radiation examples")
    {
        ComplexVector uniform(3);
        uniform << Complex(0.5, 0), std::polar(0.5, 1.0), std::polar(0.5, -2.0);
        const auto same = equalize_radiation(uniform);
        for (int n = 0; n < 3; ++n)
            CHECK(std::abs(same(n)) == doctest::Approx(0.5).epsilon(1e-15));

        ComplexVector two(2);
        two << Complex(1, 0), std::polar(0.5, std::numbers::pi / 3);
        const auto eq = equalize_radiation(two);
        CHECK(std::abs(eq(0)) == doctest::Approx(std::sqrt(1.25 / 2)).epsilon(1e-15));
        CHECK(std::abs(eq(1)) == doctest::Approx(0.79057).epsilon(1e-5));
        CHECK(eq.squaredNorm() == doctest::Approx(1.25).epsilon(1e-15));
        CHECK(std::arg(eq(0)) == doctest::Approx(0.0));
        CHECK(std::arg(eq(1)) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-14));

        CHECK_THROWS_AS(equalize_radiation(ComplexVector::Zero(3)), DegenerateInputError);
    }

    TEST_CASE("pa_power_profile examples")
    {
        ComplexVector g(2);
        g << std::polar(std::sqrt(2.0), 0.4), Complex(0, 0);
        const auto p = pa_power_profile(g, 2.0);
        CHECK(std::abs(p[0]) < 1e-14);
        CHECK(p[1] == kZeroPowerDb);
        CHECK_THROWS_AS(pa_power_profile(g, 0.0), ContractError);

        const auto l = WaveguideLayout::uniform(16, 0.5, 0.5, 0.005, 1.4, 0.1);
        const auto serial = pa_power_profile(serial_inwaveguide(l, CouplingSpec::uniform_from_alpha(16, 1.0, 0.5, 0.9)), 1.0);
        const double slope = -2.0 * 0.1 * 0.5 * 10.0 / std::numbers::ln10;
        for (std::size_t n = 1; n < serial.size(); ++n)
            CHECK(serial[n] - serial[n - 1] == doctest::Approx(slope).epsilon(1e-12));
        CHECK(slope == doctest::Approx(-0.4343).epsilon(1e-4));

        const auto flat = pa_power_profile(equalize_radiation(serial_inwaveguide(l, CouplingSpec::uniform_from_alpha(16, 1.0, 0.5, 0.9))), 1.0);
        for (double v : flat)
            CHECK(v == doctest::Approx(flat.front()).epsilon(1e-13));
    }

    TEST_CASE("contract errors")
    {
        const auto c2 = CouplingSpec::uniform_from_alpha(2, 0.5, 0.5, 0.9);
        CHECK_THROWS_AS(ideal_inwaveguide(layout_at({0.5, 1.0, 1.5}), c2), ContractError);
        CHECK_THROWS_AS(serial_inwaveguide(layout_at({1.0, 0.5}), c2), ContractError);
        CHECK_THROWS_AS(CouplingSpec::from_alphas({0.0}, 0.5, 0.9), ContractError);
        CHECK_THROWS_AS(CouplingSpec::from_alphas({1.1}, 0.5, 0.9), ContractError);
        CHECK_THROWS_AS(CouplingSpec::from_betas({1.0}, 0.5, 0.9), ContractError);
        CHECK_THROWS_AS(CouplingSpec::uniform_from_alpha(2, 0.5, 1.5, 0.9), ContractError);
        CHECK_THROWS_AS(CouplingSpec::uniform_from_alpha(2, 0.5, 0.5, 1.0), ContractError);
        CHECK_THROWS_AS(WaveguideLayout::uniform(4, 0.5, 0.5, 0.005, 0.0, 0.1), ContractError);
        WaveguideLayout bad = layout_at({0.5});
        bad.attenuation = -0.1;
        CHECK_THROWS_AS(bad.validate(), ContractError);
    }

    TEST_CASE("transfer csv")
    {
        ComplexVector g(2);
        g << Complex(1, 0), Complex(0, -0.5);
        std::ostringstream os;
        write_transfer_csv(os, g);
        CHECK(os.str().rfind("index,real,imag,magnitude_db\n1,1,0,0\n", 0) == 0);
    }

    TEST_CASE("property: transfer vectors against the scalar oracle")
    {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 200; ++trial)
        {
            const std::size_t n = 1 + rng() % 12;
            std::vector<double> pos;
            double x = 0.2 + u(rng);
            for (std::size_t i = 0; i < n; ++i, x += 0.05 + u(rng))
                pos.push_back(x);
            const double lg = 0.002 + 0.01 * u(rng), eps = 0.3 * u(rng);
            const double gamma = u(rng), eta = 0.05 + 0.9 * u(rng);
            std::vector<double> alphas;
            for (std::size_t i = 0; i < n; ++i)
                alphas.push_back(0.05 + 0.95 * u(rng));
            const auto c = CouplingSpec::from_alphas(alphas, gamma, eta);
            const auto l = layout_at(pos, lg, eps);

            CHECK(c.conserves_power());
            const auto gi = ideal_inwaveguide(l, c);
            const auto gs = serial_inwaveguide(l, c);
            const auto gp = parallel_inwaveguide(l, c);
            const auto gd = downlink_inwaveguide(l, c);
            double leak = 1.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto k = static_cast<Eigen::Index>(i);
                const double d = pos[i];
                const auto os = oracle::transfer_element(gamma, alphas[i], eps, d, lg, 1.0);
                const auto op = oracle::transfer_element(gamma, alphas[i], eps, d, lg, leak);
                const auto od = oracle::transfer_element(eta, alphas[i], eps, d, lg, leak);
                CHECK(std::abs(gi(k)) == doctest::Approx(alphas[i]).epsilon(1e-14));
                CHECK(std::abs(gs(k) - os) <= 1e-9 * std::abs(os) + 1e-300);
                CHECK(std::abs(gp(k) - op) <= 1e-9 * std::abs(op) + 1e-300);
                CHECK(std::abs(gd(k) - od) <= 1e-9 * std::abs(od) + 1e-300);

                // all models share the guided phase
                const double phase = -2.0 * std::numbers::pi * d / lg;
                CHECK(phase_error(gi(k), phase) < 1e-8);
                CHECK(phase_error(gs(k), phase) < 1e-8);
                // parallel / serial is the real leakage product
                if (gamma > 0.0)
                {
                    const Complex ratio = gp(k) / gs(k);
                    CHECK(ratio.real() == doctest::Approx(leak).epsilon(1e-12));
                    CHECK(std::abs(ratio.imag()) < 1e-12);
                    CHECK(std::abs(gs(k)) >= std::abs(gp(k)));
                    CHECK(std::abs(gd(k) - std::sqrt(eta / gamma) * gp(k)) <= 1e-12 * std::abs(gd(k)) + 1e-300);
                }
                leak *= c.betas()[i];
            }
        }
    }

    TEST_CASE("property: equalize_radiation conserves power and is idempotent")
    {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 200; ++trial)
        {
            const auto g = oracle::random_complex(rng, 1 + static_cast<Eigen::Index>(rng() % 20));
            const auto e = equalize_radiation(g);
            CHECK(e.squaredNorm() == doctest::Approx(g.squaredNorm()).epsilon(1e-12));
            const auto e2 = equalize_radiation(e);
            CHECK((e2 - e).cwiseAbs().maxCoeff() <= 1e-12 * e.cwiseAbs().maxCoeff());
            for (Eigen::Index i = 0; i < g.size(); ++i)
                CHECK(phase_error(e(i), std::arg(g(i))) < 1e-12);
        }
    }

    TEST_CASE("property: phase matching coupling conserves power")
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.01, 1.5);
        for (int trial = 0; trial < 100; ++trial)
        {
            std::vector<double> s(6), len(6, 1.0);
            for (auto &v : s)
                v = u(rng);
            const auto c = CouplingSpec::from_phase_matching(s, len, 0.5, 0.9);
            CHECK(c.conserves_power());
            for (std::size_t i = 0; i < 6; ++i)
                CHECK(c.alphas()[i] == doctest::Approx(std::sin(s[i])).epsilon(1e-15));
        }
    }
}
