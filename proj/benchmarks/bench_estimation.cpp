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

#include <benchmark/benchmark.h>

#include "pinch/experiments.hpp"

using namespace pinch;

namespace
{
    ExperimentConfig config_for(std::size_t n)
    {
        ExperimentConfig c;
        c.n_pas = n;
        c.probed_components = n;
        return c;
    }
} // namespace

static void BM_ObservationSvd(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = s_matrix(n);
    const auto scenario = make_scenario(config_for(n), Curve::ParallelProportional, 20.0, 0.9);
    for (auto _ : state)
        benchmark::DoNotOptimize(observation_matrix(w, scenario.transfer));
}
BENCHMARK(BM_ObservationSvd)->RangeMultiplier(2)->Range(4, 64);

static void BM_LeastSquares(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto scenario = make_scenario(config_for(n), Curve::ParallelProportional, 20.0, 0.9);
    auto engine = make_engine(1);
    const ComplexVector y = complex_gaussian_vector(engine, static_cast<Eigen::Index>(n), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ls_estimate(scenario.observation, y));
}
BENCHMARK(BM_LeastSquares)->RangeMultiplier(2)->Range(4, 64);

static void BM_ChannelDraw(benchmark::State &state)
{
    const auto model = ChannelModel::from_config(config_for(16));
    auto engine = make_engine(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(model.draw(engine));
}
BENCHMARK(BM_ChannelDraw);

static void BM_MonteCarloPoint(benchmark::State &state)
{
    const auto scenario = make_scenario(config_for(16), Curve::ParallelEqualPower, 20.0, 0.9);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_nmse(scenario, 1000, 7, 0, workers));
}
BENCHMARK(BM_MonteCarloPoint)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
