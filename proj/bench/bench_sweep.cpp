// SPDX-License-Identifier: Apache-2.0
//
// itsce: channel-parameter estimation for ITS-assisted high-speed-rail links
// Copyright (C) 2026 The itsce authors
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

// Serial reference kernel versus the OpenMP kernel on the reference scenario.

#include <benchmark/benchmark.h>

#include "itsce/config_io.hpp"
#include "itsce/harness.hpp"

#include <omp.h>

using namespace itsce;

namespace
{
    const TrialContext &context()
    {
        static const Scenario s = reference_scenario();
        static const TrialContext ctx(s.config, s.params);
        return ctx;
    }

    void BM_TrialsSerial(benchmark::State &state)
    {
        std::vector<std::optional<TrialErrors>> out(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
        {
            kernels::evaluate_trials_serial(context(), sigma_from_snr(20.0), 4, out);
            benchmark::DoNotOptimize(out.data());
        }
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    void BM_TrialsParallel(benchmark::State &state)
    {
        std::vector<std::optional<TrialErrors>> out(static_cast<std::size_t>(state.range(0)));
        const int threads = static_cast<int>(state.range(1));
        for (auto _ : state)
        {
            kernels::evaluate_trials_parallel(context(), sigma_from_snr(20.0), 4, out, threads);
            benchmark::DoNotOptimize(out.data());
        }
        state.SetItemsProcessed(state.iterations() * state.range(0));
        state.counters["threads"] = threads;
    }

    void BM_Pipeline(benchmark::State &state)
    {
        const auto &ctx = context();
        for (auto _ : state)
        {
            ReceivedFrame frame = ctx.clean;
            RngStream rng({1, 0, 0, noise_domain});
            add_noise(frame, 0.01, rng);
            benchmark::DoNotOptimize(run_pipeline(frame, ctx.design, ctx.config));
        }
    }
}

BENCHMARK(BM_Pipeline);
BENCHMARK(BM_TrialsSerial)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)
    ->ArgsProduct({{4096}, benchmark::CreateRange(1, omp_get_num_procs() > 1 ? omp_get_num_procs() : 2, 2)})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
