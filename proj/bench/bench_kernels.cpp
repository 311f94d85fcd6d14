// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "majmem/chain.hpp"
#include "majmem/localization.hpp"
#include "majmem/storage.hpp"

using namespace majmem;

namespace {

MemoryModel chain_model(size_t n) {
    ChainParams p;
    p.n = n;
    p.mu = 0.5;
    p.eta = 0.25;
    p.disorder = UniformIID{7};
    return MemoryModel(one_particle_hamiltonian(p, realize_potential(p, 0)));
}

void BM_monte_carlo_parallel(benchmark::State &state) {
    MemoryModel model = chain_model(static_cast<size_t>(state.range(0)));
    MonteCarloOptions opt;
    opt.n_samples = 64;
    for (auto _ : state) {
        auto f = monte_carlo_samples(EncodedState{}, model, 20.0, Rng(1), opt);
        benchmark::DoNotOptimize(f.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(opt.n_samples));
}

void BM_monte_carlo_reference(benchmark::State &state) {
    MemoryModel model = chain_model(static_cast<size_t>(state.range(0)));
    const size_t samples = 64;
    for (auto _ : state) {
        auto f = monte_carlo_samples_reference(EncodedState{}, model, 20.0, Rng(1), samples);
        benchmark::DoNotOptimize(f.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples));
}

std::vector<double> scan_energies() {
    std::vector<double> e;
    for (int k = 0; k < 32; k++) {
        e.push_back(-1.0 + 2.0 * k / 31.0);
    }
    return e;
}

void BM_lyapunov_parallel(benchmark::State &state) {
    UniformStream stream{0.125, 0.0625, 3, 0};
    auto energies = scan_energies();
    for (auto _ : state) {
        auto s = lyapunov_scan(stream, static_cast<uint64_t>(state.range(0)), energies);
        benchmark::DoNotOptimize(s.exponents.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(energies.size()));
}

void BM_lyapunov_reference(benchmark::State &state) {
    UniformStream stream{0.125, 0.0625, 3, 0};
    auto energies = scan_energies();
    for (auto _ : state) {
        auto s = lyapunov_scan_reference(stream, static_cast<uint64_t>(state.range(0)), energies);
        benchmark::DoNotOptimize(s.exponents.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(energies.size()));
}

}  // namespace

BENCHMARK(BM_monte_carlo_parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monte_carlo_reference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lyapunov_parallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lyapunov_reference)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
