// Copyright 2026 The vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "vqa/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

namespace {

using vqa::Complex;
namespace k = vqa::kernels;

std::vector<Complex> random_state(unsigned n) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (Complex &a : amps) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (Complex &a : amps) {
        a /= std::sqrt(norm);
    }
    return amps;
}

const k::Mat2 kRx{Complex(std::cos(0.3), 0.0), Complex(0.0, -std::sin(0.3)), Complex(0.0, -std::sin(0.3)),
                  Complex(std::cos(0.3), 0.0)};

template <auto Kernel> void BM_Apply1Q(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::vector<Complex> amps = random_state(n);
    for (auto _ : state) {
        for (unsigned q = 1; q <= n; ++q) {
            Kernel(amps, n, q, kRx);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * (std::int64_t{1} << n));
}

template <auto Kernel> void BM_ApplyCx(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::vector<Complex> amps = random_state(n);
    for (auto _ : state) {
        for (unsigned q = 1; q < n; ++q) {
            Kernel(amps, n, q, q + 1);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n - 1) * (std::int64_t{1} << n));
}

template <auto Kernel> void BM_IsingDiagonal(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::vector<std::uint64_t> masks;
    std::vector<double> coeffs;
    for (unsigned i = 0; i + 1 < n; ++i) {
        masks.push_back(std::uint64_t{3} << i);
        coeffs.push_back(0.5 + i);
    }
    std::vector<double> out(std::size_t{1} << n);
    for (auto _ : state) {
        Kernel(masks, coeffs, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <auto Kernel> void BM_Probabilities(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const std::vector<Complex> amps = random_state(n);
    std::vector<double> out(amps.size());
    for (auto _ : state) {
        Kernel(amps, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

} // namespace

BENCHMARK(BM_Apply1Q<k::serial::apply_1q>)->Name("apply_1q/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Apply1Q<k::apply_1q>)->Name("apply_1q/openmp")->DenseRange(12, 22, 5);
BENCHMARK(BM_ApplyCx<k::serial::apply_cx>)->Name("apply_cx/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_ApplyCx<k::apply_cx>)->Name("apply_cx/openmp")->DenseRange(12, 22, 5);
BENCHMARK(BM_IsingDiagonal<k::serial::ising_diagonal>)->Name("ising_diagonal/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_IsingDiagonal<k::ising_diagonal>)->Name("ising_diagonal/openmp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Probabilities<k::serial::probabilities>)->Name("probabilities/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Probabilities<k::probabilities>)->Name("probabilities/openmp")->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
