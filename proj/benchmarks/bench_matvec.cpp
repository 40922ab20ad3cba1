// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include <detci/detfile.hpp>
#include <detci/matvec.hpp>

#include "common.hpp"

using namespace detci;

namespace {

std::vector<double> unit_norm_vector(std::size_t n) {
    SplitMix64 rng(7);
    std::vector<double> v(n);
    for (double& e : v)
        e = 2.0 * (static_cast<double>(rng.next() >> 11) / 9007199254740992.0) - 1.0;
    return v;
}

void matrix_free_matvec(benchmark::State& state) {
    const int norbs = static_cast<int>(state.range(0));
    const int a = static_cast<int>(state.range(1));
    const int b = static_cast<int>(state.range(2));
    BasisOptions opts;
    opts.cache = state.range(3) != 0;
    const Basis basis = bench::make_chain_basis(norbs, 2, opts);
    const DecompositionPlan plan = plan_decomposition(a, b, 1, 1, basis);
    const auto x = unit_norm_vector(basis.dimension());
    std::vector<double> y(basis.dimension());
    for (auto _ : state) {
        matvec(basis, plan, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.dimension()));
}
BENCHMARK(matrix_free_matvec)
    ->ArgNames({"norbs", "a", "b", "cache"})
    ->Args({8, 1, 1, 1})
    ->Args({8, 4, 4, 1})
    ->Args({8, 4, 4, 0})
    ->Args({10, 4, 4, 1})
    ->Unit(benchmark::kMillisecond);

void stored_build(benchmark::State& state) {
    const Basis basis = bench::make_chain_basis(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        const StoredMatrix m = build_stored_matrix(basis);
        benchmark::DoNotOptimize(m.value.data());
    }
}
BENCHMARK(stored_build)->ArgName("norbs")->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void stored_apply(benchmark::State& state) {
    const Basis basis = bench::make_chain_basis(static_cast<int>(state.range(0)), 2);
    const StoredMatrix m = build_stored_matrix(basis);
    const auto x = unit_norm_vector(basis.dimension());
    std::vector<double> y(basis.dimension());
    for (auto _ : state) {
        stored_matvec(m, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(m.nonzero_count()));
}
BENCHMARK(stored_apply)->ArgName("norbs")->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void connectivity_build(benchmark::State& state) {
    const int norbs = static_cast<int>(state.range(0));
    const auto strings = full_channel_strings(norbs, norbs / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_singles(strings, norbs).flat.data());
        benchmark::DoNotOptimize(generate_doubles(strings, norbs).flat.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(strings.size()));
}
BENCHMARK(connectivity_build)->ArgName("norbs")->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace
