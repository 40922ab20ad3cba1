// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <detci/davidson.hpp>
#include <detci/matvec.hpp>

#include "common.hpp"

using namespace detci;

namespace {

void davidson_end_to_end(benchmark::State& state) {
    const int norbs = static_cast<int>(state.range(0));
    const bool stored = state.range(1) != 0;
    const Basis basis = bench::make_chain_basis(norbs, 2);
    const DecompositionPlan plan = plan_decomposition(2, 2, 1, 1, basis);

    LinearOperator apply;
    StoredMatrix matrix;
    if (stored) {
        matrix = build_stored_matrix(basis);
        apply = [&matrix](std::span<const double> x, std::span<double> y) {
            stored_matvec(matrix, x, y);
        };
    } else {
        apply = [&basis, &plan](std::span<const double> x, std::span<double> y) {
            matvec(basis, plan, x, y);
        };
    }

    int iterations = 0;
    for (auto _ : state) {
        const DavidsonResult result = davidson_solve(apply, basis.diag, {});
        iterations = static_cast<int>(result.trace.iterations.size());
        benchmark::DoNotOptimize(result.energy);
    }
    state.counters["solver_iterations"] = iterations;
    state.counters["dimension"] = static_cast<double>(basis.dimension());
}
BENCHMARK(davidson_end_to_end)
    ->ArgNames({"norbs", "stored"})
    ->Args({8, 0})
    ->Args({8, 1})
    ->Args({10, 0})
    ->Unit(benchmark::kMillisecond);

} // namespace
