// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include <detci/detfile.hpp>
#include <detci/slater_condon.hpp>

#include "common.hpp"

using namespace detci;

namespace {

// Random determinant pairs of the chain system at a given bit_length; domain
// mix of degrees 0..>2 as the matvec loops see it.
struct PairSet {
    IntegralTable table;
    DirectExchange jk;
    std::vector<Determinant> dets;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    PairSet(int norbs, int per_channel, int bit_length)
        : table(bench::make_chain_table(norbs, 2 * per_channel)),
          jk(build_direct_exchange(table)) {
        const auto alpha = full_channel_strings(norbs, per_channel, bit_length);
        for (const auto& a : alpha)
            for (const auto& b : alpha) dets.push_back(interleave(a, b));
        SplitMix64 rng(99);
        for (int k = 0; k < 4096; ++k)
            pairs.push_back({rng.next() % dets.size(), rng.next() % dets.size()});
    }
};

void hij_kernel(benchmark::State& state) {
    const int norbs = static_cast<int>(state.range(0));
    const int bit_length = static_cast<int>(state.range(1));
    const PairSet set(norbs, 2, bit_length);
    std::size_t at = 0;
    for (auto _ : state) {
        const auto& [i, j] = set.pairs[at];
        at = (at + 1) % set.pairs.size();
        benchmark::DoNotOptimize(hij(set.dets[i], set.dets[j], set.table, set.jk));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(hij_kernel)
    ->ArgNames({"norbs", "bit_length"})
    ->Args({8, 16})
    ->Args({8, 20})
    ->Args({8, 7})
    ->Args({12, 24})
    ->Args({12, 7});

void parity_kernel(benchmark::State& state) {
    const int norbs = static_cast<int>(state.range(0));
    const PairSet set(norbs, 2, 2 * norbs);
    const auto occ = occupied_list(set.dets[0].bits);
    int q = 0;
    while (test_bit(set.dets[0].bits.words.data(), set.dets[0].bits.cfg, q)) ++q;
    for (auto _ : state)
        benchmark::DoNotOptimize(parity_single(set.dets[0], occ.front(), q));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(parity_kernel)->ArgName("norbs")->Arg(8)->Arg(16);

void difference_kernel(benchmark::State& state) {
    const PairSet set(static_cast<int>(state.range(0)), 2, 2 * static_cast<int>(state.range(0)));
    std::size_t at = 0;
    for (auto _ : state) {
        const auto& [i, j] = set.pairs[at];
        at = (at + 1) % set.pairs.size();
        benchmark::DoNotOptimize(difference(set.dets[i], set.dets[j]));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(difference_kernel)->ArgName("norbs")->Arg(8)->Arg(16);

} // namespace
