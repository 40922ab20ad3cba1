// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include <detci/basis.hpp>
#include <detci/oracle.hpp>

namespace detci::bench {

/// Hubbard-like chain with long-range direct terms; same shape as the test
/// fixtures, sized programmatically.
inline IntegralTable make_chain_table(int norbs, int n_elec) {
    IntegralTable table(norbs, n_elec, 0);
    for (int p = 0; p < norbs; ++p) table.set_one_electron(p, p, -2.0 + 0.6 * p);
    for (int p = 0; p + 1 < norbs; ++p) table.set_one_electron(p, p + 1, -0.3);
    for (int p = 0; p + 2 < norbs; ++p) table.set_one_electron(p, p + 2, 0.05);
    for (int p = 0; p < norbs; ++p) table.set_two_electron(p, p, p, p, 0.9 + 0.02 * p);
    for (int p = 0; p < norbs; ++p) {
        for (int q = p + 1; q < norbs; ++q) {
            const double d = q - p;
            table.set_two_electron(p, p, q, q, 0.35 / ((1 + d) * (1 + d)));
            table.set_two_electron(p, q, q, p, 0.06 / ((1 + d) * (1 + d)));
        }
    }
    for (int p = 0; p + 2 < norbs; ++p) table.set_two_electron(p, p + 1, p + 1, p + 2, 0.03);
    for (int p = 0; p + 3 < norbs; ++p) table.set_two_electron(p, p + 1, p + 2, p + 3, 0.012);
    return table;
}

inline Basis make_chain_basis(int norbs, int electrons_per_channel, BasisOptions opts = {}) {
    IntegralTable table = make_chain_table(norbs, 2 * electrons_per_channel);
    auto alpha = full_channel_strings(norbs, electrons_per_channel);
    auto beta = full_channel_strings(norbs, electrons_per_channel);
    return build_basis(std::move(alpha), std::move(beta), std::move(table), opts);
}

} // namespace detci::bench
