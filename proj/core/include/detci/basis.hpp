// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Tensor-product determinant basis: alpha strings x beta strings with
 *        precomputed diagonal, connectivity tables and an optional persistent
 *        determinant cache.
 *
 * The linear index of configuration (ia, ib) is I = ia * n_beta + ib.
 */

#pragma once

#include <cstdint>
#include <vector>

#include <detci/bitstring.hpp>
#include <detci/connectivity.hpp>
#include <detci/integrals.hpp>

namespace detci {

struct BasisOptions {
    /// Bits used per storage word; 0 selects the fast path: the spin-orbital
    /// count when it fits in one word, 20 otherwise.
    int bit_length = 0;
    /// Precompute every interleaved determinant once and reuse it.
    bool cache = true;
    /// Budget checked before cache and stored-matrix allocation.
    std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
    /// Worker threads for basis construction; 0 uses all available.
    int workers = 0;
};

struct BasisBuildStats {
    double connectivity_seconds = 0.0;
    double cache_seconds = 0.0;
    double diag_seconds = 0.0;
};

struct Basis {
    std::vector<BitString> alpha_strings;
    std::vector<BitString> beta_strings;
    PackingConfig channel_packing; ///< norbs bits per channel string
    PackingConfig det_packing;     ///< 2*norbs bits per determinant
    int norbs = 0;
    int n_elec_alpha = 0;
    int n_elec_beta = 0;

    IntegralTable integrals;
    DirectExchange jk;

    /// Flattened interleaved determinants, dimension * det_packing.nwords
    /// words; empty when the cache is disabled.
    std::vector<std::uint64_t> det_cache;
    /// diag[I] = <det(I)|H|det(I)>.
    std::vector<double> diag;

    FlatExcitationTable singles_a, doubles_a, singles_b, doubles_b;

    BasisBuildStats stats;

    std::size_t n_alpha() const { return alpha_strings.size(); }
    std::size_t n_beta() const { return beta_strings.size(); }
    std::size_t dimension() const { return alpha_strings.size() * beta_strings.size(); }
    bool has_cache() const { return !det_cache.empty(); }

    const std::uint64_t* cached_determinant(std::size_t index) const {
        return det_cache.data() + index * static_cast<std::size_t>(det_packing.nwords);
    }

    /// Writes the interleaved determinant of (ia, ib) into out
    /// (det_packing.nwords words), from the cache when present.
    void determinant_words(std::size_t ia, std::size_t ib, std::uint64_t* out) const;

    /// Value-level accessor for configuration I = ia * n_beta + ib.
    Determinant determinant(std::size_t ia, std::size_t ib) const;
};

/// Validates the string lists, repacks them at the requested bit_length, and
/// populates connectivity tables, the diagonal and (optionally) the
/// determinant cache.  Throws InputError on inconsistent popcounts or
/// duplicates and CapacityError when the cache would exceed the budget.
Basis build_basis(std::vector<BitString> alpha_strings, std::vector<BitString> beta_strings,
                  IntegralTable table, const BasisOptions& opts = {});

/// Effective worker count: `requested` when positive, all hardware threads
/// otherwise.
int resolve_workers(int requested);

} // namespace detci
