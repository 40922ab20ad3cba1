// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater_condon.hpp
 * @brief Hamiltonian matrix elements H_ij = <bra|H|ket> between determinants.
 *
 * Elements are dispatched on the excitation degree between the two
 * determinants: a dedicated kernel for zero, one and two electron moves, and
 * exactly 0.0 beyond two.  Signs come from the occupied-between parity
 * convention of bitstring.hpp; correctness is pinned by the independent
 * second-quantized oracle in oracle.hpp.
 */

#pragma once

#include <cstdint>

#include <detci/bitstring.hpp>
#include <detci/integrals.hpp>

namespace detci {

/// Fixed capacity of the kernel scratch buffers (spin-orbitals per
/// determinant).  Mirrors the reference's bounded utility arrays.
inline constexpr int kMaxKernelBits = 256;

/// A spin-orbital index under the interleaved convention: spatial orbital p
/// maps to spin-orbitals 2p (alpha) and 2p+1 (beta).
struct SpinOrbital {
    int index = 0;

    int spatial() const { return index >> 1; }
    int spin() const { return index & 1; } // 0 = alpha, 1 = beta
};

// Raw word kernels (unchecked; cfg.nbits <= kMaxKernelBits).

/// Diagonal element: core + sum_i h_ii + sum_{i<j} (J_ij - delta_spin K_ij).
double zero_excite_words(const std::uint64_t* det, const PackingConfig& cfg,
                         const IntegralTable& table, const DirectExchange& jk);

/// Single-excitation element; returns 0.0 for a spin-flipping move.
double one_excite_words(const std::uint64_t* bra, const std::uint64_t* ket,
                        const PackingConfig& cfg, const Difference& diff,
                        const IntegralTable& table);

/// Double-excitation element; returns 0.0 when no spin-conserving pairing
/// of the moved orbitals exists.
double two_excite_words(const std::uint64_t* bra, const std::uint64_t* ket,
                        const PackingConfig& cfg, const Difference& diff,
                        const IntegralTable& table);

/// Full dispatch on the excitation degree; degree > 2 yields exactly 0.0.
double hij_words(const std::uint64_t* bra, const std::uint64_t* ket,
                 const PackingConfig& cfg, const IntegralTable& table,
                 const DirectExchange& jk);

// Validated value-level operations.

double zero_excite(const Determinant& d, const IntegralTable& table, const DirectExchange& jk);

double one_excite(const Determinant& bra, const Determinant& ket, const Difference& diff,
                  const IntegralTable& table, const DirectExchange& jk);

double two_excite(const Determinant& bra, const Determinant& ket, const Difference& diff,
                  const IntegralTable& table, const DirectExchange& jk);

/// <bra|H|ket>; throws InputError on mismatched shapes or electron counts.
double hij(const Determinant& bra, const Determinant& ket, const IntegralTable& table,
           const DirectExchange& jk);

} // namespace detci
