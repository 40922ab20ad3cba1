// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: second-quantized matrix elements by
 *        explicit operator application, dense Hamiltonian construction, a
 *        dense symmetric eigensolver, and the coefficient-threshold basis
 *        selector used to generate test cases.
 *
 * This module deliberately shares no code with the Slater-Condon kernels:
 * occupations live in plain 64-bit masks, signs come from counting occupied
 * spin-orbitals below the acted position, and integrals are traversed over
 * all index quadruples.  It is allowed to be slow.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <detci/basis.hpp>
#include <detci/bitstring.hpp>
#include <detci/integrals.hpp>

namespace detci {

struct DenseHamiltonian {
    std::size_t n = 0;
    std::vector<double> values; ///< row-major n x n, symmetric

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// <bra| H |ket> by explicit application of every h[p][q] a+_p a_q and
/// (pq|rs) a+_p a+_r a_s a_q term on occupation masks.  Limited to 64
/// spin-orbitals; throws InputError when total electron counts differ.
double brute_force_hij(const Determinant& bra, const Determinant& ket,
                       const IntegralTable& table);

/// values[I][J] = brute_force_hij(det(I), det(J)); throws CapacityError above
/// `cap`.  Construction parallelizes over rows.
DenseHamiltonian dense_hamiltonian(const Basis& basis, std::size_t cap = 4000, int workers = 0);

/// Lowest eigenvalue and unit eigenvector of a symmetric matrix; throws
/// InputError on non-finite entries.
std::pair<double, std::vector<double>> dense_ground_state(const DenseHamiltonian& m);

/// Keeps determinants whose coefficient magnitude exceeds `cutoff` (cutoff 0
/// keeps everything) and returns the deduplicated, ascending alpha and beta
/// strings of the kept set.  The selected basis is their tensor product.
/// Throws InputError for a negative cutoff or an empty selection.
std::pair<std::vector<BitString>, std::vector<BitString>> select_basis(
    const Basis& full_basis, std::span<const double> fci_vector, double cutoff);

/// All C(norbs, n_elec) strings with n_elec bits set, in ascending numeric
/// order, packed at `bit_length` (0 selects single-word packing).
std::vector<BitString> full_channel_strings(int norbs, int n_elec, int bit_length = 0);

/// (n_alpha, n_beta) from a total electron count and twice the spin
/// projection; throws InputError when they are inconsistent.
std::pair<int, int> channel_electron_counts(int n_elec, int ms2);

} // namespace detci
