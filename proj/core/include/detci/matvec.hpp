// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matvec.hpp
 * @brief Matrix-free Hamiltonian-times-vector product over the tensor-product
 *        basis, (a,b,t) task decomposition, and the stored-sparse alternative.
 *
 * The product is gather-formulated: each output element is assembled by
 * exactly one worker in a fixed contribution order (diagonal, then
 * alpha-channel terms ascending, then beta-channel terms ascending, then
 * mixed single x single terms in lexicographic order), so the result is
 * bitwise deterministic for a fixed basis ordering regardless of the
 * decomposition plan and worker count.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <detci/basis.hpp>

namespace detci {

enum class TaskKind {
    AlphaExcite, ///< one or two alpha moves, beta string unchanged
    BetaExcite,  ///< one or two beta moves, alpha string unchanged
    Mixed        ///< one alpha and one beta move
};

struct Task {
    TaskKind kind;
    int alpha_block = -1; ///< set for BetaExcite and Mixed
    int beta_block = -1;  ///< set for AlphaExcite and Mixed
};

/// (a, b, t) partition of the work: alpha strings split into `a` contiguous
/// near-equal blocks, beta strings into `b`; the task list holds one
/// alpha-type task per beta block, one beta-type task per alpha block and one
/// mixed task per block pair, a*b + a + b tasks in total.  `t` deals tasks
/// round-robin into scheduling groups and never affects results.
struct DecompositionPlan {
    int a = 1, b = 1, t = 1, r = 1;
    std::vector<std::size_t> alpha_block_start; ///< size a + 1
    std::vector<std::size_t> beta_block_start;  ///< size b + 1
    std::vector<Task> tasks;
};

/// Throws UnsupportedError for r != 1 and InputError for block counts that
/// exceed the string counts.
DecompositionPlan plan_decomposition(int a, int b, int t, int r, const Basis& basis);

/// Wall time spent in each loop type of one product.
struct MatvecTimings {
    double alpha_seconds = 0.0;
    double beta_seconds = 0.0;
    double mixed_seconds = 0.0;
    double combine_seconds = 0.0;
};

/// y = H x, recomputing every matrix element on the fly.
void matvec(const Basis& basis, const DecompositionPlan& plan, std::span<const double> x,
            std::span<double> y, int workers = 0, MatvecTimings* timings = nullptr);

std::vector<double> matvec(const Basis& basis, const DecompositionPlan& plan,
                           std::span<const double> x, int workers = 0);

/// Per-row compressed storage of all structurally nonzero elements, the
/// diagonal included.  Row entries keep the gather order of matvec and the
/// values are produced by the same hij kernel.
struct StoredMatrix {
    std::size_t dimension = 0;
    std::vector<std::size_t> row_offset; ///< size dimension + 1
    std::vector<std::uint32_t> col;
    std::vector<double> value;

    std::size_t nonzero_count() const { return value.size(); }
};

/// Computes every structurally nonzero element once.  Throws CapacityError
/// when the estimate exceeds `memory_budget_bytes`.
StoredMatrix build_stored_matrix(const Basis& basis,
                                 std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30,
                                 int workers = 0);

/// y = H x from stored values.
void stored_matvec(const StoredMatrix& m, std::span<const double> x, std::span<double> y,
                   int workers = 0);

} // namespace detci
