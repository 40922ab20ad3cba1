// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file davidson.hpp
 * @brief Davidson eigensolver for the lowest eigenpair of a symmetric
 *        operator, with diagonal preconditioning, modified Gram-Schmidt
 *        orthogonalization and subspace restarts.
 *
 * The solver is single-threaded orchestration: only the supplied operator is
 * allowed to run in parallel.  All reductions use a fixed left-to-right
 * accumulation order, so identical inputs give bitwise-identical energies and
 * traces across runs and worker counts.
 */

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <detci/error.hpp>

namespace detci {

/// y = H x for a symmetric operator consistent with the supplied diagonal.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct DavidsonOptions {
    double tol = 1e-8;                 ///< residual 2-norm threshold
    int max_iter = 200;
    int max_subspace = 20;             ///< collapse to the Ritz vector beyond this
    std::vector<double> initial_guess; ///< empty: unit vector at argmin diag
};

struct IterationStats {
    double ritz_value = 0.0;
    double residual_norm = 0.0;
    double matvec_seconds = 0.0;
    double orthogonalization_seconds = 0.0;
    double subspace_solve_seconds = 0.0;
    /// max |<v_i, v_j> - delta_ij| over the current subspace.
    double max_gram_deviation = 0.0;
    /// True when the subspace was collapsed since the previous entry.
    bool restarted = false;
};

struct ConvergenceTrace {
    std::vector<IterationStats> iterations;
};

enum class SolveStatus {
    Converged,
    MaxIterationsReached, ///< residual still above tol after max_iter steps
    Stagnated             ///< correction vector fully inside the subspace
};

struct DavidsonResult {
    SolveStatus status = SolveStatus::Converged;
    bool converged = false;
    double energy = 0.0;
    std::vector<double> eigenvector;
    ConvergenceTrace trace;
};

/// Sum x[i]*y[i] in fixed left-to-right order; throws InputError on length
/// mismatch.
double inner_product(std::span<const double> x, std::span<const double> y);

/// Modified Gram-Schmidt projection of `candidate` against the orthonormal
/// set `vs`, one full re-orthogonalization pass, then normalization.
/// Returns nullopt (linear dependence) when the post-projection norm falls
/// below 1e-10.
std::optional<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vs,
                                                  std::span<const double> candidate);

/// correction[i] = residual[i] / (diag[i] - theta), the denominator clamped
/// to sign(denominator) * 1e-8 when its magnitude falls below 1e-8.
std::vector<double> precondition(std::span<const double> residual, std::span<const double> diag,
                                 double theta);

/// Smallest eigenpair of the operator.  Non-convergence and stagnation are
/// reported through the status (with the trace so far), not by throwing.
DavidsonResult davidson_solve(const LinearOperator& apply_h, std::span<const double> diag,
                              const DavidsonOptions& opts = {});

} // namespace detci
