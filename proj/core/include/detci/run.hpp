// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file run.hpp
 * @brief End-to-end driver: parse inputs, build the basis, run the solver
 *        with a chosen method and decomposition, and emit the report.
 */

#pragma once

#include <cstdint>
#include <string>

#include <detci/davidson.hpp>
#include <detci/matvec.hpp>

namespace detci {

enum class Method { MatrixFree, Stored };

enum class ReportFormat { Text, Json };

struct RunConfig {
    std::string integrals_path;
    std::string dets_path;
    int bit_length = 0; ///< 0: spin-orbital count when <= 64, else 20
    int a = 1, b = 1, t = 1, r = 1;
    Method method = Method::MatrixFree;
    bool cache = true;
    bool shuffle = false;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    int max_iter = 200;
    int max_subspace = 20;
    std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
    int workers = 0;
    bool include_timings = true; ///< cleared by --no-timings
};

struct PhaseTimings {
    double io = 0.0;
    double diag_precompute = 0.0;
    double matvec_alpha = 0.0;
    double matvec_beta = 0.0;
    double matvec_mixed = 0.0;
    double stored_build = 0.0;
    double matvec_stored = 0.0;
    double orthogonalization = 0.0;
    double subspace_solve = 0.0;
    double total = 0.0;
};

struct RunReport {
    double ground_energy = 0.0;
    int iterations = 0;
    bool converged = false;
    SolveStatus status = SolveStatus::Converged;
    std::size_t dimension = 0;
    std::size_t n_alpha = 0;
    std::size_t n_beta = 0;
    int norbs = 0;
    ConvergenceTrace trace;
    PhaseTimings timings;
    RunConfig config; ///< echo of the effective configuration
};

/// Runs the full pipeline.  Non-convergence is reported through the status,
/// input problems by throwing.
RunReport run_diagonalization(const RunConfig& cfg);

/// Text reports carry exactly one final `GROUND_ENERGY <value .12e>` line;
/// JSON reports are a single stable-schema document.  Timing fields are
/// omitted when the config disabled them.
std::string emit_report(const RunReport& report, ReportFormat format);

} // namespace detci
