// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/davidson.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace detci {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Smallest eigenpair of the k x k projected matrix (lower triangle filled).
void solve_projected(const Eigen::MatrixXd& g, int k, double& theta,
                     Eigen::VectorXd& coeffs) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(g.topLeftCorner(k, k));
    if (solver.info() != Eigen::Success)
        throw Error("davidson: projected eigensolve failed");
    theta = solver.eigenvalues()(0);
    coeffs = solver.eigenvectors().col(0);
}

} // namespace

double inner_product(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw InputError("inner_product: length mismatch (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

std::optional<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vs,
                                                  std::span<const double> candidate) {
    constexpr double kDependenceThreshold = 1e-10;
    std::vector<double> v(candidate.begin(), candidate.end());
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& basis_vector : vs) {
            const double overlap = inner_product(basis_vector, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * basis_vector[i];
        }
    }
    const double norm = std::sqrt(inner_product(v, v));
    if (!(norm >= kDependenceThreshold)) return std::nullopt;
    for (double& e : v) e /= norm;
    return v;
}

std::vector<double> precondition(std::span<const double> residual, std::span<const double> diag,
                                 double theta) {
    if (residual.size() != diag.size())
        throw InputError("precondition: residual and diagonal lengths differ");
    constexpr double kClamp = 1e-8;
    std::vector<double> correction(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) {
        double denom = diag[i] - theta;
        if (std::abs(denom) < kClamp) denom = std::copysign(kClamp, denom);
        correction[i] = residual[i] / denom;
    }
    return correction;
}

DavidsonResult davidson_solve(const LinearOperator& apply_h, std::span<const double> diag,
                              const DavidsonOptions& opts) {
    const std::size_t n = diag.size();
    if (n == 0) throw InputError("davidson_solve: empty diagonal");
    if (!(opts.tol > 0.0)) throw ConfigError("davidson_solve: tol must be positive");
    if (opts.max_subspace < 2) throw ConfigError("davidson_solve: max_subspace must be >= 2");
    if (opts.max_iter < 1) throw ConfigError("davidson_solve: max_iter must be positive");

    // Initial vector: caller-provided, or the unit vector at the smallest
    // diagonal entry (ties broken by lowest index).
    std::vector<double> v0;
    if (!opts.initial_guess.empty()) {
        if (opts.initial_guess.size() != n)
            throw InputError("davidson_solve: initial guess length mismatch");
        v0 = opts.initial_guess;
        const double norm = std::sqrt(inner_product(v0, v0));
        if (!(norm > 0.0)) throw InputError("davidson_solve: zero initial guess");
        for (double& e : v0) e /= norm;
    } else {
        std::size_t argmin = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (diag[i] < diag[argmin]) argmin = i;
        v0.assign(n, 0.0);
        v0[argmin] = 1.0;
    }

    std::vector<std::vector<double>> subspace{std::move(v0)};
    std::vector<std::vector<double>> images; // H * subspace columns
    Eigen::MatrixXd projected(opts.max_subspace, opts.max_subspace);

    DavidsonResult result;
    bool restart_pending = false;

    std::vector<double> ritz(n), ritz_image(n), residual(n);
    double theta = 0.0;

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        IterationStats stats;
        stats.restarted = restart_pending;
        restart_pending = false;

        // One product per iteration: only the newest subspace vector lacks
        // its image.
        auto t0 = std::chrono::steady_clock::now();
        while (images.size() < subspace.size()) {
            std::vector<double> w(n);
            apply_h(subspace[images.size()], w);
            images.push_back(std::move(w));
        }
        stats.matvec_seconds = seconds_since(t0);

        const int k = static_cast<int>(subspace.size());
        t0 = std::chrono::steady_clock::now();
        for (int j = 0; j < k; ++j)
            projected(k - 1, j) = inner_product(subspace[static_cast<std::size_t>(k - 1)],
                                                images[static_cast<std::size_t>(j)]);
        Eigen::VectorXd coeffs;
        solve_projected(projected, k, theta, coeffs);
        stats.subspace_solve_seconds = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::fill(ritz.begin(), ritz.end(), 0.0);
        std::fill(ritz_image.begin(), ritz_image.end(), 0.0);
        for (int j = 0; j < k; ++j) {
            const double c = coeffs(j);
            const auto& vj = subspace[static_cast<std::size_t>(j)];
            const auto& wj = images[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < n; ++i) {
                ritz[i] += c * vj[i];
                ritz_image[i] += c * wj[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) residual[i] = ritz_image[i] - theta * ritz[i];
        const double residual_norm = std::sqrt(inner_product(residual, residual));

        double gram_dev = 0.0;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j <= i; ++j) {
                const double g = inner_product(subspace[static_cast<std::size_t>(i)],
                                               subspace[static_cast<std::size_t>(j)]);
                gram_dev = std::max(gram_dev, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        }
        stats.max_gram_deviation = gram_dev;
        stats.ritz_value = theta;
        stats.residual_norm = residual_norm;

        const bool converged = residual_norm <= opts.tol;
        const bool last_iteration = iter + 1 == opts.max_iter;
        if (converged || last_iteration) {
            stats.orthogonalization_seconds = seconds_since(t0);
            result.trace.iterations.push_back(stats);
            break;
        }

        std::vector<double> correction = precondition(residual, diag, theta);
        const double correction_norm = std::sqrt(inner_product(correction, correction));
        if (!(correction_norm > 0.0)) {
            stats.orthogonalization_seconds = seconds_since(t0);
            result.trace.iterations.push_back(stats);
            result.status = SolveStatus::Stagnated;
            break;
        }
        for (double& e : correction) e /= correction_norm;

        if (static_cast<int>(subspace.size()) >= opts.max_subspace) {
            // Collapse to the current best Ritz vector.
            subspace.assign(1, ritz);
            images.assign(1, ritz_image);
            projected(0, 0) = inner_product(subspace[0], images[0]);
            restart_pending = true;
        }

        auto expanded = orthonormalize(subspace, correction);
        stats.orthogonalization_seconds = seconds_since(t0);
        result.trace.iterations.push_back(stats);
        if (!expanded) {
            result.status = SolveStatus::Stagnated;
            break;
        }
        subspace.push_back(std::move(*expanded));
    }

    const IterationStats& last = result.trace.iterations.back();
    if (result.status != SolveStatus::Stagnated)
        result.status = last.residual_norm <= opts.tol ? SolveStatus::Converged
                                                       : SolveStatus::MaxIterationsReached;
    result.converged = result.status == SolveStatus::Converged;
    result.energy = theta;
    const double norm = std::sqrt(inner_product(ritz, ritz));
    for (double& e : ritz) e /= norm;
    result.eigenvector = std::move(ritz);
    return result;
}

} // namespace detci
