// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/run.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <detci/detfile.hpp>
#include <detci/oracle.hpp>

namespace detci {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

const char* status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIterationsReached: return "max_iterations";
        case SolveStatus::Stagnated: return "stagnated";
    }
    return "unknown";
}

// Beta strings are shuffled with a stream decorrelated from the alpha one.
constexpr std::uint64_t kBetaSeedOffset = 0x9e3779b97f4a7c15ULL;

} // namespace

RunReport run_diagonalization(const RunConfig& cfg) {
    const auto wall0 = std::chrono::steady_clock::now();
    RunReport report;
    report.config = cfg;

    auto t0 = std::chrono::steady_clock::now();
    std::ifstream fcidump(cfg.integrals_path);
    if (!fcidump)
        throw InputError("cannot open integrals file '" + cfg.integrals_path + "'");
    IntegralTable table = parse_fcidump(fcidump);

    std::ifstream dets(cfg.dets_path);
    if (!dets) throw InputError("cannot open determinant list '" + cfg.dets_path + "'");
    DetList list = parse_det_list(dets);
    report.timings.io = seconds_since(t0);

    if (list.norbs != table.norbs())
        throw InputError("determinant list norbs " + std::to_string(list.norbs) +
                         " does not match FCIDUMP NORB " + std::to_string(table.norbs()));

    if (cfg.shuffle) {
        shuffle_strings(list.alpha, cfg.seed);
        shuffle_strings(list.beta, cfg.seed + kBetaSeedOffset);
    }

    BasisOptions basis_opts;
    basis_opts.bit_length = cfg.bit_length;
    basis_opts.cache = cfg.cache;
    basis_opts.memory_budget_bytes = cfg.memory_budget_bytes;
    basis_opts.workers = cfg.workers;
    const Basis basis =
        build_basis(std::move(list.alpha), std::move(list.beta), std::move(table), basis_opts);
    report.timings.diag_precompute = basis.stats.diag_seconds;
    report.dimension = basis.dimension();
    report.n_alpha = basis.n_alpha();
    report.n_beta = basis.n_beta();
    report.norbs = basis.norbs;

    const DecompositionPlan plan = plan_decomposition(cfg.a, cfg.b, cfg.t, cfg.r, basis);

    LinearOperator apply_h;
    StoredMatrix stored;
    if (cfg.method == Method::Stored) {
        t0 = std::chrono::steady_clock::now();
        stored = build_stored_matrix(basis, cfg.memory_budget_bytes, cfg.workers);
        report.timings.stored_build = seconds_since(t0);
        apply_h = [&stored, &report, &cfg](std::span<const double> x, std::span<double> y) {
            const auto start = std::chrono::steady_clock::now();
            stored_matvec(stored, x, y, cfg.workers);
            report.timings.matvec_stored += seconds_since(start);
        };
    } else {
        apply_h = [&basis, &plan, &report, &cfg](std::span<const double> x,
                                                 std::span<double> y) {
            MatvecTimings timings;
            matvec(basis, plan, x, y, cfg.workers, &timings);
            report.timings.matvec_alpha += timings.alpha_seconds;
            report.timings.matvec_beta += timings.beta_seconds;
            report.timings.matvec_mixed += timings.mixed_seconds;
        };
    }

    DavidsonOptions solver_opts;
    solver_opts.tol = cfg.tol;
    solver_opts.max_iter = cfg.max_iter;
    solver_opts.max_subspace = cfg.max_subspace;
    const DavidsonResult solved = davidson_solve(apply_h, basis.diag, solver_opts);

    report.ground_energy = solved.energy;
    report.iterations = static_cast<int>(solved.trace.iterations.size());
    report.converged = solved.converged;
    report.status = solved.status;
    report.trace = solved.trace;
    for (const IterationStats& it : report.trace.iterations) {
        report.timings.orthogonalization += it.orthogonalization_seconds;
        report.timings.subspace_solve += it.subspace_solve_seconds;
    }
    report.timings.total = seconds_since(wall0);
    return report;
}

namespace {

std::string emit_text(const RunReport& r) {
    std::ostringstream out;
    const RunConfig& cfg = r.config;
    out << "detci run\n";
    out << "  integrals      " << cfg.integrals_path << '\n';
    out << "  determinants   " << cfg.dets_path << '\n';
    out << "  dimension      " << r.dimension << " (n_alpha " << r.n_alpha << " x n_beta "
        << r.n_beta << ", norbs " << r.norbs << ")\n";
    int effective_bit_length = cfg.bit_length;
    if (effective_bit_length == 0) effective_bit_length = 2 * r.norbs <= 64 ? 2 * r.norbs : 20;
    out << "  method         " << (cfg.method == Method::Stored ? "stored" : "matrix_free")
        << ", decomposition (" << cfg.a << ',' << cfg.b << ',' << cfg.t << ',' << cfg.r
        << "), cache " << (cfg.cache ? "on" : "off") << ", bit_length " << effective_bit_length
        << '\n';
    out << "  shuffle        " << (cfg.shuffle ? "on" : "off") << " (seed " << cfg.seed
        << "), workers " << cfg.workers << '\n';
    out << "  solver         tol " << format_double("%.3e", cfg.tol) << ", max_iter "
        << cfg.max_iter << ", max_subspace " << cfg.max_subspace << '\n';
    out << '\n';
    out << "  iter          ritz_value   residual_norm\n";
    for (std::size_t i = 0; i < r.trace.iterations.size(); ++i) {
        const IterationStats& it = r.trace.iterations[i];
        char line[128];
        std::snprintf(line, sizeof line, "  %4zu%c %20.12e %15.6e\n", i + 1,
                      it.restarted ? 'R' : ' ', it.ritz_value, it.residual_norm);
        out << line;
    }
    out << '\n';
    out << "  status         " << status_name(r.status) << " in " << r.iterations
        << " iterations\n";
    if (cfg.include_timings) {
        const PhaseTimings& t = r.timings;
        out << "  timings (s)    io " << format_double("%.4f", t.io) << ", diag "
            << format_double("%.4f", t.diag_precompute);
        if (cfg.method == Method::Stored) {
            out << ", stored_build " << format_double("%.4f", t.stored_build)
                << ", matvec " << format_double("%.4f", t.matvec_stored);
        } else {
            out << ", matvec alpha " << format_double("%.4f", t.matvec_alpha) << " / beta "
                << format_double("%.4f", t.matvec_beta) << " / mixed "
                << format_double("%.4f", t.matvec_mixed);
        }
        out << ", orth " << format_double("%.4f", t.orthogonalization) << ", subspace "
            << format_double("%.4f", t.subspace_solve) << ", total "
            << format_double("%.4f", t.total) << '\n';
    }
    out << "GROUND_ENERGY " << format_double("%.12e", r.ground_energy) << '\n';
    return out.str();
}

std::string emit_json(const RunReport& r) {
    using nlohmann::json;
    const RunConfig& cfg = r.config;
    json doc;
    doc["config"] = {
        {"integrals", cfg.integrals_path},
        {"determinants", cfg.dets_path},
        {"bit_length", cfg.bit_length},
        {"decomposition", {cfg.a, cfg.b, cfg.t, cfg.r}},
        {"method", cfg.method == Method::Stored ? "stored" : "matrix_free"},
        {"cache", cfg.cache},
        {"shuffle", cfg.shuffle},
        {"seed", cfg.seed},
        {"tol", cfg.tol},
        {"max_iter", cfg.max_iter},
        {"max_subspace", cfg.max_subspace},
        {"memory_budget_bytes", cfg.memory_budget_bytes},
        {"workers", cfg.workers},
    };
    doc["system"] = {
        {"norbs", r.norbs},
        {"n_alpha", r.n_alpha},
        {"n_beta", r.n_beta},
        {"dimension", r.dimension},
    };
    doc["result"] = {
        {"ground_energy", r.ground_energy},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"status", status_name(r.status)},
    };
    json trace = json::array();
    for (const IterationStats& it : r.trace.iterations) {
        json entry = {
            {"ritz_value", it.ritz_value},
            {"residual_norm", it.residual_norm},
            {"max_gram_deviation", it.max_gram_deviation},
            {"restarted", it.restarted},
        };
        if (cfg.include_timings) {
            entry["timings"] = {
                {"matvec", it.matvec_seconds},
                {"orthogonalization", it.orthogonalization_seconds},
                {"subspace_solve", it.subspace_solve_seconds},
            };
        }
        trace.push_back(std::move(entry));
    }
    doc["trace"] = std::move(trace);
    if (cfg.include_timings) {
        const PhaseTimings& t = r.timings;
        doc["timings"] = {
            {"io", t.io},
            {"diag_precompute", t.diag_precompute},
            {"matvec_alpha", t.matvec_alpha},
            {"matvec_beta", t.matvec_beta},
            {"matvec_mixed", t.matvec_mixed},
            {"stored_build", t.stored_build},
            {"matvec_stored", t.matvec_stored},
            {"orthogonalization", t.orthogonalization},
            {"subspace_solve", t.subspace_solve},
            {"total", t.total},
        };
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? emit_json(report) : emit_text(report);
}

} // namespace detci
