// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file detci.cpp
 * @brief Command-line driver: `run` executes the Davidson pipeline on an
 *        FCIDUMP plus a determinant list, `dense-eig` prints the brute-force
 *        ground energy, `gen-basis` thresholds the exact wavefunction into a
 *        determinant-list file.
 *
 * Exit codes: 0 converged / success, 1 input or configuration error,
 * 2 non-converged run.  Every flag can be preset through an environment
 * variable with the DETCI_ prefix (e.g. DETCI_BIT_LENGTH).
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <detci/detfile.hpp>
#include <detci/oracle.hpp>
#include <detci/run.hpp>

namespace {

using namespace detci;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

// Full tensor-product space of the FCIDUMP particle sector.
std::pair<std::vector<BitString>, std::vector<BitString>> full_space(const IntegralTable& table) {
    const auto [n_alpha, n_beta] = channel_electron_counts(table.n_elec(), table.ms2());
    return {full_channel_strings(table.norbs(), n_alpha),
            full_channel_strings(table.norbs(), n_beta)};
}

IntegralTable load_integrals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open integrals file '" + path + "'");
    return parse_fcidump(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    out << text;
}

int run_command(const RunConfig& cfg, ReportFormat format, const std::string& out_path) {
    const RunReport report = run_diagonalization(cfg);
    emit(emit_report(report, format), out_path);
    return report.converged ? kExitOk : kExitNotConverged;
}

int dense_eig_command(const std::string& integrals_path, const std::string& dets_path,
                      std::size_t cap, const std::string& out_path) {
    IntegralTable table = load_integrals(integrals_path);
    std::vector<BitString> alpha, beta;
    if (dets_path.empty()) {
        std::tie(alpha, beta) = full_space(table);
    } else {
        std::ifstream in(dets_path);
        if (!in) throw InputError("cannot open determinant list '" + dets_path + "'");
        DetList list = parse_det_list(in);
        if (list.norbs != table.norbs())
            throw InputError("determinant list norbs does not match FCIDUMP NORB");
        alpha = std::move(list.alpha);
        beta = std::move(list.beta);
    }
    const Basis basis = build_basis(std::move(alpha), std::move(beta), std::move(table));
    const auto [energy, vector] = dense_ground_state(dense_hamiltonian(basis, cap));
    char line[64];
    std::snprintf(line, sizeof line, "GROUND_ENERGY %.12e\n", energy);
    emit(std::string("dimension ") + std::to_string(basis.dimension()) + "\n" + line, out_path);
    return kExitOk;
}

int gen_basis_command(const std::string& integrals_path, double cutoff,
                      const std::string& out_path, std::size_t cap) {
    IntegralTable table = load_integrals(integrals_path);
    auto [alpha, beta] = full_space(table);
    const int norbs = table.norbs();
    const Basis full = build_basis(std::move(alpha), std::move(beta), std::move(table));
    const auto [energy, coefficients] = dense_ground_state(dense_hamiltonian(full, cap));
    auto [kept_alpha, kept_beta] = select_basis(full, coefficients, cutoff);

    DetList list;
    list.norbs = norbs;
    list.alpha = std::move(kept_alpha);
    list.beta = std::move(kept_beta);
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    write_det_list(list, out);

    std::cout << "full dimension " << full.dimension() << ", kept " << list.alpha.size()
              << " alpha x " << list.beta.size() << " beta strings (cutoff " << cutoff
              << ")\n";
    char line[64];
    std::snprintf(line, sizeof line, "GROUND_ENERGY %.12e\n", energy);
    std::cout << line;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"selected-CI subspace diagonalizer"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "diagonalize over a determinant list");
    RunConfig cfg;
    std::string format_name = "text";
    std::string out_path;
    std::vector<int> decomp;
    std::string method_name = "matrix_free";
    bool no_timings = false;
    run->add_option("--integrals", cfg.integrals_path, "FCIDUMP file")
        ->required()
        ->envname("DETCI_INTEGRALS");
    run->add_option("--dets", cfg.dets_path, "determinant list file")
        ->required()
        ->envname("DETCI_DETS");
    run->add_option("--bit-length", cfg.bit_length,
                    "bits per storage word (0 = spin-orbital count when it fits, else 20)")
        ->envname("DETCI_BIT_LENGTH");
    run->add_option("--decomp", decomp, "decomposition a,b,t,r (default 1,1,1,1)")
        ->delimiter(',')
        ->expected(4)
        ->envname("DETCI_DECOMP");
    run->add_option("--method", method_name, "matrix_free | stored")
        ->check(CLI::IsMember({"matrix_free", "stored"}))
        ->envname("DETCI_METHOD");
    run->add_flag("--cache,!--no-cache", cfg.cache, "persistent determinant cache (default on)")
        ->envname("DETCI_CACHE");
    run->add_flag("--shuffle", cfg.shuffle, "shuffle string order before building the basis")
        ->envname("DETCI_SHUFFLE");
    run->add_option("--seed", cfg.seed, "shuffle seed")->envname("DETCI_SEED");
    run->add_option("--tol", cfg.tol, "residual 2-norm convergence threshold")
        ->envname("DETCI_TOL");
    run->add_option("--max-iter", cfg.max_iter, "iteration cap")->envname("DETCI_MAX_ITER");
    run->add_option("--max-subspace", cfg.max_subspace, "subspace size before restart")
        ->envname("DETCI_MAX_SUBSPACE");
    run->add_option("--memory-budget", cfg.memory_budget_bytes,
                    "memory budget in bytes for caches and stored matrices")
        ->envname("DETCI_MEMORY_BUDGET");
    run->add_option("--workers", cfg.workers, "worker threads (0 = all)")
        ->envname("DETCI_WORKERS");
    run->add_option("--format", format_name, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("DETCI_FORMAT");
    run->add_flag("--no-timings", no_timings, "omit timing fields from the report")
        ->envname("DETCI_NO_TIMINGS");
    run->add_option("--out", out_path, "write the report to a file instead of stdout")
        ->envname("DETCI_OUT");

    // ---- dense-eig ----
    auto* dense = app.add_subcommand("dense-eig", "brute-force ground energy");
    std::string dense_integrals, dense_dets, dense_out;
    std::size_t oracle_cap = 4000;
    dense->add_option("--integrals", dense_integrals, "FCIDUMP file")
        ->required()
        ->envname("DETCI_INTEGRALS");
    dense->add_option("--dets", dense_dets,
                      "determinant list (omit for the full particle sector)")
        ->envname("DETCI_DETS");
    dense->add_option("--cap", oracle_cap, "dense dimension cap")->envname("DETCI_CAP");
    dense->add_option("--out", dense_out, "write output to a file")->envname("DETCI_OUT");

    // ---- gen-basis ----
    auto* gen = app.add_subcommand("gen-basis",
                                   "threshold the exact wavefunction into a determinant list");
    std::string gen_integrals, gen_out;
    double cutoff = 0.0;
    std::size_t gen_cap = 4000;
    gen->add_option("--integrals", gen_integrals, "FCIDUMP file")
        ->required()
        ->envname("DETCI_INTEGRALS");
    gen->add_option("--cutoff", cutoff, "coefficient magnitude threshold (0 keeps everything)")
        ->required()
        ->envname("DETCI_CUTOFF");
    gen->add_option("--out", gen_out, "determinant list output path")
        ->required()
        ->envname("DETCI_OUT");
    gen->add_option("--cap", gen_cap, "dense dimension cap")->envname("DETCI_CAP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (run->parsed()) {
            if (!decomp.empty()) {
                cfg.a = decomp[0];
                cfg.b = decomp[1];
                cfg.t = decomp[2];
                cfg.r = decomp[3];
            }
            cfg.method = method_name == "stored" ? Method::Stored : Method::MatrixFree;
            cfg.include_timings = !no_timings;
            const ReportFormat format =
                format_name == "json" ? ReportFormat::Json : ReportFormat::Text;
            return run_command(cfg, format, out_path);
        }
        if (dense->parsed())
            return dense_eig_command(dense_integrals, dense_dets, oracle_cap, dense_out);
        if (gen->parsed()) return gen_basis_command(gen_integrals, cutoff, gen_out, gen_cap);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
