// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <detci/oracle.hpp>
#include <detci/run.hpp>

#include "test_helpers.hpp"

using namespace detci;

namespace {

// Writes the full-space determinant list of a fixture next to the test
// binary and returns its path.
std::string full_det_list(const char* fixture, const char* tag) {
    const IntegralTable table = detci::test::load_fixture(fixture);
    const auto [n_alpha, n_beta] = channel_electron_counts(table.n_elec(), table.ms2());
    DetList list;
    list.norbs = table.norbs();
    list.alpha = full_channel_strings(table.norbs(), n_alpha);
    list.beta = full_channel_strings(table.norbs(), n_beta);
    const auto path = std::filesystem::temp_directory_path() /
                      (std::string("detci_test_") + tag + ".dets");
    std::ofstream out(path);
    write_det_list(list, out);
    return path.string();
}

RunConfig base_config(const char* fixture, const std::string& dets) {
    RunConfig cfg;
    cfg.integrals_path = detci::test::fixture_path(fixture).string();
    cfg.dets_path = dets;
    return cfg;
}

} // namespace

TEST_SUITE("run") {

TEST_CASE("full pipeline matches the dense oracle") {
    const auto dets = full_det_list("h4_chain.fcidump", "h4_full");
    const RunConfig cfg = base_config("h4_chain.fcidump", dets);
    const RunReport report = run_diagonalization(cfg);
    CHECK(report.converged);
    CHECK(report.dimension == 36);
    CHECK(report.n_alpha == 6);
    CHECK(report.iterations == static_cast<int>(report.trace.iterations.size()));

    const auto [exact, vec] =
        dense_ground_state(dense_hamiltonian(detci::test::fixture_full_basis("h4_chain.fcidump")));
    CHECK(std::abs(report.ground_energy - exact) <= 1e-10 * std::abs(exact));
}

TEST_CASE("stored and matrix-free methods agree") {
    const auto dets = full_det_list("h4_chain.fcidump", "h4_methods");
    RunConfig cfg = base_config("h4_chain.fcidump", dets);
    const double free_energy = run_diagonalization(cfg).ground_energy;
    cfg.method = Method::Stored;
    const double stored_energy = run_diagonalization(cfg).ground_energy;
    CHECK(std::abs(free_energy - stored_energy) <= 1e-12 * std::abs(free_energy));
}

TEST_CASE("decomposition choice leaves the energy bitwise identical") {
    const auto dets = full_det_list("h4_chain.fcidump", "h4_decomp");
    RunConfig cfg = base_config("h4_chain.fcidump", dets);
    const double reference = run_diagonalization(cfg).ground_energy;
    cfg.a = 2;
    cfg.b = 2;
    cfg.t = 2;
    CHECK(run_diagonalization(cfg).ground_energy == reference);
    cfg.workers = 3;
    CHECK(run_diagonalization(cfg).ground_energy == reference);
}

TEST_CASE("shuffle preserves the energy") {
    const auto dets = full_det_list("h4_chain.fcidump", "h4_shuffle");
    RunConfig cfg = base_config("h4_chain.fcidump", dets);
    const double reference = run_diagonalization(cfg).ground_energy;
    cfg.shuffle = true;
    cfg.seed = 1234;
    const double shuffled = run_diagonalization(cfg).ground_energy;
    CHECK(std::abs(shuffled - reference) <= 1e-12 * std::abs(reference));
}

TEST_CASE("r != 1 is rejected and missing files throw") {
    const auto dets = full_det_list("h2_minimal.fcidump", "h2_r");
    RunConfig cfg = base_config("h2_minimal.fcidump", dets);
    cfg.r = 2;
    CHECK_THROWS_AS(run_diagonalization(cfg), UnsupportedError);
    cfg = base_config("h2_minimal.fcidump", "/nonexistent/path.dets");
    CHECK_THROWS_AS(run_diagonalization(cfg), InputError);
}

TEST_CASE("text report carries exactly one GROUND_ENERGY line") {
    const auto dets = full_det_list("h2_minimal.fcidump", "h2_text");
    const RunReport report = run_diagonalization(base_config("h2_minimal.fcidump", dets));
    const std::string text = emit_report(report, ReportFormat::Text);
    std::size_t count = 0, at = 0;
    while ((at = text.find("GROUND_ENERGY", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    CHECK(count == 1);
    std::istringstream lines(text);
    std::string line, last_content;
    while (std::getline(lines, line))
        if (!line.empty()) last_content = line;
    CHECK(last_content.rfind("GROUND_ENERGY ", 0) == 0);
    char* end = nullptr;
    const double parsed = std::strtod(last_content.c_str() + 14, &end);
    CHECK(std::abs(parsed - report.ground_energy) <= 1e-11 * std::abs(report.ground_energy));
}

TEST_CASE("json report round-trips and honors the timing switch") {
    const auto dets = full_det_list("h2_minimal.fcidump", "h2_json");
    RunConfig cfg = base_config("h2_minimal.fcidump", dets);
    RunReport report = run_diagonalization(cfg);
    {
        const auto doc = nlohmann::json::parse(emit_report(report, ReportFormat::Json));
        CHECK(doc.contains("config"));
        CHECK(doc.contains("system"));
        CHECK(doc.contains("result"));
        CHECK(doc.contains("trace"));
        CHECK(doc.contains("timings"));
        CHECK(doc["result"]["converged"].get<bool>());
        CHECK(doc["system"]["dimension"].get<std::size_t>() == report.dimension);
        CHECK(doc["result"]["ground_energy"].get<double>() == report.ground_energy);
    }
    report.config.include_timings = false;
    const std::string stripped = emit_report(report, ReportFormat::Json);
    const auto doc = nlohmann::json::parse(stripped);
    CHECK(!doc.contains("timings"));
    CHECK(!doc["trace"][0].contains("timings"));

    // identical runs emit byte-identical timing-free reports
    RunReport again = run_diagonalization(cfg);
    again.config.include_timings = false;
    CHECK(emit_report(again, ReportFormat::Json) == stripped);
}

TEST_CASE("timing phases are non-negative and bounded by the total") {
    const auto dets = full_det_list("h4_chain.fcidump", "h4_timing");
    const RunReport report = run_diagonalization(base_config("h4_chain.fcidump", dets));
    const PhaseTimings& t = report.timings;
    for (const double v : {t.io, t.diag_precompute, t.matvec_alpha, t.matvec_beta,
                           t.matvec_mixed, t.orthogonalization, t.subspace_solve})
        CHECK(v >= 0.0);
    const double phase_sum = t.io + t.diag_precompute + t.matvec_alpha + t.matvec_beta +
                             t.matvec_mixed + t.orthogonalization + t.subspace_solve;
    CHECK(phase_sum <= t.total * 1.05 + 1e-6);
}

} // TEST_SUITE
