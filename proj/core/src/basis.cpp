// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/basis.hpp>

#include <chrono>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <detci/slater_condon.hpp>

namespace detci {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Repacks one channel and checks that every string carries the same number
// of electrons.
std::vector<BitString> prepare_channel(std::vector<BitString> strings, int norbs,
                                       int bit_length, const char* channel, int& n_elec) {
    if (strings.empty())
        throw InputError(std::string("build_basis: empty ") + channel + " string list");
    std::vector<BitString> packed;
    packed.reserve(strings.size());
    const PackingConfig cfg = make_packing(norbs, bit_length);
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (strings[i].cfg.nbits != norbs)
            throw InputError(std::string("build_basis: ") + channel + " string " +
                             std::to_string(i) + " has wrong orbital count");
        packed.push_back(strings[i].cfg == cfg ? strings[i] : repack(strings[i], bit_length));
        const int popcount = popcount_words(packed.back().words.data(), cfg.nwords);
        if (i == 0) {
            n_elec = popcount;
        } else if (popcount != n_elec) {
            throw InputError(std::string("build_basis: inconsistent electron count in ") +
                             channel + " strings (string " + std::to_string(i) + ")");
        }
    }
    return packed;
}

} // namespace

int resolve_workers(int requested) {
    if (requested > 0) return requested;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void Basis::determinant_words(std::size_t ia, std::size_t ib, std::uint64_t* out) const {
    if (has_cache()) {
        const std::uint64_t* src = cached_determinant(ia * n_beta() + ib);
        std::copy(src, src + det_packing.nwords, out);
        return;
    }
    interleave_words(alpha_strings[ia].words.data(), beta_strings[ib].words.data(),
                     channel_packing, out, det_packing);
}

Determinant Basis::determinant(std::size_t ia, std::size_t ib) const {
    Determinant d;
    d.bits.cfg = det_packing;
    d.bits.words.assign(static_cast<std::size_t>(det_packing.nwords), 0);
    determinant_words(ia, ib, d.bits.words.data());
    return d;
}

Basis build_basis(std::vector<BitString> alpha_strings, std::vector<BitString> beta_strings,
                  IntegralTable table, const BasisOptions& opts) {
    Basis basis;
    basis.norbs = table.norbs();
    const int norbs_spin = 2 * basis.norbs;
    if (norbs_spin > kMaxKernelBits)
        throw InputError("build_basis: " + std::to_string(norbs_spin) +
                         " spin-orbitals exceed the kernel limit of " +
                         std::to_string(kMaxKernelBits));

    int bit_length = opts.bit_length;
    if (bit_length == 0) bit_length = norbs_spin <= 64 ? norbs_spin : 20;
    basis.channel_packing = make_packing(basis.norbs, bit_length);
    basis.det_packing = make_packing(norbs_spin, bit_length);

    basis.alpha_strings = prepare_channel(std::move(alpha_strings), basis.norbs, bit_length,
                                          "alpha", basis.n_elec_alpha);
    basis.beta_strings = prepare_channel(std::move(beta_strings), basis.norbs, bit_length,
                                         "beta", basis.n_elec_beta);
    basis.integrals = std::move(table);
    basis.jk = build_direct_exchange(basis.integrals);

    const int workers = resolve_workers(opts.workers);
    const std::size_t na = basis.n_alpha();
    const std::size_t nb = basis.n_beta();
    const std::size_t dim = basis.dimension();
    const std::size_t det_words = static_cast<std::size_t>(basis.det_packing.nwords);

    auto t0 = std::chrono::steady_clock::now();
    basis.singles_a = generate_singles(basis.alpha_strings, basis.norbs);
    basis.doubles_a = generate_doubles(basis.alpha_strings, basis.norbs);
    basis.singles_b = generate_singles(basis.beta_strings, basis.norbs);
    basis.doubles_b = generate_doubles(basis.beta_strings, basis.norbs);
    basis.stats.connectivity_seconds = seconds_since(t0);

    if (opts.cache) {
        const std::uint64_t required = static_cast<std::uint64_t>(dim) * det_words * 8;
        if (required > opts.memory_budget_bytes)
            throw CapacityError("determinant cache requires " + std::to_string(required) +
                                " bytes, budget is " +
                                std::to_string(opts.memory_budget_bytes) + " bytes");
        t0 = std::chrono::steady_clock::now();
        basis.det_cache.assign(dim * det_words, 0);
        #pragma omp parallel for schedule(static) num_threads(workers) collapse(2)
        for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(na); ++ia) {
            for (std::ptrdiff_t ib = 0; ib < static_cast<std::ptrdiff_t>(nb); ++ib) {
                const std::size_t index = static_cast<std::size_t>(ia) * nb + ib;
                interleave_words(basis.alpha_strings[ia].words.data(),
                                 basis.beta_strings[ib].words.data(), basis.channel_packing,
                                 basis.det_cache.data() + index * det_words,
                                 basis.det_packing);
            }
        }
        basis.stats.cache_seconds = seconds_since(t0);
    }

    t0 = std::chrono::steady_clock::now();
    basis.diag.assign(dim, 0.0);
    #pragma omp parallel for schedule(static) num_threads(workers)
    for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(na); ++ia) {
        std::vector<std::uint64_t> det(det_words);
        for (std::size_t ib = 0; ib < nb; ++ib) {
            basis.determinant_words(static_cast<std::size_t>(ia), ib, det.data());
            basis.diag[static_cast<std::size_t>(ia) * nb + ib] =
                zero_excite_words(det.data(), basis.det_packing, basis.integrals, basis.jk);
        }
    }
    basis.stats.diag_seconds = seconds_since(t0);

    return basis;
}

} // namespace detci
