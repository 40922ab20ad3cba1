// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/oracle.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace detci {

namespace {

// Occupation mask over interleaved spin-orbitals (spatial p -> 2p alpha,
// 2p+1 beta).  The oracle works on plain integers only.
using Mask = std::uint64_t;

// Applies a_i; returns false when the spin-orbital is empty.  The sign is
// (-1)^(occupied below i).
inline bool annihilate(Mask& m, int i, int& sign) {
    const Mask bit = Mask{1} << i;
    if (!(m & bit)) return false;
    if (std::popcount(m & (bit - 1)) & 1) sign = -sign;
    m ^= bit;
    return true;
}

inline bool create(Mask& m, int i, int& sign) {
    const Mask bit = Mask{1} << i;
    if (m & bit) return false;
    if (std::popcount(m & (bit - 1)) & 1) sign = -sign;
    m ^= bit;
    return true;
}

Mask mask_of(const Determinant& d) {
    if (d.norbs_spin() > 64)
        throw InputError("oracle: at most 64 spin-orbitals supported, got " +
                         std::to_string(d.norbs_spin()));
    Mask m = 0;
    for (const int i : occupied_list(d.bits)) m |= Mask{1} << i;
    return m;
}

// Dense integral copies so the inner quadruple loop is plain array reads.
struct OracleTables {
    int norbs;
    double core;
    std::vector<double> h;   // norbs x norbs
    std::vector<double> eri; // norbs^4, chemist (pq|rs)

    explicit OracleTables(const IntegralTable& table) : norbs(table.norbs()) {
        core = table.core_energy();
        const std::size_t n = static_cast<std::size_t>(norbs);
        h.resize(n * n);
        eri.resize(n * n * n * n);
        for (int p = 0; p < norbs; ++p)
            for (int q = 0; q < norbs; ++q) h[p * n + q] = table.one_electron(p, q);
        for (int p = 0; p < norbs; ++p)
            for (int q = 0; q < norbs; ++q)
                for (int r = 0; r < norbs; ++r)
                    for (int s = 0; s < norbs; ++s)
                        eri[((p * n + q) * n + r) * n + s] = table.two_electron(p, q, r, s);
    }
};

double element(const OracleTables& t, Mask bra, Mask ket) {
    const std::size_t n = static_cast<std::size_t>(t.norbs);
    double acc = (bra == ket) ? t.core : 0.0;

    // One-electron part: sum_{pq,sigma} h[p][q] a+_{p sigma} a_{q sigma}.
    for (int p = 0; p < t.norbs; ++p) {
        for (int q = 0; q < t.norbs; ++q) {
            const double hpq = t.h[p * n + q];
            if (hpq == 0.0) continue;
            for (int spin = 0; spin < 2; ++spin) {
                Mask m = ket;
                int sign = 1;
                if (!annihilate(m, 2 * q + spin, sign)) continue;
                if (!create(m, 2 * p + spin, sign)) continue;
                if (m == bra) acc += sign * hpq;
            }
        }
    }

    // Two-electron part:
    // 1/2 sum_{pqrs, sigma tau} (pq|rs) a+_{p sigma} a+_{r tau} a_{s tau} a_{q sigma}.
    for (int p = 0; p < t.norbs; ++p) {
        for (int q = 0; q < t.norbs; ++q) {
            for (int r = 0; r < t.norbs; ++r) {
                for (int s = 0; s < t.norbs; ++s) {
                    const double v = t.eri[((p * n + q) * n + r) * n + s];
                    if (v == 0.0) continue;
                    for (int sigma = 0; sigma < 2; ++sigma) {
                        for (int tau = 0; tau < 2; ++tau) {
                            Mask m = ket;
                            int sign = 1;
                            if (!annihilate(m, 2 * q + sigma, sign)) continue;
                            if (!annihilate(m, 2 * s + tau, sign)) continue;
                            if (!create(m, 2 * r + tau, sign)) continue;
                            if (!create(m, 2 * p + sigma, sign)) continue;
                            if (m == bra) acc += 0.5 * sign * v;
                        }
                    }
                }
            }
        }
    }
    return acc;
}

} // namespace

double brute_force_hij(const Determinant& bra, const Determinant& ket,
                       const IntegralTable& table) {
    if (bra.bits.cfg.nbits != ket.bits.cfg.nbits)
        throw InputError("brute_force_hij: determinants differ in spin-orbital count");
    const Mask mb = mask_of(bra);
    const Mask mk = mask_of(ket);
    if (std::popcount(mb) != std::popcount(mk))
        throw InputError("brute_force_hij: electron counts differ");
    return element(OracleTables(table), mb, mk);
}

DenseHamiltonian dense_hamiltonian(const Basis& basis, std::size_t cap, int workers) {
    const std::size_t dim = basis.dimension();
    if (dim > cap)
        throw CapacityError("dense oracle: dimension " + std::to_string(dim) +
                            " exceeds the cap of " + std::to_string(cap));
    const OracleTables tables(basis.integrals);

    std::vector<Mask> masks(dim);
    const std::size_t nb = basis.n_beta();
    for (std::size_t ia = 0; ia < basis.n_alpha(); ++ia) {
        Mask alpha_part = 0;
        for (const int p : occupied_list(basis.alpha_strings[ia]))
            alpha_part |= Mask{1} << (2 * p);
        for (std::size_t ib = 0; ib < nb; ++ib) {
            Mask m = alpha_part;
            for (const int p : occupied_list(basis.beta_strings[ib]))
                m |= Mask{1} << (2 * p + 1);
            masks[ia * nb + ib] = m;
        }
    }

    DenseHamiltonian dense;
    dense.n = dim;
    dense.values.assign(dim * dim, 0.0);
    const int nthreads = resolve_workers(workers);
    #pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(dim); ++i) {
        const std::size_t I = static_cast<std::size_t>(i);
        for (std::size_t J = I; J < dim; ++J) {
            // a+ a+ a a changes at most four occupations.
            if (std::popcount(masks[I] ^ masks[J]) > 4) continue;
            const double v = element(tables, masks[I], masks[J]);
            dense.values[I * dim + J] = v;
            dense.values[J * dim + I] = v;
        }
    }
    return dense;
}

std::pair<double, std::vector<double>> dense_ground_state(const DenseHamiltonian& m) {
    if (m.n == 0) throw InputError("dense_ground_state: empty matrix");
    for (const double v : m.values)
        if (!std::isfinite(v)) throw InputError("dense_ground_state: non-finite entry");

    const Eigen::Map<const Eigen::MatrixXd> mapped(m.values.data(),
                                                   static_cast<Eigen::Index>(m.n),
                                                   static_cast<Eigen::Index>(m.n));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(mapped);
    if (solver.info() != Eigen::Success)
        throw Error("dense_ground_state: eigensolver failed");
    std::vector<double> ground(m.n);
    for (std::size_t i = 0; i < m.n; ++i) ground[i] = solver.eigenvectors()(i, 0);
    return {solver.eigenvalues()(0), std::move(ground)};
}

std::pair<std::vector<BitString>, std::vector<BitString>> select_basis(
    const Basis& full_basis, std::span<const double> fci_vector, double cutoff) {
    if (cutoff < 0.0) throw InputError("select_basis: cutoff must be non-negative");
    if (fci_vector.size() != full_basis.dimension())
        throw InputError("select_basis: coefficient vector length does not match basis");

    const std::size_t nb = full_basis.n_beta();
    std::vector<char> keep_alpha(full_basis.n_alpha(), 0);
    std::vector<char> keep_beta(nb, 0);
    bool any = false;
    for (std::size_t index = 0; index < fci_vector.size(); ++index) {
        if (cutoff > 0.0 && !(std::abs(fci_vector[index]) > cutoff)) continue;
        keep_alpha[index / nb] = 1;
        keep_beta[index % nb] = 1;
        any = true;
    }
    if (!any)
        throw InputError("select_basis: cutoff " + std::to_string(cutoff) +
                         " keeps no determinants");

    std::vector<BitString> alpha, beta;
    for (std::size_t ia = 0; ia < keep_alpha.size(); ++ia)
        if (keep_alpha[ia]) alpha.push_back(full_basis.alpha_strings[ia]);
    for (std::size_t ib = 0; ib < keep_beta.size(); ++ib)
        if (keep_beta[ib]) beta.push_back(full_basis.beta_strings[ib]);
    std::sort(alpha.begin(), alpha.end(), bitstring_less);
    std::sort(beta.begin(), beta.end(), bitstring_less);
    return {std::move(alpha), std::move(beta)};
}

std::vector<BitString> full_channel_strings(int norbs, int n_elec, int bit_length) {
    if (norbs < 1 || norbs > 64)
        throw InputError("full_channel_strings: norbs must be in [1, 64]");
    if (n_elec < 0 || n_elec > norbs)
        throw InputError("full_channel_strings: electron count out of range");
    if (bit_length == 0) bit_length = norbs;
    const PackingConfig cfg = make_packing(norbs, bit_length);

    std::vector<BitString> strings;
    std::vector<int> occ(static_cast<std::size_t>(n_elec));
    // Ascending-mask enumeration of all n_elec-subsets.
    std::uint64_t mask =
        n_elec == 0 ? 0 : (n_elec == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_elec) - 1);
    const std::uint64_t limit =
        norbs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << norbs) - 1;
    while (true) {
        std::uint64_t rest = mask;
        for (int k = 0; rest; ++k) {
            occ[static_cast<std::size_t>(k)] = std::countr_zero(rest);
            rest &= rest - 1;
        }
        strings.push_back(from_occupied(occ, cfg));
        if (n_elec == 0 || mask == limit) break;
        // Gosper's hack: next mask with the same popcount.
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t ripple = mask + c;
        if (ripple < mask || ripple > limit) break;
        mask = ripple | (((mask ^ ripple) >> 2) / c);
    }
    return strings;
}

std::pair<int, int> channel_electron_counts(int n_elec, int ms2) {
    const int n_alpha = (n_elec + ms2) / 2;
    const int n_beta = n_elec - n_alpha;
    if ((n_elec + ms2) % 2 != 0 || n_alpha < 0 || n_beta < 0)
        throw InputError("inconsistent NELEC " + std::to_string(n_elec) + " / MS2 " +
                         std::to_string(ms2));
    return {n_alpha, n_beta};
}

} // namespace detci
