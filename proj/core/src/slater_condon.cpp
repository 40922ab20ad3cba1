// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/slater_condon.hpp>

#include <array>
#include <bit>
#include <string>

namespace detci {

namespace {

void check_kernel_capacity(const PackingConfig& cfg) {
    if (cfg.nbits > kMaxKernelBits)
        throw InputError("matrix-element kernels support at most " +
                         std::to_string(kMaxKernelBits) + " spin-orbitals, got " +
                         std::to_string(cfg.nbits));
}

} // namespace

double zero_excite_words(const std::uint64_t* det, const PackingConfig& cfg,
                         const IntegralTable& table, const DirectExchange& jk) {
    std::array<int, kMaxKernelBits> occ;
    const int n = collect_occupied(det, cfg, occ.data());

    double value = table.core_energy();
    for (int i = 0; i < n; ++i) {
        const SpinOrbital oi{occ[i]};
        value += table.one_electron(oi.spatial(), oi.spatial());
        for (int j = i + 1; j < n; ++j) {
            const SpinOrbital oj{occ[j]};
            value += jk.j(oi.spatial(), oj.spatial());
            if (oi.spin() == oj.spin()) value -= jk.k(oi.spatial(), oj.spatial());
        }
    }
    return value;
}

double one_excite_words(const std::uint64_t* bra, const std::uint64_t* ket,
                        const PackingConfig& cfg, const Difference& diff,
                        const IntegralTable& table) {
    if (diff.degree != 1)
        throw InputError("one_excite: excitation degree is not 1");
    const SpinOrbital p{diff.annihilated[0]}; // occupied in bra only
    const SpinOrbital q{diff.created[0]};     // occupied in ket only
    if (p.spin() != q.spin()) return 0.0;     // spin conservation

    double value = table.one_electron(p.spatial(), q.spatial());
    // Sum over ket-occupied r; the r == q self-term cancels exactly between
    // its direct and exchange parts.
    for (int w = 0; w < cfg.nwords; ++w) {
        std::uint64_t v = ket[w];
        const int base = w * cfg.bit_length;
        while (v) {
            const SpinOrbital r{base + std::countr_zero(v)};
            v &= v - 1;
            if (r.index == p.index) continue;
            value += table.two_electron(p.spatial(), q.spatial(), r.spatial(), r.spatial());
            if (r.spin() == p.spin())
                value -= table.two_electron(p.spatial(), r.spatial(), r.spatial(), q.spatial());
        }
    }
    return parity_single_words(bra, cfg, p.index, q.index) * value;
}

double two_excite_words(const std::uint64_t* bra, [[maybe_unused]] const std::uint64_t* ket,
                        const PackingConfig& cfg, const Difference& diff,
                        const IntegralTable& table) {
    if (diff.degree != 2)
        throw InputError("two_excite: excitation degree is not 2");
    const SpinOrbital p1{diff.annihilated[0]}, p2{diff.annihilated[1]};
    const SpinOrbital q1{diff.created[0]}, q2{diff.created[1]};

    const bool direct_ok = p1.spin() == q1.spin() && p2.spin() == q2.spin();
    const bool cross_ok = p1.spin() == q2.spin() && p2.spin() == q1.spin();
    if (!direct_ok && !cross_ok) return 0.0;

    std::array<std::uint64_t, kMaxKernelBits> scratch;
    const int sign =
        parity_double_words(bra, cfg, p1.index, p2.index, q1.index, q2.index, scratch.data());

    if (direct_ok) {
        double value =
            table.two_electron(p1.spatial(), q1.spatial(), p2.spatial(), q2.spatial());
        if (cross_ok)
            value -= table.two_electron(p1.spatial(), q2.spatial(), p2.spatial(), q1.spatial());
        return sign * value;
    }
    // Only the swapped pairing conserves spin; exchanging the two created
    // orbitals flips the fermionic sign of the canonical pairing.
    return -sign * table.two_electron(p1.spatial(), q2.spatial(), p2.spatial(), q1.spatial());
}

double hij_words(const std::uint64_t* bra, const std::uint64_t* ket, const PackingConfig& cfg,
                 const IntegralTable& table, const DirectExchange& jk) {
    const Difference diff = difference_words(bra, ket, cfg);
    switch (diff.degree) {
        case 0: return zero_excite_words(bra, cfg, table, jk);
        case 1: return one_excite_words(bra, ket, cfg, diff, table);
        case 2: return two_excite_words(bra, ket, cfg, diff, table);
        default: return 0.0;
    }
}

double zero_excite(const Determinant& d, const IntegralTable& table, const DirectExchange& jk) {
    check_kernel_capacity(d.bits.cfg);
    return zero_excite_words(d.bits.words.data(), d.bits.cfg, table, jk);
}

double one_excite(const Determinant& bra, const Determinant& ket, const Difference& diff,
                  const IntegralTable& table, const DirectExchange& /*jk*/) {
    if (bra.bits.cfg != ket.bits.cfg)
        throw InputError("one_excite: determinants must share one packing");
    check_kernel_capacity(bra.bits.cfg);
    return one_excite_words(bra.bits.words.data(), ket.bits.words.data(), bra.bits.cfg, diff,
                            table);
}

double two_excite(const Determinant& bra, const Determinant& ket, const Difference& diff,
                  const IntegralTable& table, const DirectExchange& /*jk*/) {
    if (bra.bits.cfg != ket.bits.cfg)
        throw InputError("two_excite: determinants must share one packing");
    check_kernel_capacity(bra.bits.cfg);
    return two_excite_words(bra.bits.words.data(), ket.bits.words.data(), bra.bits.cfg, diff,
                            table);
}

double hij(const Determinant& bra, const Determinant& ket, const IntegralTable& table,
           const DirectExchange& jk) {
    if (bra.bits.cfg != ket.bits.cfg)
        throw InputError("hij: determinants must share one packing");
    check_kernel_capacity(bra.bits.cfg);
    const int nb = popcount_words(bra.bits.words.data(), bra.bits.cfg.nwords);
    const int nk = popcount_words(ket.bits.words.data(), ket.bits.cfg.nwords);
    if (nb != nk)
        throw InputError("hij: electron counts differ (" + std::to_string(nb) + " vs " +
                         std::to_string(nk) + ")");
    return hij_words(bra.bits.words.data(), ket.bits.words.data(), bra.bits.cfg, table, jk);
}

} // namespace detci
