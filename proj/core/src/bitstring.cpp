// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/bitstring.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace detci {

int word_count(int nbits, int bit_length) {
    if (bit_length < 1 || bit_length > 64)
        throw ConfigError("bit_length must be in [1, 64], got " + std::to_string(bit_length));
    if (nbits < 1)
        throw ConfigError("bit count must be positive, got " + std::to_string(nbits));
    return (nbits + bit_length - 1) / bit_length;
}

PackingConfig make_packing(int nbits, int bit_length) {
    return PackingConfig{nbits, bit_length, word_count(nbits, bit_length)};
}

bool bitstring_less(const BitString& a, const BitString& b) {
    if (a.cfg != b.cfg)
        throw InputError("bitstring_less: mismatched packing configs");
    for (int w = a.cfg.nwords - 1; w >= 0; --w) {
        if (a.words[w] != b.words[w]) return a.words[w] < b.words[w];
    }
    return false;
}

int popcount_words(const std::uint64_t* words, int nwords) {
    int n = 0;
    for (int w = 0; w < nwords; ++w) n += std::popcount(words[w]);
    return n;
}

int count_set_between(const std::uint64_t* words, const PackingConfig& cfg, int p, int q) {
    const int lo = std::min(p, q) + 1;
    const int hi = std::max(p, q) - 1;
    if (lo > hi) return 0;
    const int bl = cfg.bit_length;
    int count = 0;
    for (int w = lo / bl; w <= hi / bl; ++w) {
        const int base = w * bl;
        const int s = std::max(lo - base, 0);
        const int e = std::min(hi - base, bl - 1);
        const int width = e - s + 1;
        const std::uint64_t mask =
            (width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1)) << s;
        count += std::popcount(words[w] & mask);
    }
    return count;
}

int collect_occupied(const std::uint64_t* words, const PackingConfig& cfg, int* out) {
    int n = 0;
    for (int w = 0; w < cfg.nwords; ++w) {
        std::uint64_t v = words[w];
        const int base = w * cfg.bit_length;
        while (v) {
            out[n++] = base + std::countr_zero(v);
            v &= v - 1;
        }
    }
    return n;
}

Difference difference_words(const std::uint64_t* bra, const std::uint64_t* ket,
                            const PackingConfig& cfg) {
    Difference d;
    int diffbits = 0;
    for (int w = 0; w < cfg.nwords; ++w) diffbits += std::popcount(bra[w] ^ ket[w]);
    if (diffbits == 0) return d;
    if (diffbits > 4 || (diffbits & 1)) {
        d.degree = Difference::kBeyondDouble;
        return d;
    }
    d.degree = diffbits / 2;
    int na = 0, nc = 0;
    for (int w = 0; w < cfg.nwords; ++w) {
        const int base = w * cfg.bit_length;
        std::uint64_t a = bra[w] & ~ket[w];
        while (a) {
            if (na == d.degree) { d.degree = Difference::kBeyondDouble; return d; }
            d.annihilated[na++] = base + std::countr_zero(a);
            a &= a - 1;
        }
        std::uint64_t c = ket[w] & ~bra[w];
        while (c) {
            if (nc == d.degree) { d.degree = Difference::kBeyondDouble; return d; }
            d.created[nc++] = base + std::countr_zero(c);
            c &= c - 1;
        }
    }
    return d;
}

int parity_double_words(const std::uint64_t* words, const PackingConfig& cfg,
                        int p1, int p2, int q1, int q2, std::uint64_t* scratch) {
    const int s1 = parity_single_words(words, cfg, p1, q1);
    std::copy(words, words + cfg.nwords, scratch);
    apply_single_words(scratch, cfg, p1, q1);
    const int s2 = parity_single_words(scratch, cfg, p2, q2);
    return s1 * s2;
}

void interleave_words(const std::uint64_t* alpha, const std::uint64_t* beta,
                      const PackingConfig& channel_cfg, std::uint64_t* out,
                      const PackingConfig& det_cfg) {
    std::fill(out, out + det_cfg.nwords, 0);
    for (int w = 0; w < channel_cfg.nwords; ++w) {
        const int base = w * channel_cfg.bit_length;
        std::uint64_t a = alpha[w];
        while (a) {
            set_bit(out, det_cfg, 2 * (base + std::countr_zero(a)));
            a &= a - 1;
        }
        std::uint64_t b = beta[w];
        while (b) {
            set_bit(out, det_cfg, 2 * (base + std::countr_zero(b)) + 1);
            b &= b - 1;
        }
    }
}

BitString from_occupied(std::span<const int> occ, const PackingConfig& cfg) {
    BitString s{cfg, std::vector<std::uint64_t>(cfg.nwords, 0)};
    for (int i : occ) {
        if (i < 0 || i >= cfg.nbits)
            throw InputError("from_occupied: index " + std::to_string(i) +
                             " out of range [0, " + std::to_string(cfg.nbits) + ")");
        if (test_bit(s.words.data(), cfg, i))
            throw InputError("from_occupied: duplicate index " + std::to_string(i));
        set_bit(s.words.data(), cfg, i);
    }
    return s;
}

std::vector<int> occupied_list(const BitString& s) {
    std::vector<int> occ(static_cast<std::size_t>(s.cfg.nbits));
    const int n = collect_occupied(s.words.data(), s.cfg, occ.data());
    occ.resize(static_cast<std::size_t>(n));
    return occ;
}

BitString repack(const BitString& s, int bit_length) {
    const auto occ = occupied_list(s);
    return from_occupied(occ, make_packing(s.cfg.nbits, bit_length));
}

Determinant interleave(const BitString& alpha, const BitString& beta) {
    if (alpha.cfg != beta.cfg)
        throw InputError("interleave: alpha and beta strings must share one packing");
    Determinant d;
    d.bits.cfg = make_packing(2 * alpha.cfg.nbits, alpha.cfg.bit_length);
    d.bits.words.assign(static_cast<std::size_t>(d.bits.cfg.nwords), 0);
    interleave_words(alpha.words.data(), beta.words.data(), alpha.cfg,
                     d.bits.words.data(), d.bits.cfg);
    return d;
}

Difference difference(const Determinant& bra, const Determinant& ket) {
    if (bra.bits.cfg != ket.bits.cfg)
        throw InputError("difference: determinants must share one packing");
    return difference_words(bra.bits.words.data(), ket.bits.words.data(), bra.bits.cfg);
}

namespace {

void check_move(const Determinant& d, int p, int q, const char* who) {
    const auto& cfg = d.bits.cfg;
    if (p < 0 || p >= cfg.nbits || q < 0 || q >= cfg.nbits || p == q)
        throw InputError(std::string(who) + ": bad spin-orbital pair");
    if (!test_bit(d.bits.words.data(), cfg, p))
        throw InputError(std::string(who) + ": source spin-orbital " + std::to_string(p) +
                         " is not occupied");
    if (test_bit(d.bits.words.data(), cfg, q))
        throw InputError(std::string(who) + ": target spin-orbital " + std::to_string(q) +
                         " is already occupied");
}

} // namespace

int parity_single(const Determinant& d, int p, int q) {
    check_move(d, p, q, "parity_single");
    return parity_single_words(d.bits.words.data(), d.bits.cfg, p, q);
}

int parity_double(const Determinant& d, int p1, int p2, int q1, int q2) {
    check_move(d, p1, q1, "parity_double");
    const int s1 = parity_single_words(d.bits.words.data(), d.bits.cfg, p1, q1);
    Determinant mid = apply_single(d, p1, q1);
    check_move(mid, p2, q2, "parity_double");
    return s1 * parity_single_words(mid.bits.words.data(), mid.bits.cfg, p2, q2);
}

Determinant apply_single(const Determinant& d, int p, int q) {
    check_move(d, p, q, "apply_single");
    Determinant out = d;
    apply_single_words(out.bits.words.data(), out.bits.cfg, p, q);
    return out;
}

} // namespace detci
