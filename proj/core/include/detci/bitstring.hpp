// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bitstring.hpp
 * @brief Packed occupation bit-strings and the primitive excitation kernels.
 *
 * A BitString stores one occupation pattern (one spin channel, or a full
 * determinant over interleaved spin-orbitals) in 64-bit words of which only
 * the low `bit_length` bits are used.  Logical bit i lives in word
 * i / bit_length at offset i % bit_length; all padding bits are zero.
 *
 * A Determinant interleaves the two spin channels: spatial orbital p maps to
 * spin-orbital 2p (alpha) and 2p+1 (beta), so spin extraction is a parity
 * test on the spin-orbital index.
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <detci/error.hpp>

namespace detci {

/// ceil(nbits / bit_length); throws ConfigError unless 1 <= bit_length <= 64
/// and nbits >= 1.
int word_count(int nbits, int bit_length);

/// How logical bits map onto 64-bit storage words.
struct PackingConfig {
    int nbits = 0;      ///< logical bit count (spin-orbitals encoded)
    int bit_length = 0; ///< usable bits per word, 1..64
    int nwords = 0;     ///< derived: ceil(nbits / bit_length)

    bool operator==(const PackingConfig&) const = default;
};

/// Validated constructor for PackingConfig.
PackingConfig make_packing(int nbits, int bit_length);

/// Occupation pattern under a PackingConfig.  Padding bits are always zero.
struct BitString {
    PackingConfig cfg;
    std::vector<std::uint64_t> words;

    bool operator==(const BitString&) const = default;
};

/// Numeric order (most-significant word first).  Requires equal configs.
bool bitstring_less(const BitString& a, const BitString& b);

/// Full interleaved spin-orbital occupation over 2*norbs bits.
struct Determinant {
    BitString bits;

    int norbs_spin() const { return bits.cfg.nbits; }
    bool operator==(const Determinant&) const = default;
};

/// Orbital moves taking a ket determinant into a bra determinant.
/// `annihilated` holds spin-orbitals occupied in the bra only, `created`
/// those occupied in the ket only, both ascending and valid for the first
/// `degree` slots.  Degrees beyond two are reported as kBeyondDouble with
/// empty lists.
struct Difference {
    static constexpr int kBeyondDouble = 3;

    int degree = 0;
    std::array<int, 2> annihilated{};
    std::array<int, 2> created{};
};

// ---------------------------------------------------------------------------
// Raw word kernels.  These assume valid inputs (consistent packing, padding
// bits zero) and are the hot path of matrix-element evaluation; the value
// wrappers below validate.
// ---------------------------------------------------------------------------

inline bool test_bit(const std::uint64_t* words, const PackingConfig& cfg, int i) {
    return (words[i / cfg.bit_length] >> (i % cfg.bit_length)) & 1u;
}

inline void set_bit(std::uint64_t* words, const PackingConfig& cfg, int i) {
    words[i / cfg.bit_length] |= std::uint64_t{1} << (i % cfg.bit_length);
}

inline void clear_bit(std::uint64_t* words, const PackingConfig& cfg, int i) {
    words[i / cfg.bit_length] &= ~(std::uint64_t{1} << (i % cfg.bit_length));
}

/// Total set bits over all words.
int popcount_words(const std::uint64_t* words, int nwords);

/// Set bits at logical positions strictly between min(p,q) and max(p,q).
int count_set_between(const std::uint64_t* words, const PackingConfig& cfg, int p, int q);

/// Appends set-bit positions in ascending order; returns the count.
/// `out` must have room for at least cfg.nbits entries.
int collect_occupied(const std::uint64_t* words, const PackingConfig& cfg, int* out);

/// difference() on raw words; `cfg` describes both operands.
Difference difference_words(const std::uint64_t* bra, const std::uint64_t* ket,
                            const PackingConfig& cfg);

/// Fermionic sign (+1/-1) of the single excitation p -> q on `words`.
/// Unchecked: bit p must be set and q clear.
inline int parity_single_words(const std::uint64_t* words, const PackingConfig& cfg,
                               int p, int q) {
    return (count_set_between(words, cfg, p, q) & 1) ? -1 : 1;
}

/// In-place single excitation on raw words (clear p, set q).  Unchecked.
inline void apply_single_words(std::uint64_t* words, const PackingConfig& cfg,
                               int p, int q) {
    clear_bit(words, cfg, p);
    set_bit(words, cfg, q);
}

/// Sign of the double excitation pairing p1->q1 then p2->q2 applied in
/// sequence.  `scratch` must hold cfg.nwords words.  Unchecked.
int parity_double_words(const std::uint64_t* words, const PackingConfig& cfg,
                        int p1, int p2, int q1, int q2, std::uint64_t* scratch);

/// Interleaves channel strings (alpha -> even bits, beta -> odd bits) into
/// `out` under det_cfg.  Buffers must not alias.  Unchecked.
void interleave_words(const std::uint64_t* alpha, const std::uint64_t* beta,
                      const PackingConfig& channel_cfg, std::uint64_t* out,
                      const PackingConfig& det_cfg);

// ---------------------------------------------------------------------------
// Value-level operations (validated).
// ---------------------------------------------------------------------------

/// Builds a BitString with exactly the listed bits set.  Throws InputError on
/// out-of-range or duplicate indices.
BitString from_occupied(std::span<const int> occ, const PackingConfig& cfg);

/// Ascending positions of set bits; inverse of from_occupied.
std::vector<int> occupied_list(const BitString& s);

/// Same occupation re-encoded with a different bit_length.
BitString repack(const BitString& s, int bit_length);

/// Tensor-product interleave of two channel strings with equal configs.
Determinant interleave(const BitString& alpha, const BitString& beta);

/// Orbital moves between two determinants of equal shape.
Difference difference(const Determinant& bra, const Determinant& ket);

/// Sign convention: (-1)^k with k = occupied spin-orbitals strictly between
/// p and q in d.  Throws InputError unless bit p is occupied and q is not.
int parity_single(const Determinant& d, int p, int q);

/// Sign of the canonical double excitation (ascending annihilated paired with
/// ascending created, low pair applied first).
int parity_double(const Determinant& d, int p1, int p2, int q1, int q2);

/// d with bit p cleared and bit q set.
Determinant apply_single(const Determinant& d, int p, int q);

} // namespace detci
