// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include <detci/bitstring.hpp>
#include <detci/detfile.hpp>

#include "test_helpers.hpp"

using namespace detci;
using detci::test::det_from;

namespace {

// Independent sign oracle on plain masks: (-1)^(occupied below the acted
// position) per operator, annihilation first.
int mask_move_sign(std::uint64_t& mask, int p, int q) {
    int sign = 1;
    if (std::popcount(mask & ((std::uint64_t{1} << p) - 1)) & 1) sign = -sign;
    mask ^= std::uint64_t{1} << p;
    if (std::popcount(mask & ((std::uint64_t{1} << q) - 1)) & 1) sign = -sign;
    mask ^= std::uint64_t{1} << q;
    return sign;
}

std::uint64_t mask_of(const Determinant& d) {
    std::uint64_t m = 0;
    for (const int i : occupied_list(d.bits)) m |= std::uint64_t{1} << i;
    return m;
}

} // namespace

TEST_SUITE("bitstring") {

TEST_CASE("word_count follows the packing rule") {
    CHECK(word_count(48, 20) == 3);
    CHECK(word_count(48, 48) == 1);
    CHECK(word_count(10, 64) == 1);
    CHECK(word_count(1, 1) == 1);
    CHECK_THROWS_AS(word_count(10, 0), ConfigError);
    CHECK_THROWS_AS(word_count(10, 65), ConfigError);
    CHECK_THROWS_AS(word_count(0, 20), ConfigError);
}

TEST_CASE("from_occupied encodes across words") {
    const auto cfg4 = make_packing(4, 64);
    CHECK(from_occupied(std::vector<int>{0, 1}, cfg4).words == std::vector<std::uint64_t>{0b0011});
    CHECK(from_occupied(std::vector<int>{}, cfg4).words == std::vector<std::uint64_t>{0});

    // bit 2 lands in word 1 at offset 0 under bit_length 2
    const auto cfg3 = make_packing(3, 2);
    CHECK(from_occupied(std::vector<int>{0, 2}, cfg3).words ==
          std::vector<std::uint64_t>{0b01, 0b01});

    CHECK_THROWS_AS(from_occupied(std::vector<int>{4}, cfg4), InputError);
    CHECK_THROWS_AS(from_occupied(std::vector<int>{1, 1}, cfg4), InputError);
}

TEST_CASE("occupied_list inverts from_occupied") {
    BitString s{make_packing(4, 64), {0b0101}};
    CHECK(occupied_list(s) == std::vector<int>{0, 2});
    CHECK(occupied_list(BitString{make_packing(4, 64), {0}}).empty());
    BitString packed{make_packing(4, 2), {0b11, 0b10}};
    CHECK(occupied_list(packed) == std::vector<int>{0, 1, 3});
}

TEST_CASE("round trip across bit lengths") {
    SplitMix64 rng(7);
    for (const int bl : {1, 7, 20, 48, 64}) {
        for (int rep = 0; rep < 200; ++rep) {
            const int nbits = 1 + static_cast<int>(rng.next() % 96);
            std::vector<int> occ;
            for (int i = 0; i < nbits; ++i)
                if (rng.next() & 1) occ.push_back(i);
            const auto cfg = make_packing(nbits, bl);
            CHECK(occupied_list(from_occupied(occ, cfg)) == occ);
        }
    }
}

TEST_CASE("interleave maps alpha to even and beta to odd bits") {
    const auto alpha = test::string_from({0, 1}, 2);
    const auto beta = test::string_from({0}, 2);
    CHECK(occupied_list(interleave(alpha, beta).bits) == std::vector<int>{0, 1, 2});
    CHECK(occupied_list(interleave(test::string_from({}, 2), test::string_from({}, 2)).bits)
              .empty());
    CHECK(occupied_list(interleave(test::string_from({1}, 2), test::string_from({1}, 2)).bits) ==
          std::vector<int>{2, 3});
    CHECK_THROWS_AS(interleave(test::string_from({0}, 2), test::string_from({0}, 3)), InputError);
}

TEST_CASE("difference reports moves and the beyond-double marker") {
    const auto bra = det_from({0, 1}, 8);
    CHECK(difference(bra, det_from({0, 1}, 8)).degree == 0);

    const auto d1 = difference(bra, det_from({0, 2}, 8));
    CHECK(d1.degree == 1);
    CHECK(d1.annihilated[0] == 1);
    CHECK(d1.created[0] == 2);

    const auto d3 = difference(det_from({0, 1, 2, 3}, 8), det_from({4, 5, 6, 3}, 8));
    CHECK(d3.degree == Difference::kBeyondDouble);
}

TEST_CASE("difference symmetry swaps annihilated and created") {
    SplitMix64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<int> occ_a, occ_b;
        for (int i = 0; i < 10; ++i) {
            if (rng.next() % 3 == 0) occ_a.push_back(i);
            if (rng.next() % 3 == 0) occ_b.push_back(i);
        }
        if (occ_a.size() != occ_b.size()) continue;
        Determinant a, b;
        a.bits = from_occupied(occ_a, make_packing(10, 10));
        b.bits = from_occupied(occ_b, make_packing(10, 10));
        const auto ab = difference(a, b);
        const auto ba = difference(b, a);
        CHECK(ab.degree == ba.degree);
        if (ab.degree <= 2) {
            for (int k = 0; k < ab.degree; ++k) {
                CHECK(ab.annihilated[k] == ba.created[k]);
                CHECK(ab.created[k] == ba.annihilated[k]);
            }
        }
    }
}

TEST_CASE("parity_single counts occupied between") {
    CHECK(parity_single(det_from({0, 1, 2}, 8), 0, 3) == 1);
    CHECK(parity_single(det_from({0, 1, 2}, 8), 1, 3) == -1);
    CHECK(parity_single(det_from({5}, 8), 5, 0) == 1);
    CHECK_THROWS_AS(parity_single(det_from({0, 1}, 8), 2, 3), InputError);
    CHECK_THROWS_AS(parity_single(det_from({0, 1}, 8), 0, 1), InputError);
}

TEST_CASE("parity involution") {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        const int nbits = 4 + static_cast<int>(rng.next() % 12);
        std::vector<int> occ;
        for (int i = 0; i < nbits; ++i)
            if (rng.next() & 1) occ.push_back(i);
        if (occ.empty() || occ.size() == static_cast<std::size_t>(nbits)) continue;
        Determinant d;
        d.bits = from_occupied(occ, make_packing(nbits, nbits));
        const int p = occ[rng.next() % occ.size()];
        int q = static_cast<int>(rng.next() % nbits);
        while (test_bit(d.bits.words.data(), d.bits.cfg, q)) q = static_cast<int>(rng.next() % nbits);
        CHECK(parity_single(d, p, q) == parity_single(apply_single(d, p, q), q, p));
    }
}

TEST_CASE("parity_double frozen examples") {
    // Sequential application through the intermediate determinant:
    // {0,1} -> {2,3}: (-1)*(-1) = +1; {0,3} -> {1,2}: (+1)*(+1) = +1.
    CHECK(parity_double(det_from({0, 1}, 8), 0, 1, 2, 3) == 1);
    CHECK(parity_double(det_from({0, 3}, 8), 0, 3, 1, 2) == 1);
    // {0,1} -> {4,5}: step signs (-1)*(-1).
    CHECK(parity_double(det_from({0, 1}, 8), 0, 1, 4, 5) == 1);
    // Both steps with no occupied orbitals in between.
    CHECK(parity_double(det_from({4, 5}, 8), 4, 5, 6, 7) == 1);
}

TEST_CASE("parity_double matches the fermionic mask oracle") {
    // All determinants of up to 8 spin-orbitals, all canonical double moves.
    for (int nbits = 4; nbits <= 8; ++nbits) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
            std::vector<int> occ, virt;
            for (int i = 0; i < nbits; ++i)
                (mask >> i & 1 ? occ : virt).push_back(i);
            if (occ.size() < 2 || virt.size() < 2) continue;
            Determinant d;
            d.bits = from_occupied(occ, make_packing(nbits, nbits));
            for (std::size_t a = 0; a < occ.size(); ++a)
                for (std::size_t b = a + 1; b < occ.size(); ++b)
                    for (std::size_t c = 0; c < virt.size(); ++c)
                        for (std::size_t e = c + 1; e < virt.size(); ++e) {
                            std::uint64_t m = mask;
                            int expected = mask_move_sign(m, occ[a], virt[c]);
                            expected *= mask_move_sign(m, occ[b], virt[e]);
                            CHECK(parity_double(d, occ[a], occ[b], virt[c], virt[e]) == expected);
                        }
        }
    }
}

TEST_CASE("apply_single moves one electron") {
    CHECK(mask_of(apply_single(det_from({0, 1}, 8), 1, 2)) == 0b101);
    CHECK(mask_of(apply_single(det_from({0}, 8), 0, 5)) == 0b100000);
    CHECK_THROWS_AS(apply_single(det_from({0, 1}, 8), 0, 1), InputError);
}

TEST_CASE("packing independence of kernels") {
    SplitMix64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int norbs = 3 + static_cast<int>(rng.next() % 10);
        std::vector<int> occ_a, occ_b, occ_c;
        for (int i = 0; i < norbs; ++i) {
            if (rng.next() & 1) occ_a.push_back(i);
            if (rng.next() & 1) occ_b.push_back(i);
        }
        const Difference ref = difference(
            interleave(from_occupied(occ_a, make_packing(norbs, 64)),
                       from_occupied(occ_b, make_packing(norbs, 64))),
            interleave(from_occupied(occ_b, make_packing(norbs, 64)),
                       from_occupied(occ_a, make_packing(norbs, 64))));
        for (const int bl : {1, 7, 20, 48}) {
            const auto cfg = make_packing(norbs, bl);
            const Difference got = difference(
                interleave(from_occupied(occ_a, cfg), from_occupied(occ_b, cfg)),
                interleave(from_occupied(occ_b, cfg), from_occupied(occ_a, cfg)));
            CHECK(got.degree == ref.degree);
            if (ref.degree >= 1 && ref.degree <= 2) {
                for (int k = 0; k < ref.degree; ++k) {
                    CHECK(got.annihilated[k] == ref.annihilated[k]);
                    CHECK(got.created[k] == ref.created[k]);
                }
            }
        }
    }
}

} // TEST_SUITE
