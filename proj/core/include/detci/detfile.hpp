// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file detfile.hpp
 * @brief The determinant-list text format and the deterministic shuffle.
 *
 * Format: a `norbs <n>` header line, an `alpha` section line followed by one
 * hex occupation mask per line (bit 0 = spatial orbital 0, optional 0x
 * prefix), then a `beta` section likewise.  Blank lines and lines starting
 * with '#' are ignored.  Masks must be unique within a section and all masks
 * of one section must carry the same electron count.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <detci/bitstring.hpp>

namespace detci {

struct DetList {
    int norbs = 0;
    std::vector<BitString> alpha;
    std::vector<BitString> beta;
};

DetList parse_det_list(std::istream& in);

/// Canonical form: lowercase hex, 0x prefix, strings in file order.
void write_det_list(const DetList& list, std::ostream& out);

/// splitmix64: the documented, platform-independent generator behind the
/// shuffle option.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Deterministic Fisher-Yates permutation driven by SplitMix64; identical
/// across platforms for a given seed.
void shuffle_strings(std::vector<BitString>& strings, std::uint64_t seed);

} // namespace detci
