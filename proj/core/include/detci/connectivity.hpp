// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file connectivity.hpp
 * @brief Same-channel excitation lists stored as flattened offset/length
 *        tables with single-indirection, contiguous access.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <detci/bitstring.hpp>

namespace detci {

/// Flattened per-source excitation targets.  Entry (i -> j) stores only j,
/// the target's index within the channel string list; the matrix-element
/// kernels recompute orbital moves and signs from the two bit-strings.
struct FlatExcitationTable {
    std::vector<std::uint32_t> flat; ///< concatenated target indices
    std::vector<std::size_t> offset; ///< per-source start into flat
    std::vector<std::uint32_t> len;  ///< per-source entry count

    std::size_t source_count() const { return len.size(); }

    /// Contiguous run flat[offset[i] .. offset[i] + len[i]).
    std::span<const std::uint32_t> neighbors(std::size_t i) const;
};

/// Entry (i -> j) iff string j differs from string i by exactly one electron
/// move and j is present in the list.  Entries per source are ascending.
/// Throws InputError on duplicate strings or inconsistent shapes.
FlatExcitationTable generate_singles(std::span<const BitString> strings, int norbs);

/// Entry (i -> j) iff the strings differ by exactly two electron moves.
FlatExcitationTable generate_doubles(std::span<const BitString> strings, int norbs);

/// Diagnostic text form: one line per source, space-separated targets.
void dump_excitation_table(const FlatExcitationTable& table, std::ostream& out);

} // namespace detci
