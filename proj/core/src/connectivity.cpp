// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/connectivity.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>

namespace detci {

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
        std::size_t h = 0;
        for (const std::uint64_t w : words)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

using StringIndex = std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, WordsHash>;

StringIndex index_strings(std::span<const BitString> strings, int norbs) {
    StringIndex index;
    index.reserve(strings.size() * 2);
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (strings[i].cfg.nbits != norbs)
            throw InputError("excitation tables: string " + std::to_string(i) +
                             " has wrong orbital count");
        if (i > 0 && strings[i].cfg != strings[0].cfg)
            throw InputError("excitation tables: strings must share one packing");
        if (!index.emplace(strings[i].words, static_cast<std::uint32_t>(i)).second)
            throw InputError("excitation tables: duplicate string at index " + std::to_string(i));
    }
    return index;
}

FlatExcitationTable flatten(std::vector<std::vector<std::uint32_t>>&& rows) {
    FlatExcitationTable table;
    table.offset.resize(rows.size());
    table.len.resize(rows.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        table.offset[i] = total;
        table.len[i] = static_cast<std::uint32_t>(rows[i].size());
        total += rows[i].size();
    }
    table.flat.reserve(total);
    for (auto& row : rows) table.flat.insert(table.flat.end(), row.begin(), row.end());
    return table;
}

} // namespace

std::span<const std::uint32_t> FlatExcitationTable::neighbors(std::size_t i) const {
    if (i >= len.size())
        throw InputError("neighbors: source index " + std::to_string(i) + " out of range");
    return {flat.data() + offset[i], static_cast<std::size_t>(len[i])};
}

FlatExcitationTable generate_singles(std::span<const BitString> strings, int norbs) {
    const StringIndex index = index_strings(strings, norbs);
    std::vector<std::vector<std::uint32_t>> rows(strings.size());

    #pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(strings.size()); ++i) {
        const BitString& src = strings[static_cast<std::size_t>(i)];
        const auto occ = occupied_list(src);
        std::vector<std::uint32_t>& row = rows[static_cast<std::size_t>(i)];
        BitString probe = src;
        for (const int p : occ) {
            for (int q = 0; q < norbs; ++q) {
                if (test_bit(src.words.data(), src.cfg, q)) continue;
                apply_single_words(probe.words.data(), probe.cfg, p, q);
                if (const auto it = index.find(probe.words); it != index.end())
                    row.push_back(it->second);
                apply_single_words(probe.words.data(), probe.cfg, q, p);
            }
        }
        std::sort(row.begin(), row.end());
    }
    return flatten(std::move(rows));
}

FlatExcitationTable generate_doubles(std::span<const BitString> strings, int norbs) {
    const StringIndex index = index_strings(strings, norbs);
    std::vector<std::vector<std::uint32_t>> rows(strings.size());

    #pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(strings.size()); ++i) {
        const BitString& src = strings[static_cast<std::size_t>(i)];
        const auto occ = occupied_list(src);
        std::vector<int> virt;
        virt.reserve(static_cast<std::size_t>(norbs) - occ.size());
        for (int q = 0; q < norbs; ++q)
            if (!test_bit(src.words.data(), src.cfg, q)) virt.push_back(q);

        std::vector<std::uint32_t>& row = rows[static_cast<std::size_t>(i)];
        BitString probe = src;
        // Each degree-2 target is reached by exactly one (pair out, pair in)
        // choice, so no dedup is needed.
        for (std::size_t a = 0; a < occ.size(); ++a) {
            for (std::size_t b = a + 1; b < occ.size(); ++b) {
                for (std::size_t c = 0; c < virt.size(); ++c) {
                    for (std::size_t d = c + 1; d < virt.size(); ++d) {
                        apply_single_words(probe.words.data(), probe.cfg, occ[a], virt[c]);
                        apply_single_words(probe.words.data(), probe.cfg, occ[b], virt[d]);
                        if (const auto it = index.find(probe.words); it != index.end())
                            row.push_back(it->second);
                        apply_single_words(probe.words.data(), probe.cfg, virt[d], occ[b]);
                        apply_single_words(probe.words.data(), probe.cfg, virt[c], occ[a]);
                    }
                }
            }
        }
        std::sort(row.begin(), row.end());
    }
    return flatten(std::move(rows));
}

void dump_excitation_table(const FlatExcitationTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.source_count(); ++i) {
        bool first = true;
        for (const std::uint32_t j : table.neighbors(i)) {
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << '\n';
    }
}

} // namespace detci
