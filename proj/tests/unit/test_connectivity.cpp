// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <set>
#include <sstream>
#include <vector>

#include <detci/connectivity.hpp>
#include <detci/oracle.hpp>

#include "test_helpers.hpp"

using namespace detci;

namespace {

int pair_degree(const BitString& a, const BitString& b) {
    int diffbits = 0;
    for (int w = 0; w < a.cfg.nwords; ++w)
        diffbits += std::popcount(a.words[w] ^ b.words[w]);
    return diffbits / 2;
}

// O(n^2) pairwise oracle.
std::set<std::pair<std::size_t, std::size_t>> degree_pairs(std::span<const BitString> strings,
                                                           int degree) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = 0; j < strings.size(); ++j)
            if (i != j && pair_degree(strings[i], strings[j]) == degree) pairs.insert({i, j});
    return pairs;
}

std::set<std::pair<std::size_t, std::size_t>> table_pairs(const FlatExcitationTable& table) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < table.source_count(); ++i)
        for (const std::uint32_t j : table.neighbors(i)) pairs.insert({i, j});
    return pairs;
}

} // namespace

TEST_SUITE("connectivity") {

TEST_CASE("three strings, two electrons: all pairs are singles") {
    const std::vector<BitString> strings = {test::string_from({0, 1}, 3),
                                            test::string_from({0, 2}, 3),
                                            test::string_from({1, 2}, 3)};
    const FlatExcitationTable singles = generate_singles(strings, 3);
    CHECK(singles.len == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(singles.flat.size() == 6);
    const FlatExcitationTable doubles = generate_doubles(strings, 3);
    CHECK(doubles.len == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("single-string list yields an empty table") {
    const std::vector<BitString> strings = {test::string_from({0, 1}, 4)};
    const FlatExcitationTable singles = generate_singles(strings, 4);
    CHECK(singles.len == std::vector<std::uint32_t>{0});
    CHECK(singles.flat.empty());
}

TEST_CASE("mutual doubles") {
    const std::vector<BitString> strings = {test::string_from({0, 1}, 4),
                                            test::string_from({2, 3}, 4)};
    const FlatExcitationTable doubles = generate_doubles(strings, 4);
    CHECK(doubles.len == std::vector<std::uint32_t>{1, 1});
    CHECK(doubles.neighbors(0)[0] == 1);
    CHECK(doubles.neighbors(1)[0] == 0);
    const FlatExcitationTable singles = generate_singles(strings, 4);
    CHECK(singles.len == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("duplicate strings are rejected") {
    const std::vector<BitString> strings = {test::string_from({0, 1}, 4),
                                            test::string_from({0, 1}, 4)};
    CHECK_THROWS_AS(generate_singles(strings, 4), InputError);
    CHECK_THROWS_AS(generate_doubles(strings, 4), InputError);
}

TEST_CASE("table invariants and neighbors slicing") {
    const auto strings = full_channel_strings(6, 3);
    const FlatExcitationTable singles = generate_singles(strings, 6);

    std::size_t running = 0;
    std::vector<std::uint32_t> rebuilt;
    for (std::size_t i = 0; i < singles.source_count(); ++i) {
        CHECK(singles.offset[i] == running);
        running += singles.len[i];
        const auto row = singles.neighbors(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            CHECK(row[k] < strings.size());
            CHECK(row[k] != i);
            if (k > 0) CHECK(row[k - 1] < row[k]);
        }
        rebuilt.insert(rebuilt.end(), row.begin(), row.end());
    }
    CHECK(running == singles.flat.size());
    CHECK(rebuilt == singles.flat);
    CHECK_THROWS_AS(singles.neighbors(strings.size()), InputError);
}

TEST_CASE("matches the pairwise degree oracle on random subsets") {
    SplitMix64 rng(41);
    auto all = full_channel_strings(6, 3); // 20 strings
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<BitString> subset;
        for (const auto& s : all)
            if (rng.next() % 3 != 0) subset.push_back(s);
        if (subset.size() < 2) continue;

        const FlatExcitationTable singles = generate_singles(subset, 6);
        const FlatExcitationTable doubles = generate_doubles(subset, 6);
        const auto singles_set = table_pairs(singles);
        const auto doubles_set = table_pairs(doubles);

        CHECK(singles_set == degree_pairs(subset, 1));
        CHECK(doubles_set == degree_pairs(subset, 2));

        // relation symmetry and disjointness
        for (const auto& [i, j] : singles_set) {
            CHECK(singles_set.count({j, i}) == 1);
            CHECK(doubles_set.count({i, j}) == 0);
        }
        for (const auto& [i, j] : doubles_set) CHECK(doubles_set.count({j, i}) == 1);
    }
}

TEST_CASE("diagnostic dump has one line per source") {
    const std::vector<BitString> strings = {test::string_from({0, 1}, 3),
                                            test::string_from({0, 2}, 3),
                                            test::string_from({1, 2}, 3)};
    std::ostringstream out;
    dump_excitation_table(generate_singles(strings, 3), out);
    CHECK(out.str() == "1 2\n0 2\n0 1\n");
}

} // TEST_SUITE
