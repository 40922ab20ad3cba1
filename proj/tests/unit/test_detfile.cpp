// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include <detci/detfile.hpp>

#include "test_helpers.hpp"

using namespace detci;

TEST_SUITE("detfile") {

TEST_CASE("parse_det_list reads sections") {
    std::istringstream in(
        "# comment\n"
        "norbs 2\n"
        "alpha\n"
        "0x3\n"
        "beta\n"
        "0x1\n");
    const DetList list = parse_det_list(in);
    CHECK(list.norbs == 2);
    CHECK(list.alpha.size() == 1);
    CHECK(list.beta.size() == 1);
    CHECK(occupied_list(list.alpha[0]) == std::vector<int>{0, 1});
    CHECK(occupied_list(list.beta[0]) == std::vector<int>{0});
}

TEST_CASE("parse_det_list rejects bad input") {
    {
        std::istringstream in("norbs 2\nalpha\n0x3\n0x3\nbeta\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // duplicate
    }
    {
        std::istringstream in("norbs 2\nalpha\n0x8\nbeta\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // bit beyond norbs
    }
    {
        std::istringstream in("norbs 2\nalpha\n0x3\n0x1\nbeta\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // inconsistent popcount
    }
    {
        std::istringstream in("alpha\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // missing header
    }
    {
        std::istringstream in("norbs 2\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // mask outside sections
    }
    {
        std::istringstream in("norbs 2\nalpha\n0xg\nbeta\n0x1\n");
        CHECK_THROWS_AS(parse_det_list(in), FormatError); // bad hex
    }
}

TEST_CASE("write then parse round-trips, wide masks included") {
    DetList list;
    list.norbs = 70; // forces multi-word masks
    const auto cfg = make_packing(70, 64);
    list.alpha = {from_occupied(std::vector<int>{0, 3, 69}, cfg),
                  from_occupied(std::vector<int>{1, 4, 68}, cfg)};
    list.beta = {from_occupied(std::vector<int>{2, 67}, cfg)};

    std::stringstream buffer;
    write_det_list(list, buffer);
    const DetList reparsed = parse_det_list(buffer);
    CHECK(reparsed.norbs == list.norbs);
    REQUIRE(reparsed.alpha.size() == 2);
    CHECK(occupied_list(reparsed.alpha[0]) == std::vector<int>{0, 3, 69});
    CHECK(occupied_list(reparsed.alpha[1]) == std::vector<int>{1, 4, 68});
    CHECK(occupied_list(reparsed.beta[0]) == std::vector<int>{2, 67});
}

TEST_CASE("shuffle is a deterministic permutation") {
    const auto make_strings = [] {
        std::vector<BitString> strings;
        for (int i = 0; i < 12; ++i) strings.push_back(test::string_from({i}, 12));
        return strings;
    };

    auto a = make_strings();
    auto b = make_strings();
    shuffle_strings(a, 42);
    shuffle_strings(b, 42);
    CHECK(a == b);

    auto c = make_strings();
    shuffle_strings(c, 43);
    CHECK(a != c); // overwhelmingly likely for 12! permutations

    // still a permutation of the originals
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end(), bitstring_less);
    CHECK(sorted == make_strings());

    std::vector<BitString> single = {test::string_from({0}, 4)};
    shuffle_strings(single, 7);
    CHECK(single == std::vector<BitString>{test::string_from({0}, 4)});
}

} // TEST_SUITE
