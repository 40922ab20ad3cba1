// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <sstream>

#include <detci/detfile.hpp>
#include <detci/integrals.hpp>

#include "test_helpers.hpp"

using namespace detci;

TEST_SUITE("integrals") {

TEST_CASE("parse_fcidump reads header and line kinds") {
    std::istringstream in(
        "&FCI NORB=2,NELEC=2,MS2=0,\n"
        "&END\n"
        "0.5 1 1 1 1\n"
        "0.7 0 0 0 0\n"
        "-1.25 1 1 0 0\n");
    const IntegralTable t = parse_fcidump(in);
    CHECK(t.norbs() == 2);
    CHECK(t.n_elec() == 2);
    CHECK(t.ms2() == 0);
    CHECK(t.two_electron(0, 0, 0, 0) == doctest::Approx(0.5));
    CHECK(t.core_energy() == doctest::Approx(0.7));
    CHECK(t.one_electron(0, 0) == doctest::Approx(-1.25));
}

TEST_CASE("parse_fcidump accepts Fortran exponents and slash terminators") {
    std::istringstream in(
        " &FCI NORB= 3, NELEC=2, MS2=0, ORBSYM=1,1,1, ISYM=1\n"
        " /\n"
        "  1.0D-3   1 2 0 0\n"
        "  -2.5d0   1 1 0 0\n");
    const IntegralTable t = parse_fcidump(in);
    CHECK(t.one_electron(0, 1) == doctest::Approx(1.0e-3));
    CHECK(t.one_electron(1, 0) == doctest::Approx(1.0e-3));
    CHECK(t.one_electron(0, 0) == doctest::Approx(-2.5));
}

TEST_CASE("parse_fcidump rejects malformed input") {
    {
        std::istringstream in("&FCI NELEC=2,\n&END\n");
        CHECK_THROWS_AS(parse_fcidump(in), FormatError);
    }
    {
        std::istringstream in("&FCI NORB=2,NELEC=2,\n&END\n0.5 1 3 0 0\n");
        CHECK_THROWS_AS(parse_fcidump(in), FormatError);
    }
    {
        std::istringstream in("&FCI NORB=2,NELEC=2,\n&END\nabc 1 1 0 0\n");
        CHECK_THROWS_AS(parse_fcidump(in), FormatError);
    }
    {
        std::istringstream in("&FCI NORB=2,NELEC=2,\n");
        CHECK_THROWS_AS(parse_fcidump(in), FormatError);
    }
}

TEST_CASE("one_electron symmetry and sparse default") {
    IntegralTable t(2, 2, 0);
    t.set_one_electron(0, 1, 0.2);
    CHECK(t.one_electron(1, 0) == 0.2);
    CHECK(t.one_electron(1, 1) == 0.0);
    CHECK_THROWS_AS(t.one_electron(2, 0), InputError);
}

TEST_CASE("two_electron eight-fold symmetry") {
    IntegralTable t(3, 2, 0);
    t.set_two_electron(1, 0, 0, 0, 0.3);
    CHECK(t.two_electron(0, 1, 0, 0) == 0.3);
    t.set_two_electron(0, 0, 0, 0, 0.5);
    CHECK(t.two_electron(0, 0, 0, 0) == 0.5);
    CHECK(t.two_electron(2, 2, 1, 0) == 0.0);

    t.set_two_electron(2, 1, 1, 0, 0.77);
    const std::array<std::array<int, 4>, 8> group = {{{2, 1, 1, 0},
                                                      {1, 2, 1, 0},
                                                      {2, 1, 0, 1},
                                                      {1, 2, 0, 1},
                                                      {1, 0, 2, 1},
                                                      {0, 1, 2, 1},
                                                      {1, 0, 1, 2},
                                                      {0, 1, 1, 2}}};
    for (const auto& [p, q, r, s] : group) CHECK(t.two_electron(p, q, r, s) == 0.77);
}

TEST_CASE("build_direct_exchange materializes J and K") {
    {
        IntegralTable t(1, 2, 0);
        t.set_two_electron(0, 0, 0, 0, 0.5);
        const DirectExchange jk = build_direct_exchange(t);
        CHECK(jk.j(0, 0) == 0.5);
        CHECK(jk.k(0, 0) == 0.5);
    }
    const IntegralTable t = test::load_fixture("h4_chain.fcidump");
    const DirectExchange jk = build_direct_exchange(t);
    for (int p = 0; p < t.norbs(); ++p) {
        CHECK(jk.j(p, p) == jk.k(p, p));
        for (int q = 0; q < t.norbs(); ++q) {
            CHECK(jk.j(p, q) == t.two_electron(p, p, q, q));
            CHECK(jk.k(p, q) == t.two_electron(p, q, q, p));
            CHECK(jk.j(p, q) == jk.j(q, p));
            CHECK(jk.k(p, q) == jk.k(q, p));
        }
    }
}

TEST_CASE("write then parse round-trips the table") {
    for (const char* name :
         {"h2_minimal.fcidump", "h3_doublet.fcidump", "h6_ring.fcidump"}) {
        const IntegralTable original = test::load_fixture(name);
        std::stringstream buffer;
        write_fcidump(original, buffer);
        const IntegralTable reparsed = parse_fcidump(buffer);
        CHECK(reparsed == original);
    }
}

TEST_CASE("randomized symmetry group property") {
    SplitMix64 rng(23);
    IntegralTable t(5, 4, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const int p = static_cast<int>(rng.next() % 5), q = static_cast<int>(rng.next() % 5);
        const int r = static_cast<int>(rng.next() % 5), s = static_cast<int>(rng.next() % 5);
        const double v = static_cast<double>(rng.next() % 1000) / 1000.0;
        t.set_two_electron(p, q, r, s, v);
        CHECK(t.two_electron(q, p, r, s) == v);
        CHECK(t.two_electron(p, q, s, r) == v);
        CHECK(t.two_electron(r, s, p, q) == v);
        CHECK(t.two_electron(s, r, q, p) == v);
    }
}

} // TEST_SUITE
