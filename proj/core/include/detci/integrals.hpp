// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief One- and two-electron integral tables read from FCIDUMP files.
 *
 * Two-electron values use chemist notation (pq|rs) over real orbitals and are
 * stored reduced under the 8-fold symmetry group
 *   (pq|rs) = (qp|rs) = (pq|sr) = (qp|sr) = (rs|pq) = (sr|pq) = (rs|qp) = (sr|qp).
 * Unset integrals read as exactly 0.0.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include <detci/error.hpp>

namespace detci {

class IntegralTable {
public:
    IntegralTable() = default; ///< empty sentinel; any index access throws
    IntegralTable(int norbs, int n_elec, int ms2);

    int norbs() const { return norbs_; }
    int n_elec() const { return n_elec_; }
    int ms2() const { return ms2_; }

    double core_energy() const { return core_; }
    void set_core_energy(double v) { core_ = v; }

    /// h[p][q] with symmetry applied; unset entries are 0.0.
    double one_electron(int p, int q) const;
    void set_one_electron(int p, int q, double v);

    /// (pq|rs) resolved through the 8-fold canonicalization; unset -> 0.0.
    double two_electron(int p, int q, int r, int s) const;
    void set_two_electron(int p, int q, int r, int s, double v);

    /// Stored two-electron values keyed by the packed canonical quadruple
    /// p << 48 | q << 32 | r << 16 | s.
    const std::unordered_map<std::uint64_t, double>& stored_two_electron() const { return eri_; }

    bool operator==(const IntegralTable&) const = default;

private:
    void check_index(int p) const;
    std::uint64_t canonical_key(int p, int q, int r, int s) const;

    int norbs_ = 0;
    int n_elec_ = 0;
    int ms2_ = 0;
    double core_ = 0.0;
    std::vector<double> h_; // dense norbs x norbs, both symmetric entries set
    std::unordered_map<std::uint64_t, double> eri_;
};

/// Precomputed direct/exchange matrices for the hot kernels:
/// direct[p][q] = (pp|qq), exchange[p][q] = (pq|qp), row-major.
struct DirectExchange {
    int norbs = 0;
    std::vector<double> direct;
    std::vector<double> exchange;

    double j(int p, int q) const { return direct[static_cast<std::size_t>(p) * norbs + q]; }
    double k(int p, int q) const { return exchange[static_cast<std::size_t>(p) * norbs + q]; }
};

DirectExchange build_direct_exchange(const IntegralTable& table);

/// Parses the FCIDUMP interchange format: a &FCI namelist carrying NORB,
/// NELEC and MS2 followed by `value i j k l` lines with 1-based indices
/// (k = l = 0 selects h, all-zero indices the core energy).  Fortran-style
/// exponents (1.0D-3) and flexible whitespace are accepted; ORBSYM and other
/// namelist entries are ignored.
IntegralTable parse_fcidump(std::istream& in);

/// Writes a canonical FCIDUMP (sorted canonical indices, %.17g values) such
/// that re-parsing reproduces the table exactly.
void write_fcidump(const IntegralTable& table, std::ostream& out);

} // namespace detci
