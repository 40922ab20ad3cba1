// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/integrals.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace detci {

IntegralTable::IntegralTable(int norbs, int n_elec, int ms2)
    : norbs_(norbs), n_elec_(n_elec), ms2_(ms2) {
    if (norbs < 1) throw InputError("IntegralTable: norbs must be positive");
    if (n_elec < 0) throw InputError("IntegralTable: negative electron count");
    h_.assign(static_cast<std::size_t>(norbs) * norbs, 0.0);
}

void IntegralTable::check_index(int p) const {
    if (p < 0 || p >= norbs_)
        throw InputError("integral index " + std::to_string(p) + " out of range [0, " +
                         std::to_string(norbs_) + ")");
}

double IntegralTable::one_electron(int p, int q) const {
    check_index(p);
    check_index(q);
    return h_[static_cast<std::size_t>(p) * norbs_ + q];
}

void IntegralTable::set_one_electron(int p, int q, double v) {
    check_index(p);
    check_index(q);
    h_[static_cast<std::size_t>(p) * norbs_ + q] = v;
    h_[static_cast<std::size_t>(q) * norbs_ + p] = v;
}

std::uint64_t IntegralTable::canonical_key(int p, int q, int r, int s) const {
    // Greater index first within each pair, then the larger pair first.
    if (p < q) std::swap(p, q);
    if (r < s) std::swap(r, s);
    if (p < r || (p == r && q < s)) {
        std::swap(p, r);
        std::swap(q, s);
    }
    return (static_cast<std::uint64_t>(p) << 48) | (static_cast<std::uint64_t>(q) << 32) |
           (static_cast<std::uint64_t>(r) << 16) | static_cast<std::uint64_t>(s);
}

double IntegralTable::two_electron(int p, int q, int r, int s) const {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    const auto it = eri_.find(canonical_key(p, q, r, s));
    return it == eri_.end() ? 0.0 : it->second;
}

void IntegralTable::set_two_electron(int p, int q, int r, int s, double v) {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    eri_[canonical_key(p, q, r, s)] = v;
}

DirectExchange build_direct_exchange(const IntegralTable& table) {
    const int n = table.norbs();
    DirectExchange jk;
    jk.norbs = n;
    jk.direct.assign(static_cast<std::size_t>(n) * n, 0.0);
    jk.exchange.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            jk.direct[static_cast<std::size_t>(p) * n + q] = table.two_electron(p, p, q, q);
            jk.exchange[static_cast<std::size_t>(p) * n + q] = table.two_electron(p, q, q, p);
        }
    }
    return jk;
}

namespace {

// Fortran namelists write doubles as 1.0D-3; flexible case and spacing.
double parse_value(std::string token, const std::string& context) {
    for (char& c : token)
        if (c == 'D' || c == 'd') c = 'e';
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw FormatError("FCIDUMP: non-numeric value '" + token + "' " + context);
    }
    if (pos != token.size())
        throw FormatError("FCIDUMP: non-numeric value '" + token + "' " + context);
    return v;
}

std::optional<long> parse_namelist_int(const std::string& header, const std::string& name) {
    const auto at = header.find(name);
    if (at == std::string::npos) return std::nullopt;
    std::size_t i = at + name.size();
    while (i < header.size() && (std::isspace(static_cast<unsigned char>(header[i])) || header[i] == '='))
        ++i;
    std::size_t j = i;
    if (j < header.size() && (header[j] == '+' || header[j] == '-')) ++j;
    while (j < header.size() && std::isdigit(static_cast<unsigned char>(header[j]))) ++j;
    if (j == i) throw FormatError("FCIDUMP: cannot read " + name + " from header");
    return std::stol(header.substr(i, j - i));
}

} // namespace

IntegralTable parse_fcidump(std::istream& in) {
    // Collect the namelist: everything up to &END or a lone "/".
    std::string header;
    std::string line;
    bool header_done = false;
    while (!header_done && std::getline(in, line)) {
        std::string upper = line;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        const auto end_at = upper.find("&END");
        const auto slash_at = upper.find('/');
        if (end_at != std::string::npos || slash_at != std::string::npos) {
            header += upper.substr(0, std::min(end_at, slash_at));
            header_done = true;
        } else {
            header += upper;
        }
        header += ' ';
    }
    if (!header_done) throw FormatError("FCIDUMP: unterminated namelist header");

    const auto norb = parse_namelist_int(header, "NORB");
    const auto nelec = parse_namelist_int(header, "NELEC");
    if (!norb || *norb <= 0) throw FormatError("FCIDUMP: missing or invalid NORB");
    if (!nelec || *nelec < 0) throw FormatError("FCIDUMP: missing or invalid NELEC");
    const long ms2 = parse_namelist_int(header, "MS2").value_or(0);

    IntegralTable table(static_cast<int>(*norb), static_cast<int>(*nelec), static_cast<int>(ms2));

    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string value_token;
        if (!(ls >> value_token)) continue; // blank line
        const std::string context = "on data line " + std::to_string(line_no);
        const double value = parse_value(value_token, context);
        long idx[4];
        for (long& ix : idx) {
            if (!(ls >> ix)) throw FormatError("FCIDUMP: expected four indices " + context);
            if (ix < 0 || ix > *norb)
                throw FormatError("FCIDUMP: index " + std::to_string(ix) + " exceeds NORB " +
                                  context);
        }
        std::string extra;
        if (ls >> extra) throw FormatError("FCIDUMP: trailing token '" + extra + "' " + context);

        const long i = idx[0], j = idx[1], k = idx[2], l = idx[3];
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            table.set_core_energy(value);
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0)
                throw FormatError("FCIDUMP: bad one-electron indices " + context);
            table.set_one_electron(static_cast<int>(i - 1), static_cast<int>(j - 1), value);
        } else {
            if (i == 0 || j == 0 || k == 0 || l == 0)
                throw FormatError("FCIDUMP: bad two-electron indices " + context);
            table.set_two_electron(static_cast<int>(i - 1), static_cast<int>(j - 1),
                                   static_cast<int>(k - 1), static_cast<int>(l - 1), value);
        }
    }
    return table;
}

void write_fcidump(const IntegralTable& table, std::ostream& out) {
    out << "&FCI NORB=" << table.norbs() << ",NELEC=" << table.n_elec()
        << ",MS2=" << table.ms2() << ",\n&END\n";
    char buf[64];

    std::vector<std::uint64_t> keys;
    keys.reserve(table.stored_two_electron().size());
    for (const auto& [key, value] : table.stored_two_electron()) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (const std::uint64_t key : keys) {
        const int p = static_cast<int>(key >> 48) & 0xffff;
        const int q = static_cast<int>(key >> 32) & 0xffff;
        const int r = static_cast<int>(key >> 16) & 0xffff;
        const int s = static_cast<int>(key) & 0xffff;
        std::snprintf(buf, sizeof buf, "%.17g", table.stored_two_electron().at(key));
        out << buf << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' ' << s + 1 << '\n';
    }
    for (int p = 0; p < table.norbs(); ++p) {
        for (int q = 0; q <= p; ++q) {
            const double v = table.one_electron(p, q);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
        }
    }
    std::snprintf(buf, sizeof buf, "%.17g", table.core_energy());
    out << buf << " 0 0 0 0\n";
}

} // namespace detci
