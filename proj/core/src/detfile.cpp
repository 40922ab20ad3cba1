// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <detci/detfile.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace detci {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

BitString parse_mask(const std::string& token, const PackingConfig& cfg, std::size_t line_no) {
    std::string hex = token;
    if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex = hex.substr(2);
    if (hex.empty())
        throw FormatError("det list: empty mask on line " + std::to_string(line_no));

    BitString s{cfg, std::vector<std::uint64_t>(static_cast<std::size_t>(cfg.nwords), 0)};
    // Rightmost hex digit carries bits 0..3.
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const int digit = hex_digit(hex[hex.size() - 1 - k]);
        if (digit < 0)
            throw FormatError("det list: bad hex mask '" + token + "' on line " +
                              std::to_string(line_no));
        for (int b = 0; b < 4; ++b) {
            if (!(digit & (1 << b))) continue;
            const int bit = static_cast<int>(4 * k) + b;
            if (bit >= cfg.nbits)
                throw FormatError("det list: mask '" + token + "' on line " +
                                  std::to_string(line_no) + " sets bit " + std::to_string(bit) +
                                  " beyond norbs " + std::to_string(cfg.nbits));
            set_bit(s.words.data(), cfg, bit);
        }
    }
    return s;
}

} // namespace

DetList parse_det_list(std::istream& in) {
    DetList list;
    enum class Section { Header, Alpha, Beta } section = Section::Header;
    std::set<std::vector<std::uint64_t>> seen_alpha, seen_beta;
    PackingConfig cfg;
    int alpha_popcount = -1, beta_popcount = -1;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token) || token[0] == '#') continue;

        if (token == "norbs") {
            int n = 0;
            if (!(ls >> n) || n < 1)
                throw FormatError("det list: bad norbs header on line " +
                                  std::to_string(line_no));
            list.norbs = n;
            cfg = make_packing(n, std::min(n, 64));
            continue;
        }
        if (token == "alpha") { section = Section::Alpha; continue; }
        if (token == "beta") { section = Section::Beta; continue; }

        if (list.norbs == 0)
            throw FormatError("det list: mask before norbs header on line " +
                              std::to_string(line_no));
        if (section == Section::Header)
            throw FormatError("det list: mask outside alpha/beta section on line " +
                              std::to_string(line_no));

        BitString mask = parse_mask(token, cfg, line_no);
        const int popcount = popcount_words(mask.words.data(), cfg.nwords);
        auto& seen = section == Section::Alpha ? seen_alpha : seen_beta;
        if (!seen.insert(mask.words).second)
            throw FormatError("det list: duplicate mask '" + token + "' on line " +
                              std::to_string(line_no));
        int& expected = section == Section::Alpha ? alpha_popcount : beta_popcount;
        if (expected < 0) {
            expected = popcount;
        } else if (popcount != expected) {
            throw FormatError("det list: inconsistent electron count on line " +
                              std::to_string(line_no) + " (" + std::to_string(popcount) +
                              " vs " + std::to_string(expected) + ")");
        }
        (section == Section::Alpha ? list.alpha : list.beta).push_back(std::move(mask));
    }

    if (list.norbs == 0) throw FormatError("det list: missing norbs header");
    if (list.alpha.empty()) throw FormatError("det list: empty alpha section");
    if (list.beta.empty()) throw FormatError("det list: empty beta section");
    return list;
}

void write_det_list(const DetList& list, std::ostream& out) {
    const auto write_mask = [&out](const BitString& s) {
        static const char digits[] = "0123456789abcdef";
        std::string hex;
        for (int bit = 0; bit < s.cfg.nbits; bit += 4) {
            int digit = 0;
            for (int b = 0; b < 4 && bit + b < s.cfg.nbits; ++b)
                if (test_bit(s.words.data(), s.cfg, bit + b)) digit |= 1 << b;
            hex.push_back(digits[digit]);
        }
        while (hex.size() > 1 && hex.back() == '0') hex.pop_back();
        std::reverse(hex.begin(), hex.end());
        out << "0x" << hex << '\n';
    };

    out << "norbs " << list.norbs << '\n';
    out << "alpha\n";
    for (const BitString& s : list.alpha) write_mask(s);
    out << "beta\n";
    for (const BitString& s : list.beta) write_mask(s);
}

void shuffle_strings(std::vector<BitString>& strings, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = strings.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next() % i);
        std::swap(strings[i - 1], strings[j]);
    }
}

} // namespace detci
