#include "dsiht/matio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace dsiht {

ParseError::ParseError(std::size_t row_, std::size_t col_, const std::string& what)
    : std::runtime_error("row " + std::to_string(row_) + ", entry " + std::to_string(col_) +
                         ": " + what),
      row(row_),
      col(col_) {}

namespace {

// One entry: [sign]REAL[[sign]IMAG(i|j)] | [sign]IMAG(i|j) | [sign]REAL,
// where a bare i/j stands for coefficient 1. No whitespace inside.
CpxScalar parse_entry(const std::string& tok, std::size_t row, std::size_t col) {
    const char* p = tok.c_str();
    auto fail = [&](const char* msg) -> CpxScalar { throw ParseError(row, col, std::string(msg) + " in '" + tok + "'"); };

    auto read_signed = [&](const char*& s, bool& bare_unit) -> double {
        double sign = 1.0;
        if (*s == '+' || *s == '-') {
            if (*s == '-') sign = -1.0;
            ++s;
        }
        if (*s == 'i' || *s == 'j') {
            ++s;
            bare_unit = true;
            return sign;
        }
        bare_unit = false;
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end == s) fail("malformed literal");
        if (!std::isfinite(v)) fail("non-finite value");
        s = end;
        return sign < 0 ? -v : v;
    };

    bool unit = false;
    const double first = read_signed(p, unit);
    if (unit) {
        if (*p != '\0') fail("trailing characters");
        return {0.0, first};
    }
    if (*p == '\0') return {first, 0.0};
    if (*p == 'i' || *p == 'j') {
        if (*(p + 1) != '\0') fail("trailing characters");
        return {0.0, first};
    }
    if (*p != '+' && *p != '-') fail("malformed literal");
    const double second = read_signed(p, unit);
    if (!unit) {
        if (*p != 'i' && *p != 'j') fail("missing imaginary suffix");
        ++p;
    }
    if (*p != '\0') fail("trailing characters");
    return {first, second};
}

}  // namespace

CpxMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<CpxScalar>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<CpxScalar> entries;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start)
                entries.push_back(parse_entry(std::string(line.substr(start, i - start)),
                                              rows.size() + 1, entries.size() + 1));
        }
        if (entries.empty()) continue;  // blank line
        if (!rows.empty() && entries.size() != rows.front().size())
            throw ParseError(rows.size() + 1, entries.size(),
                             "ragged row (expected " + std::to_string(rows.front().size()) +
                                 " entries, got " + std::to_string(entries.size()) + ")");
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ParseError(1, 1, "empty matrix text");

    CpxMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

std::string format_matrix(const CpxMatrix& m, int digits) {
    if (digits < 1 || digits > 17) throw std::invalid_argument("digits must be in 1..17");
    std::string out;
    char buf[64];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            const CpxScalar v = m(r, c);
            std::snprintf(buf, sizeof buf, "%.*g", digits, v.real());
            out += buf;
            if (v.imag() != 0.0) {
                out += v.imag() < 0.0 ? '-' : '+';
                std::snprintf(buf, sizeof buf, "%.*g", digits, std::abs(v.imag()));
                out += buf;
                out += 'i';
            }
        }
        out += '\n';
    }
    return out;
}

CpxMatrix random_int_complex_matrix(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    SplitMix64 rng{seed};
    CpxMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const double re = static_cast<double>(rng.next() % n + 1);
            const double im = static_cast<double>(rng.next() % n + 1);
            m(r, c) = {re, im};
        }
    return m;
}

}  // namespace dsiht
