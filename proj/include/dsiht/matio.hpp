#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dsiht/types.hpp"

namespace dsiht {

/// SplitMix64 stream; the state advances functionally.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t row, std::size_t col, const std::string& what);
    std::size_t row, col;  // 1-based entry position
};

/// Text matrix format: rows on separate lines, entries separated by spaces
/// or tabs. Each entry is `a`, `bi`, or `a+bi` (also `-i`, `2-3j`, exponent
/// literals); no whitespace inside an entry. Blank lines are ignored.
CpxMatrix parse_matrix(std::string_view text);

/// Render with the given significant digits (1..17); a zero imaginary part
/// prints as a plain real. parse(format(m)) at 17 digits is exact.
std::string format_matrix(const CpxMatrix& m, int digits = 6);

/// n x n matrix of a+bi entries with a, b uniform integers in [1, n] drawn
/// row-major (real part first) from the SplitMix64 stream of `seed`.
CpxMatrix random_int_complex_matrix(std::size_t n, std::uint64_t seed);

}  // namespace dsiht
