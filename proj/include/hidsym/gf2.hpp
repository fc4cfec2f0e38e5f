#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hidsym {

/// A bit-string identified with an unsigned integer, LSB-first: bit l of
/// `value` is the coefficient of 2^l.
struct BitWord {
    std::uint64_t value = 0;
    int width = 0;

    BitWord() = default;
    BitWord(std::uint64_t v, int w) : value(v), width(w) {
        if (w < 1 || w > 64)
            throw std::invalid_argument("BitWord: width out of range");
        if (w < 64 && v >> w)
            throw std::invalid_argument("BitWord: value exceeds width");
    }

    friend bool operator==(const BitWord&, const BitWord&) = default;
};

inline BitWord xor_word(BitWord a, BitWord b) {
    if (a.width != b.width)
        throw std::invalid_argument("xor_word: width mismatch");
    return BitWord(a.value ^ b.value, a.width);
}

/// Scalar product modulo two: parity of the bitwise AND.
inline int dot_mod2(BitWord r, BitWord y) {
    if (r.width != y.width)
        throw std::invalid_argument("dot_mod2: width mismatch");
    return std::popcount(r.value & y.value) & 1;
}

/// Packs the constraint word R = (p, q) into 2n bits: p occupies bits [0, n)
/// (pairing with the x-register outcome y1), q occupies bits [n, 2n)
/// (pairing with the f-register outcome y2). The same layout packs Y = (y1, y2).
inline BitWord pack_ry(BitWord p, BitWord q) {
    if (p.width != q.width)
        throw std::invalid_argument("pack_ry: width mismatch");
    const int n = p.width;
    if (n > 16)
        throw std::invalid_argument("pack_ry: width > 16");
    return BitWord(p.value | (q.value << n), 2 * n);
}

inline std::pair<BitWord, BitWord> unpack_ry(BitWord ry, int n) {
    if (ry.width != 2 * n)
        throw std::invalid_argument("unpack_ry: width mismatch");
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return {BitWord(ry.value & mask, n), BitWord((ry.value >> n) & mask, n)};
}

// Row space over GF(2), kept in reduced row-echelon form so a rank query is
// free and appending a constraint costs O(rank).
class Gf2Matrix {
public:
    explicit Gf2Matrix(int ncols) : ncols_(ncols) {
        if (ncols < 1 || ncols > 64)
            throw std::invalid_argument("Gf2Matrix: ncols out of range");
    }

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    /// Appends y iff it increases the rank. Returns whether it was accepted.
    bool append_if_independent(std::uint64_t y);

    /// Basis of {v : row . v = 0 mod 2 for every row}; size ncols - rank,
    /// every vector nonzero.
    std::vector<std::uint64_t> nullspace_basis() const;

private:
    int ncols_;
    std::vector<std::uint64_t> rows_;   // RREF, pivots strictly decreasing
    std::vector<int> pivots_;           // pivot bit position of each row
};

}  // namespace hidsym
