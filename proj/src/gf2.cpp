#include "hidsym/gf2.hpp"

#include <algorithm>

namespace hidsym {

namespace {

int high_bit(std::uint64_t v) {
    return 63 - std::countl_zero(v);
}

}  // namespace

bool Gf2Matrix::append_if_independent(std::uint64_t y) {
    if (ncols_ < 64 && (y >> ncols_))
        throw std::invalid_argument("Gf2Matrix: row wider than ncols");

    // Forward-reduce against the existing rows.
    for (std::size_t i = 0; i < rows_.size() && y; ++i) {
        if ((y >> pivots_[i]) & 1)
            y ^= rows_[i];
    }
    if (y == 0)
        return false;

    const int piv = high_bit(y);
    // Back-substitute so earlier rows lose the new pivot bit.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((rows_[i] >> piv) & 1)
            rows_[i] ^= y;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv,
                                      std::greater<int>());
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, y);
    return true;
}

std::vector<std::uint64_t> Gf2Matrix::nullspace_basis() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (int p : pivots_)
        is_pivot[p] = true;

    std::vector<std::uint64_t> basis;
    for (int j = 0; j < ncols_; ++j) {
        if (is_pivot[j])
            continue;
        // Free column j: set v_j = 1, solve the pivot coordinates from RREF.
        std::uint64_t v = std::uint64_t{1} << j;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if ((rows_[i] >> j) & 1)
                v |= std::uint64_t{1} << pivots_[i];
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace hidsym
