#include "hidsym/transforms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hidsym {

namespace {

void check_pow2(std::size_t n) {
    if (n == 0 || (n & (n - 1)))
        throw std::invalid_argument("transform length must be a power of two");
}

template <typename T>
void fwht_impl(std::span<T> v, std::uint64_t* ops) {
    check_pow2(v.size());
    std::uint64_t count = 0;
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const T a = v[j];
                const T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
                ++count;
            }
        }
    }
    if (ops)
        *ops += count;
}

template <typename T>
void scale_all(std::span<T> v, double s) {
    for (auto& x : v)
        x *= s;
}

}  // namespace

void fwht(std::span<std::int64_t> v, std::uint64_t* ops) {
    fwht_impl(v, ops);
}

void fwht(std::span<double> v, bool normalize, std::uint64_t* ops) {
    fwht_impl(v, ops);
    if (normalize)
        scale_all(v, 1.0 / std::sqrt(static_cast<double>(v.size())));
}

void fwht(std::span<std::complex<double>> v, bool normalize,
          std::uint64_t* ops) {
    fwht_impl(v, ops);
    if (normalize)
        scale_all(v, 1.0 / std::sqrt(static_cast<double>(v.size())));
}

void qft(std::span<std::complex<double>> v, bool inverse, std::uint64_t* ops) {
    using cplx = std::complex<double>;
    const std::size_t n = v.size();
    check_pow2(n);
    std::uint64_t count = 0;

    // Bit-reversal permutation.
    const int bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        std::size_t x = i;
        for (int b = 0; b < bits; ++b) {
            r = (r << 1) | (x & 1);
            x >>= 1;
        }
        if (r > i)
            std::swap(v[i], v[r]);
    }

    const double sign = inverse ? -1.0 : 1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx a = v[i + j];
                const cplx b = v[i + j + len / 2] * w;
                v[i + j] = a + b;
                v[i + j + len / 2] = a - b;
                w *= wlen;
                ++count;
            }
        }
    }
    scale_all(v, 1.0 / std::sqrt(static_cast<double>(n)));
    if (ops)
        *ops += count;
}

}  // namespace hidsym
