#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace hidsym {

/// In-place Walsh-Hadamard butterfly over integers, no normalization.
/// Length must be a power of two. Exact: entries stay integral.
void fwht(std::span<std::int64_t> v, std::uint64_t* ops = nullptr);

/// In-place Walsh-Hadamard over doubles. When `normalize` is set, each stage
/// carries the 1/sqrt(2) factor, making the transform unitary (the n-qubit
/// Hadamard layer).
void fwht(std::span<double> v, bool normalize, std::uint64_t* ops = nullptr);
void fwht(std::span<std::complex<double>> v, bool normalize,
          std::uint64_t* ops = nullptr);

/// Unitary radix-2 FFT: v[k] <- (1/sqrt(N)) sum_x exp(s 2*pi*i x k / N) v[x]
/// with s = +1 forward (the QFT phase convention) and s = -1 when `inverse`.
/// Length must be a power of two.
void qft(std::span<std::complex<double>> v, bool inverse,
         std::uint64_t* ops = nullptr);

}  // namespace hidsym
