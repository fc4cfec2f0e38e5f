#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hidsym/instances.hpp"
#include "hidsym/rng.hpp"

namespace hidsym {

enum class Register { X, F, Both };

/// Dense two-register state: basis index of |x>|f> is x + f * 2^n.
/// Reference ground truth for the structured sampler; capped at 2n <= 26.
class StateVector {
public:
    explicit StateVector(int n);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::vector<std::complex<double>>& amplitudes() { return amps_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

    std::size_t index(std::uint32_t x, std::uint32_t f) const {
        return static_cast<std::size_t>(x) |
               (static_cast<std::size_t>(f) << n_);
    }

    double norm_sq() const;

    /// |a|^2 per basis index.
    std::vector<double> full_distribution() const;

    /// Index drawn with probability |a|^2; deterministic given the rng state.
    std::size_t sample_measurement(Rng& rng) const;

private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Uniform X register queried through U_f on |y=0>: amplitude 1/sqrt(N) on
/// each |x>|f(x)>. With y=0 the xor- and plus-oracles coincide.
StateVector prepare_oracle_state(const OracleTable& f);

/// U_f|x>|y> = |x>|y xor f(x)>: a basis permutation.
void apply_xor_oracle(StateVector& s, const OracleTable& f);

/// Hadamard layer on the selected qubits (fast Walsh-Hadamard with the
/// 1/sqrt(2) factor per qubit).
void hadamard_register(StateVector& s, Register which);

/// Quantum Fourier transform on one register:
/// |x> -> (1/sqrt(N)) sum_k exp(+2 pi i x k / N) |k>, minus sign if inverse.
void qft_register(StateVector& s, Register which, bool inverse);

}  // namespace hidsym
