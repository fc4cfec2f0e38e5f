#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hidsym/instances.hpp"
#include "hidsym/shor.hpp"

namespace hidsym {

/// Geometric sample lattice chi_j = chi_min * ratio^j, j in [0, 2^n).
struct GeometricLattice {
    double chi_min = 1.0;
    double ratio = 2.0;
    int n = 0;

    GeometricLattice() = default;
    GeometricLattice(double chi_min_, double ratio_, int n_)
        : chi_min(chi_min_), ratio(ratio_), n(n_) {
        if (chi_min <= 0.0 || ratio <= 1.0)
            throw std::invalid_argument(
                "GeometricLattice: need chi_min > 0 and ratio > 1");
    }
};

/// Log-domain samples s_j = log_b(phi(chi_j)); stored in logs so b^f never
/// overflows at n = 16.
struct SelfSimSignal {
    GeometricLattice lattice;
    double base_b = 2.0;
    std::vector<double> log_samples;
};

struct QuantizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfSimReport {
    bool found = false;
    double alpha = 0.0;
    double beta = 0.0;
    double max_quant_residual = 0.0;
    ShorReport shor;
};

/// Synthesizes the log-domain signal of a planted instance: s_j = f(j), so
/// the implied phi satisfies phi(g^p chi) = b^q phi(chi) on the lattice.
SelfSimSignal synth_signal(const ShorInstance& inst, double g, double b,
                           double chi_min);

/// Rounds the log-domain samples to an integer oracle table; every sample
/// must sit within `delta` of an integer in [0, 2^n).
OracleTable discretize(const SelfSimSignal& sig, double delta);

/// Discretize, run the Shor-type detector, map p -> alpha = g^p and
/// q -> beta = b^q.
SelfSimReport detect_scale_invariance(const SelfSimSignal& sig,
                                      const ShorConfig& cfg, double delta);

}  // namespace hidsym
