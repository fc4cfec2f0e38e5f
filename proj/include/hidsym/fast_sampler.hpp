#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hidsym/instances.hpp"
#include "hidsym/rng.hpp"

namespace hidsym {

// Exact O(N log N) sampling of the post-transform measurement distributions,
// without materializing the N^2-dimensional state. The f-register marginal
// after its own transform is exactly uniform (every conditional amplitude has
// modulus 1/sqrt(N)), so a sample is: draw the f-register outcome uniformly,
// then transform the conditional unit-modulus phase vector on the x register
// and sample from its squared magnitudes. Regression-tested against the dense
// simulator.

struct SimonSample {
    std::uint32_t y1 = 0;  // x-register outcome
    std::uint32_t y2 = 0;  // f-register outcome
};

/// Draws Y = (y1, y2) from the distribution of measuring the double-Hadamard
/// state. Integer-exact: conditional weights are integral FWHT outputs, so
/// the planted constraint R.Y = 0 holds for every emitted sample.
SimonSample sample_simon_y(const OracleTable& f, Rng& rng);

/// Draws (k_x, k_y) from the distribution of measuring the double-QFT state.
std::pair<std::uint32_t, std::uint32_t> sample_shor_pair(const OracleTable& f,
                                                         Rng& rng);

/// Arithmetic operations spent in the transform of the most recent sample.
std::uint64_t last_sample_ops();

// Full joint distributions implied by the two-stage factorization, indexed
// like the dense simulator (y1 + y2 * N). Test oracles; O(N^2 log N).
std::vector<double> simon_joint_distribution(const OracleTable& f);
std::vector<double> shor_joint_distribution(const OracleTable& f);

}  // namespace hidsym
