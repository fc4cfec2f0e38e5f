#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hidsym/instances.hpp"
#include "hidsym/rational.hpp"

namespace hidsym {

struct PairSample {
    std::uint32_t kx = 0;
    std::uint32_t ky = 0;
};

struct ShorConfig {
    int max_pairs = 12;
    long long m = 0;          // 0 -> floor(sqrt(N))
    long long p_max = 0;      // 0 -> floor(N^(1/4))
    int lambda_max = 16;      // candidate-multiple search bound
    double c = 4.0;           // resonance window factor (diagnostics only)
    int verify_trials = 32;
    std::uint64_t seed = 0;
};

struct ShorCandidateTrial {
    long long p = 0;
    long long q = 0;  // -1 when the difference probe was inconsistent
    bool verified = false;
};

struct ShorReport {
    bool found = false;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    int pairs_used = 0;
    double resonant_fraction = 0.0;
    std::vector<ShorCandidateTrial> candidate_log;
    QueryCounter counters;
};

/// Draws `count` pairs from the double-QFT distribution; k_y = 0 outcomes are
/// degenerate for the elimination step and are resampled (still counted as
/// quantum runs).
std::vector<PairSample> collect_pairs(const OracleTable& f, int count,
                                      Rng& rng, QueryCounter& counter);

/// Eliminates q from two samples: with (alpha1, alpha2) from
/// cancel_combination(a.ky, b.ky, M), returns
/// xi = ((alpha1*a.kx + alpha2*b.kx) mod N) / N as an exact reduced fraction.
Fraction combine_pair(const PairSample& a, const PairSample& b, long long m,
                      std::uint64_t big_n);

/// Denominators of the convergents of xi up to p_max, ascending, always
/// including 1.
std::vector<long long> candidate_denominators(const Fraction& xi,
                                              long long p_max);

/// Probes d(x) = f(x + p') - f(x) at `trials` random x in [0, N - p');
/// returns q' when all probes agree and q' >= 1, nullopt otherwise.
std::optional<std::uint32_t> recover_q(const OracleTable& f, std::uint32_t p,
                                       int trials, Rng& rng,
                                       QueryCounter& counter);

/// True iff min over integers m of |p*kx + q*ky - m*N| <= c*p.
bool resonance_check(const PairSample& pair, std::uint32_t p, std::uint32_t q,
                     std::uint64_t big_n, double c);

/// Full pipeline: collect pairs, eliminate q over all pair combinations,
/// recover p by continued fractions (and small multiples), recover q by
/// oracle differencing, verify.
ShorReport detect_shor(const OracleTable& f, const ShorConfig& cfg);

}  // namespace hidsym
