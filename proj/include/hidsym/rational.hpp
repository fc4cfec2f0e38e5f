#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hidsym {

/// Exact reduced fraction; denominator >= 1. All arithmetic is integral.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);  // reduces, normalizes sign

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct Convergent {
    long long h = 0;  // numerator
    long long k = 1;  // denominator
    int index = 0;
};

/// Partial quotients [a0; a1, ...] of a/b via the Euclidean algorithm.
/// a >= 0, b >= 1; a_i >= 1 for i >= 1 and reconstruction is exact.
std::vector<long long> cf_quotients(long long a, long long b);

/// Convergents h_i/k_i from the standard recurrence; the last one equals the
/// input fraction exactly.
std::vector<Convergent> convergents(const std::vector<long long>& quotients);

/// Last convergent of x with denominator <= kmax (0/1 always qualifies).
/// Minimizes the residual |k*x - h| over all fractions with k <= kmax.
Convergent best_bounded(const Fraction& x, long long kmax);

/// Elimination pair (alpha1, alpha2) with |alpha_i| <= M and small
/// |alpha1*ky1 + alpha2*ky2|, from the bounded convergent of ky1/ky2.
struct CancelCombination {
    long long alpha1 = 0;
    long long alpha2 = 0;
    unsigned long long residual = 0;
};

struct DegeneratePairError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

CancelCombination cancel_combination(long long ky1, long long ky2, long long m);

}  // namespace hidsym
