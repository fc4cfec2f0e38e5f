#include "hidsym/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace hidsym {

Fraction::Fraction(long long n, long long d) {
    if (d == 0)
        throw std::invalid_argument("Fraction: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : 1;
}

std::vector<long long> cf_quotients(long long a, long long b) {
    if (b < 1)
        throw std::invalid_argument("cf_quotients: denominator must be >= 1");
    if (a < 0)
        throw std::invalid_argument("cf_quotients: numerator must be >= 0");
    std::vector<long long> qs;
    do {
        qs.push_back(a / b);
        const long long r = a % b;
        a = b;
        b = r;
    } while (b != 0);
    return qs;
}

std::vector<Convergent> convergents(const std::vector<long long>& quotients) {
    std::vector<Convergent> cs;
    // Seeds h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
    long long h1 = 1, k1 = 0;
    long long h2 = 0, k2 = 1;
    int i = 0;
    for (long long a : quotients) {
        const long long h = a * h1 + h2;
        const long long k = a * k1 + k2;
        h2 = h1;
        k2 = k1;
        h1 = h;
        k1 = k;
        cs.push_back({h, k, i++});
    }
    return cs;
}

Convergent best_bounded(const Fraction& x, long long kmax) {
    if (kmax < 1)
        throw std::invalid_argument("best_bounded: kmax must be >= 1");
    const bool neg = x.num < 0;
    const long long a = neg ? -x.num : x.num;
    const auto cs = convergents(cf_quotients(a, x.den));
    Convergent best = cs.front();  // a0/1 always has denominator 1
    for (const auto& c : cs) {
        if (c.k <= kmax)
            best = c;
    }
    if (neg)
        best.h = -best.h;
    return best;
}

CancelCombination cancel_combination(long long ky1, long long ky2, long long m) {
    if (ky1 <= 0 || ky2 <= 0)
        throw DegeneratePairError("cancel_combination: zero k_y outcome");
    if (m < 1)
        throw std::invalid_argument("cancel_combination: M must be >= 1");
    const Convergent c = best_bounded(Fraction(ky1, ky2), m);
    const long long alpha1 = c.k;
    const long long alpha2 = -c.h;
    const long long r = alpha1 * ky1 + alpha2 * ky2;
    return {alpha1, alpha2, static_cast<unsigned long long>(std::llabs(r))};
}

}  // namespace hidsym
