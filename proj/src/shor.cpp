#include "hidsym/shor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hidsym/fast_sampler.hpp"

namespace hidsym {

std::vector<PairSample> collect_pairs(const OracleTable& f, int count,
                                      Rng& rng, QueryCounter& counter) {
    if (count < 2)
        throw std::invalid_argument("collect_pairs: count must be >= 2");
    std::vector<PairSample> pairs;
    pairs.reserve(count);
    while (static_cast<int>(pairs.size()) < count) {
        const auto [kx, ky] = sample_shor_pair(f, rng);
        ++counter.quantum_runs;
        if (ky == 0)
            continue;
        pairs.push_back({kx, ky});
    }
    return pairs;
}

Fraction combine_pair(const PairSample& a, const PairSample& b, long long m,
                      std::uint64_t big_n) {
    const CancelCombination cc = cancel_combination(a.ky, b.ky, m);
    const long long s = cc.alpha1 * static_cast<long long>(a.kx) +
                        cc.alpha2 * static_cast<long long>(b.kx);
    const auto n_ll = static_cast<long long>(big_n);
    const long long r = ((s % n_ll) + n_ll) % n_ll;
    return Fraction(r, n_ll);
}

std::vector<long long> candidate_denominators(const Fraction& xi,
                                              long long p_max) {
    if (p_max < 1)
        throw std::invalid_argument("candidate_denominators: p_max < 1");
    std::set<long long> dens{1};
    for (const auto& c : convergents(cf_quotients(xi.num, xi.den))) {
        if (c.k <= p_max)
            dens.insert(c.k);
    }
    return {dens.begin(), dens.end()};
}

std::optional<std::uint32_t> recover_q(const OracleTable& f, std::uint32_t p,
                                       int trials, Rng& rng,
                                       QueryCounter& counter) {
    if (p < 1 || p >= f.size())
        throw std::invalid_argument("recover_q: p out of range");
    const std::uint64_t span = f.size() - p;
    std::optional<std::uint32_t> q;
    bool consistent = true;
    for (int t = 0; t < trials; ++t) {
        const auto x = static_cast<std::uint32_t>(rng.below(span));
        const auto lo = static_cast<std::int64_t>(oracle_eval(f, x, counter));
        const auto hi = static_cast<std::int64_t>(oracle_eval(f, x + p, counter));
        const std::int64_t d = hi - lo;
        if (d < 1 || (q && *q != static_cast<std::uint32_t>(d)))
            consistent = false;
        else
            q = static_cast<std::uint32_t>(d);
    }
    if (!consistent)
        return std::nullopt;
    return q;
}

bool resonance_check(const PairSample& pair, std::uint32_t p, std::uint32_t q,
                     std::uint64_t big_n, double c) {
    const std::uint64_t s = (static_cast<std::uint64_t>(p) * pair.kx +
                             static_cast<std::uint64_t>(q) * pair.ky) %
                            big_n;
    const std::uint64_t residual = std::min(s, big_n - s);
    return static_cast<double>(residual) <= c * static_cast<double>(p);
}

ShorReport detect_shor(const OracleTable& f, const ShorConfig& cfg) {
    const std::uint64_t big_n = f.size();
    const long long m_bound =
        cfg.m > 0 ? cfg.m
                  : static_cast<long long>(std::sqrt(static_cast<double>(big_n)));
    long long p_max = cfg.p_max;
    if (p_max <= 0) {
        // Integer floor(N^(1/4)), avoiding floating-point edge cases.
        p_max = 1;
        while ((p_max + 1) * (p_max + 1) * (p_max + 1) * (p_max + 1) <=
               static_cast<long long>(big_n))
            ++p_max;
    }
    if (cfg.lambda_max < 1)
        throw std::invalid_argument("ShorConfig: lambda_max must be >= 1");

    ShorReport report;
    Rng rng(cfg.seed);
    const auto pairs = collect_pairs(f, cfg.max_pairs, rng, report.counters);
    report.pairs_used = static_cast<int>(pairs.size());

    // Candidate denominators from every unordered pair combination, then
    // small multiples (continued fractions may return a divisor of p when the
    // resonance numerator shares a factor with p). Tested ascending.
    std::set<long long> candidates;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const Fraction xi = combine_pair(pairs[i], pairs[j], m_bound, big_n);
            for (long long d : candidate_denominators(xi, p_max)) {
                for (long long lambda = 1; lambda <= cfg.lambda_max; ++lambda) {
                    const long long cand = lambda * d;
                    if (cand <= p_max * cfg.lambda_max &&
                        cand < static_cast<long long>(big_n))
                        candidates.insert(cand);
                }
            }
        }
    }

    Rng verify_rng(splitmix64(cfg.seed ^ 0x73686f7276657269ULL));
    for (long long cand : candidates) {
        const auto q = recover_q(f, static_cast<std::uint32_t>(cand),
                                 cfg.verify_trials, verify_rng, report.counters);
        report.candidate_log.push_back(
            {cand, q ? static_cast<long long>(*q) : -1, q.has_value()});
        if (q) {
            report.found = true;
            report.p = static_cast<std::uint32_t>(cand);
            report.q = *q;
            int resonant = 0;
            for (const auto& pr : pairs) {
                if (resonance_check(pr, report.p, report.q, big_n, cfg.c))
                    ++resonant;
            }
            report.resonant_fraction =
                static_cast<double>(resonant) / static_cast<double>(pairs.size());
            break;
        }
    }
    return report;
}

}  // namespace hidsym
