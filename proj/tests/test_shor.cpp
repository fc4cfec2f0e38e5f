#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "hidsym/instances.hpp"
#include "hidsym/shor.hpp"

using namespace hidsym;

TEST_CASE("collect_pairs") {
    const auto inst = make_shor(6, 4, 2, {1, 0, 0, 1});
    SUBCASE("ky = 0 never appears; discarded draws still count") {
        Rng rng(1);
        QueryCounter counter;
        const auto pairs = collect_pairs(inst.table, 40, rng, counter);
        REQUIRE(pairs.size() == 40);
        for (const auto& pr : pairs)
            CHECK(pr.ky != 0);
        CHECK(counter.quantum_runs >= 40);
    }
    SUBCASE("fixed seed reproduces the sequence") {
        Rng a(2), b(2);
        QueryCounter ca, cb;
        const auto pa = collect_pairs(inst.table, 10, a, ca);
        const auto pb = collect_pairs(inst.table, 10, b, cb);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(pa[i].kx == pb[i].kx);
            CHECK(pa[i].ky == pb[i].ky);
        }
        CHECK(ca.quantum_runs == cb.quantum_runs);
    }
    SUBCASE("count < 2 rejected") {
        Rng rng(3);
        QueryCounter counter;
        CHECK_THROWS_AS(collect_pairs(inst.table, 1, rng, counter),
                        std::invalid_argument);
    }
}

TEST_CASE("combine_pair") {
    SUBCASE("worked resonant example at N=64") {
        // p=4, q=2: 4*14+2*4 = 64 and 4*13+2*6 = 64; alphas (3,-2) give
        // xi = (3*14 - 2*13)/64 = 16/64 = 1/4.
        const Fraction xi =
            combine_pair({14, 4}, {13, 6}, /*m=*/8, /*big_n=*/64);
        CHECK(xi == Fraction(1, 4));
    }
    SUBCASE("identical pairs cancel to zero") {
        const Fraction xi = combine_pair({37, 20}, {37, 20}, 8, 64);
        CHECK(xi == Fraction(0, 1));
    }
    SUBCASE("always lands in [0,1) with denominator dividing N") {
        Rng rng(5);
        for (int t = 0; t < 500; ++t) {
            const PairSample a{static_cast<std::uint32_t>(rng.below(256)),
                               static_cast<std::uint32_t>(rng.below(255) + 1)};
            const PairSample b{static_cast<std::uint32_t>(rng.below(256)),
                               static_cast<std::uint32_t>(rng.below(255) + 1)};
            const Fraction xi = combine_pair(a, b, 16, 256);
            CHECK(xi.num >= 0);
            CHECK(xi.num < xi.den);
            CHECK(256 % xi.den == 0);
        }
    }
}

TEST_CASE("candidate_denominators") {
    CHECK(candidate_denominators(Fraction(1, 4), 8) ==
          std::vector<long long>{1, 4});
    CHECK(candidate_denominators(Fraction(0, 1), 8) ==
          std::vector<long long>{1});
    // Convergents of 5/16: 0/1, 1/3, 5/16; 16 exceeds the bound.
    CHECK(candidate_denominators(Fraction(5, 16), 8) ==
          std::vector<long long>{1, 3});
    CHECK_THROWS_AS(candidate_denominators(Fraction(1, 4), 0),
                    std::invalid_argument);
}

TEST_CASE("recover_q") {
    const auto inst = gen_shor(16, 13, 3, 7);
    SUBCASE("true period returns the planted step") {
        Rng rng(9);
        QueryCounter counter;
        const auto q = recover_q(inst.table, 13, 16, rng, counter);
        REQUIRE(q.has_value());
        CHECK(*q == 3);
        CHECK(counter.classical_queries == 32);
    }
    SUBCASE("wrong period is inconsistent") {
        Rng rng(11);
        QueryCounter counter;
        CHECK_FALSE(recover_q(inst.table, 5, 16, rng, counter).has_value());
    }
    SUBCASE("p out of range rejected") {
        Rng rng(13);
        QueryCounter counter;
        CHECK_THROWS_AS(recover_q(inst.table, 0, 4, rng, counter),
                        std::invalid_argument);
        CHECK_THROWS_AS(recover_q(inst.table, inst.table.size(), 4, rng,
                                  counter),
                        std::invalid_argument);
    }
}

TEST_CASE("resonance_check") {
    CHECK(resonance_check({14, 4}, 4, 2, 64, 0.0));  // 56 + 8 = 64, residual 0
    CHECK(resonance_check({0, 0}, 13, 3, 65536, 0.0));
    // Residual N/2 with c*p < N/2.
    CHECK_FALSE(resonance_check({32, 0}, 1, 0, 64, 4.0));
}

TEST_CASE("detect_shor end to end") {
    SUBCASE("complete-period instance at N=64") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto inst = gen_shor(6, 4, 2, 20 + seed);
            ShorConfig cfg;
            cfg.seed = seed;
            const auto report = detect_shor(inst.table, cfg);
            REQUIRE(report.found);
            CHECK(report.p == 4);
            CHECK(report.q == 2);
        }
    }
    SUBCASE("incomplete periods at N=4096, p=7, q=3") {
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto inst = gen_shor(12, 7, 3, 40 + seed);
            ShorConfig cfg;
            cfg.seed = seed;
            const auto report = detect_shor(inst.table, cfg);
            if (report.found && report.p == 7 && report.q == 3)
                ++hits;
        }
        CHECK(hits >= 18);
    }
    SUBCASE("found implies the symmetry holds on the whole table") {
        const auto inst = gen_shor(10, 5, 3, 17);
        ShorConfig cfg;
        cfg.seed = 4;
        const auto report = detect_shor(inst.table, cfg);
        REQUIRE(report.found);
        for (std::uint32_t x = 0; x + report.p < inst.table.size(); ++x)
            REQUIRE(inst.table.values[x + report.p] ==
                    inst.table.values[x] + report.q);
    }
    SUBCASE("staircase table resolves to the smallest verifying shift") {
        // f(x) = floor(x/2) + 1: shifts 2, 4, 6, ... all work; ascending
        // candidate order returns the fundamental one.
        OracleTable f{6, {}};
        for (std::uint32_t x = 0; x < 64; ++x)
            f.values.push_back(x / 2 + 1);
        ShorConfig cfg;
        cfg.seed = 5;
        cfg.p_max = 4;
        const auto report = detect_shor(f, cfg);
        REQUIRE(report.found);
        CHECK(report.p == 2);
        CHECK(report.q == 1);
    }
    SUBCASE("candidate log is ascending and verification stops at the hit") {
        const auto inst = gen_shor(12, 7, 3, 41);
        ShorConfig cfg;
        cfg.seed = 6;
        const auto report = detect_shor(inst.table, cfg);
        for (std::size_t i = 1; i < report.candidate_log.size(); ++i)
            CHECK(report.candidate_log[i].p > report.candidate_log[i - 1].p);
        if (report.found) {
            CHECK(report.candidate_log.back().p ==
                  static_cast<long long>(report.p));
            CHECK(report.candidate_log.back().verified);
        }
    }
}

TEST_CASE("combined xi sits near a multiple of 1/p for resonant pairs") {
    // For two pairs inside the resonance window, p*S = a1*s1 + a2*s2 - q*R
    // mod N with |s_i| <= c*p and R the cancellation residual, so the
    // eliminated fraction lands within ((|a1|+|a2|)*c*p + q*R)/(p*N) of some
    // m/p.
    const auto inst = gen_shor(12, 7, 3, 43);
    const std::uint64_t big_n = 4096;
    const long long m_bound = 64;
    const double c = 4.0;
    Rng rng(19);
    QueryCounter counter;
    const auto pairs = collect_pairs(inst.table, 12, rng, counter);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (!resonance_check(pairs[i], 7, 3, big_n, c) ||
                !resonance_check(pairs[j], 7, 3, big_n, c))
                continue;
            const auto cc = cancel_combination(pairs[i].ky, pairs[j].ky, m_bound);
            const Fraction xi = combine_pair(pairs[i], pairs[j], m_bound, big_n);
            const double x = static_cast<double>(xi.num) /
                             static_cast<double>(xi.den);
            double best = 1.0;
            for (int m = 0; m <= 7; ++m)
                best = std::min(best, std::abs(x - m / 7.0));
            const double bound =
                (static_cast<double>(std::llabs(cc.alpha1) +
                                     std::llabs(cc.alpha2)) *
                     c * 7.0 +
                 3.0 * static_cast<double>(cc.residual)) /
                (7.0 * static_cast<double>(big_n));
            CHECK(best <= bound);
        }
    }
}
