#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hidsym/fast_sampler.hpp"
#include "hidsym/gf2.hpp"
#include "hidsym/instances.hpp"
#include "hidsym/rng.hpp"
#include "hidsym/state_sim.hpp"

using namespace hidsym;

namespace {

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
    double tv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        tv += std::abs(a[i] - b[i]);
    return 0.5 * tv;
}

std::vector<double> dense_simon_distribution(const OracleTable& f) {
    auto s = prepare_oracle_state(f);
    hadamard_register(s, Register::Both);
    return s.full_distribution();
}

std::vector<double> dense_shor_distribution(const OracleTable& f) {
    auto s = prepare_oracle_state(f);
    qft_register(s, Register::Both, false);
    return s.full_distribution();
}

OracleTable random_table(int n, std::uint64_t seed) {
    Rng rng(seed);
    OracleTable f{n, std::vector<std::uint32_t>(std::size_t{1} << n)};
    for (auto& v : f.values)
        v = static_cast<std::uint32_t>(rng.below(f.size()));
    return f;
}

}  // namespace

TEST_CASE("simon joint distribution equals the dense simulator") {
    // Exactness of the two-stage factorization, all instance kinds, n <= 5.
    std::vector<OracleTable> tables;
    tables.push_back(gen_simon(3, 5, 2, 1).table);
    tables.push_back(gen_simon(5, 9, 17, 2).table);
    tables.push_back(gen_linear(4, 3).table);
    tables.push_back(gen_multixor(4, 6, 4).reduce());
    tables.push_back(random_table(4, 5));
    for (const auto& f : tables) {
        const auto fast = simon_joint_distribution(f);
        const auto dense = dense_simon_distribution(f);
        REQUIRE(fast.size() == dense.size());
        CHECK(total_variation(fast, dense) <= 1e-9);
    }
}

TEST_CASE("shor joint distribution equals the dense simulator") {
    std::vector<OracleTable> tables;
    tables.push_back(make_shor(5, 4, 2, {1, 0, 1, 0}).table);
    tables.push_back(gen_shor(5, 5, 3, 7).table);
    tables.push_back(random_table(5, 9));
    for (const auto& f : tables) {
        const auto fast = shor_joint_distribution(f);
        const auto dense = dense_shor_distribution(f);
        REQUIRE(fast.size() == dense.size());
        CHECK(total_variation(fast, dense) <= 1e-9);
    }
}

TEST_CASE("every simon sample satisfies the planted constraint exactly") {
    const auto inst = gen_simon(3, 5, 6, 11);
    const BitWord r = pack_ry(BitWord(inst.p, 3), BitWord(inst.q, 3));
    Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
        const auto s = sample_simon_y(inst.table, rng);
        const BitWord y = pack_ry(BitWord(s.y1, 3), BitWord(s.y2, 3));
        REQUIRE(dot_mod2(r, y) == 0);
    }
}

TEST_CASE("simon n=1 degenerate example") {
    // f constant zero with (p,q)=(1,0): y1 is always 0, y2 unbiased.
    const OracleTable f{1, {0, 0}};
    Rng rng(15);
    int y2_one = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto s = sample_simon_y(f, rng);
        CHECK(s.y1 == 0);
        y2_one += s.y2;
    }
    CHECK(y2_one > 450);
    CHECK(y2_one < 550);
}

TEST_CASE("y2 marginal is uniform") {
    const auto inst = gen_simon(4, 7, 3, 17);
    Rng rng(19);
    std::vector<int> counts(16, 0);
    const int draws = 16000;
    for (int t = 0; t < draws; ++t)
        ++counts[sample_simon_y(inst.table, rng).y2];
    // chi^2 with 15 dof; 60 is far beyond the 0.999 quantile (~37.7).
    double chi2 = 0.0;
    const double expect = draws / 16.0;
    for (int c : counts)
        chi2 += (c - expect) * (c - expect) / expect;
    CHECK(chi2 < 60.0);
}

TEST_CASE("shor samples avoid the cancelled comb") {
    // With s = p*kx + q*ky mod N, outcomes with p | s and s != 0 have exactly
    // zero amplitude on a complete-period instance; no sample ever lands
    // there.
    const auto inst = make_shor(6, 4, 2, {1, 0, 1, 0});
    const std::uint64_t big_n = 64;
    Rng rng(21);
    for (int t = 0; t < 2000; ++t) {
        const auto [kx, ky] = sample_shor_pair(inst.table, rng);
        const std::uint64_t s =
            (static_cast<std::uint64_t>(inst.p) * kx +
             static_cast<std::uint64_t>(inst.q) * ky) % big_n;
        REQUIRE((s == 0 || s % inst.p != 0));
    }
}

TEST_CASE("fixed seed reproduces sample sequences") {
    const auto inst = gen_shor(6, 5, 3, 23);
    Rng a(25), b(25);
    for (int t = 0; t < 100; ++t)
        CHECK(sample_shor_pair(inst.table, a) ==
              sample_shor_pair(inst.table, b));

    const auto sim = gen_simon(5, 11, 4, 27);
    Rng c(29), d(29);
    for (int t = 0; t < 100; ++t) {
        const auto s1 = sample_simon_y(sim.table, c);
        const auto s2 = sample_simon_y(sim.table, d);
        CHECK(s1.y1 == s2.y1);
        CHECK(s1.y2 == s2.y2);
    }
}

TEST_CASE("one sample costs one N log N transform") {
    Rng rng(31);
    for (int n : {8, 12}) {
        const std::uint64_t big_n = 1ULL << n;
        const std::uint64_t expect = big_n / 2 * static_cast<std::uint64_t>(n);
        const auto f = random_table(n, 33 + n);
        sample_simon_y(f, rng);
        CHECK(last_sample_ops() == expect);
        sample_shor_pair(f, rng);
        CHECK(last_sample_ops() == expect);
    }
}

TEST_CASE("joint distributions normalize") {
    const auto f = random_table(5, 35);
    for (const auto& joint :
         {simon_joint_distribution(f), shor_joint_distribution(f)}) {
        double total = 0.0;
        for (double p : joint)
            total += p;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("malformed tables rejected") {
    OracleTable bad{3, {0, 1, 2}};
    Rng rng(37);
    CHECK_THROWS_AS(sample_simon_y(bad, rng), std::invalid_argument);
    OracleTable wide{25, {}};
    CHECK_THROWS_AS(sample_shor_pair(wide, rng), std::length_error);
}
