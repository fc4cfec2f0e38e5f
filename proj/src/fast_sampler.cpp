#include "hidsym/fast_sampler.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "hidsym/transforms.hpp"

namespace hidsym {

namespace {

std::uint64_t g_last_ops = 0;

void check_size(const OracleTable& f) {
    if (f.n < 1 || f.n > 24)
        throw std::length_error("fast sampler: n out of range (n <= 24)");
    if (f.values.size() != f.size())
        throw std::invalid_argument("fast sampler: malformed table");
}

/// Conditional x-register weights for the Simon sampler given the f-register
/// outcome y2. Integer FWHT of the +/-1 phase vector; exact.
std::vector<std::int64_t> simon_conditional(const OracleTable& f,
                                            std::uint32_t y2,
                                            std::uint64_t* ops) {
    std::vector<std::int64_t> v(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x)
        v[x] = (std::popcount(f.values[x] & y2) & 1) ? -1 : 1;
    fwht(std::span<std::int64_t>(v), ops);
    return v;
}

/// Conditional x-register amplitudes for the Shor sampler given k_y
/// (unnormalized: input entries have modulus 1, so the unitary qft keeps
/// norm^2 at N).
std::vector<std::complex<double>> shor_conditional(const OracleTable& f,
                                                   std::uint32_t ky,
                                                   std::uint64_t* ops) {
    const std::uint64_t big_n = f.size();
    std::vector<std::complex<double>> v(big_n);
    for (std::uint64_t x = 0; x < big_n; ++x) {
        const std::uint64_t t = (static_cast<std::uint64_t>(f.values[x]) * ky) % big_n;
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(t) /
                           static_cast<double>(big_n);
        v[x] = {std::cos(ang), std::sin(ang)};
    }
    qft(v, /*inverse=*/false, ops);
    return v;
}

}  // namespace

std::uint64_t last_sample_ops() { return g_last_ops; }

SimonSample sample_simon_y(const OracleTable& f, Rng& rng) {
    check_size(f);
    const std::uint64_t big_n = f.size();
    const auto y2 = static_cast<std::uint32_t>(rng.below(big_n));

    g_last_ops = 0;
    const auto w = simon_conditional(f, y2, &g_last_ops);

    // Parseval: sum of w^2 is exactly N^2 (fits u64 for n <= 24).
    const std::uint64_t total = big_n * big_n;
    const std::uint64_t r = rng.below(total);
    std::uint64_t acc = 0;
    for (std::uint32_t y1 = 0; y1 < big_n; ++y1) {
        acc += static_cast<std::uint64_t>(w[y1] * w[y1]);
        if (r < acc)
            return {y1, y2};
    }
    return {static_cast<std::uint32_t>(big_n - 1), y2};
}

std::pair<std::uint32_t, std::uint32_t> sample_shor_pair(const OracleTable& f,
                                                         Rng& rng) {
    check_size(f);
    const std::uint64_t big_n = f.size();
    const auto ky = static_cast<std::uint32_t>(rng.below(big_n));

    g_last_ops = 0;
    const auto v = shor_conditional(f, ky, &g_last_ops);

    double total = 0.0;
    for (const auto& a : v)
        total += std::norm(a);
    const double r = rng.real01() * total;
    double acc = 0.0;
    for (std::uint32_t kx = 0; kx < big_n; ++kx) {
        acc += std::norm(v[kx]);
        if (r < acc)
            return {kx, ky};
    }
    return {static_cast<std::uint32_t>(big_n - 1), ky};
}

std::vector<double> simon_joint_distribution(const OracleTable& f) {
    check_size(f);
    const std::uint64_t big_n = f.size();
    std::vector<double> joint(big_n * big_n);
    const double denom = static_cast<double>(big_n) * static_cast<double>(big_n) *
                         static_cast<double>(big_n);
    for (std::uint32_t y2 = 0; y2 < big_n; ++y2) {
        const auto w = simon_conditional(f, y2, nullptr);
        for (std::uint32_t y1 = 0; y1 < big_n; ++y1) {
            joint[y1 + (static_cast<std::size_t>(y2) << f.n)] =
                static_cast<double>(w[y1] * w[y1]) / denom;
        }
    }
    return joint;
}

std::vector<double> shor_joint_distribution(const OracleTable& f) {
    check_size(f);
    const std::uint64_t big_n = f.size();
    std::vector<double> joint(big_n * big_n);
    for (std::uint32_t ky = 0; ky < big_n; ++ky) {
        const auto v = shor_conditional(f, ky, nullptr);
        for (std::uint32_t kx = 0; kx < big_n; ++kx) {
            joint[kx + (static_cast<std::size_t>(ky) << f.n)] =
                std::norm(v[kx]) / (static_cast<double>(big_n) * static_cast<double>(big_n));
        }
    }
    return joint;
}

}  // namespace hidsym
