#include "hidsym/state_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "hidsym/transforms.hpp"

namespace hidsym {

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || 2 * n > 26)
        throw std::length_error("StateVector: register too large (2n <= 26)");
    amps_.assign(std::size_t{1} << (2 * n), {0.0, 0.0});
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_)
        s += std::norm(a);
    return s;
}

std::vector<double> StateVector::full_distribution() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i)
        p[i] = std::norm(amps_[i]);
    return p;
}

std::size_t StateVector::sample_measurement(Rng& rng) const {
    const double r = rng.real01();
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::norm(amps_[i]);
        if (r < acc)
            return i;
    }
    return amps_.size() - 1;
}

StateVector prepare_oracle_state(const OracleTable& f) {
    StateVector s(f.n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(f.size()));
    for (std::uint32_t x = 0; x < f.size(); ++x)
        s.amplitudes()[s.index(x, f.values[x])] = amp;
    return s;
}

void apply_xor_oracle(StateVector& s, const OracleTable& f) {
    if (f.n != s.n())
        throw std::invalid_argument("apply_xor_oracle: register size mismatch");
    auto& a = s.amplitudes();
    const std::uint32_t big_n = f.size();
    // Involution: within each x-column, swap y <-> y xor f(x).
    for (std::uint32_t x = 0; x < big_n; ++x) {
        const std::uint32_t fx = f.values[x];
        for (std::uint32_t y = 0; y < big_n; ++y) {
            const std::uint32_t y2 = y ^ fx;
            if (y < y2)
                std::swap(a[s.index(x, y)], a[s.index(x, y2)]);
        }
    }
}

namespace {

// Single-qubit Hadamard on qubit t of the combined 2n-qubit index.
void hadamard_qubit(std::vector<std::complex<double>>& a, int t) {
    const std::size_t stride = std::size_t{1} << t;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < a.size(); i += stride << 1) {
        for (std::size_t j = i; j < i + stride; ++j) {
            const auto lo = a[j];
            const auto hi = a[j + stride];
            a[j] = (lo + hi) * inv_sqrt2;
            a[j + stride] = (lo - hi) * inv_sqrt2;
        }
    }
}

}  // namespace

void hadamard_register(StateVector& s, Register which) {
    const int n = s.n();
    const int lo = (which == Register::F) ? n : 0;
    const int hi = (which == Register::X) ? n : 2 * n;
    for (int t = lo; t < hi; ++t)
        hadamard_qubit(s.amplitudes(), t);
}

void qft_register(StateVector& s, Register which, bool inverse) {
    if (which == Register::Both) {
        qft_register(s, Register::X, inverse);
        qft_register(s, Register::F, inverse);
        return;
    }
    const std::uint32_t big_n = std::uint32_t{1} << s.n();
    auto& a = s.amplitudes();
    std::vector<std::complex<double>> buf(big_n);
    if (which == Register::X) {
        // x is the low index: contiguous blocks of length N.
        for (std::uint32_t f = 0; f < big_n; ++f) {
            const std::size_t off = s.index(0, f);
            for (std::uint32_t x = 0; x < big_n; ++x)
                buf[x] = a[off + x];
            qft(buf, inverse);
            for (std::uint32_t x = 0; x < big_n; ++x)
                a[off + x] = buf[x];
        }
    } else {
        for (std::uint32_t x = 0; x < big_n; ++x) {
            for (std::uint32_t f = 0; f < big_n; ++f)
                buf[f] = a[s.index(x, f)];
            qft(buf, inverse);
            for (std::uint32_t f = 0; f < big_n; ++f)
                a[s.index(x, f)] = buf[f];
        }
    }
}

}  // namespace hidsym
