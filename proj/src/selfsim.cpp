#include "hidsym/selfsim.hpp"

#include <cmath>

namespace hidsym {

SelfSimSignal synth_signal(const ShorInstance& inst, double g, double b,
                           double chi_min) {
    SelfSimSignal sig;
    sig.lattice = GeometricLattice(chi_min, g, inst.n);
    if (b <= 1.0)
        throw std::invalid_argument("synth_signal: value base must be > 1");
    sig.base_b = b;
    sig.log_samples.reserve(inst.table.size());
    for (std::uint32_t j = 0; j < inst.table.size(); ++j)
        sig.log_samples.push_back(static_cast<double>(inst.table.values[j]));
    return sig;
}

OracleTable discretize(const SelfSimSignal& sig, double delta) {
    if (delta < 0.0)
        throw std::invalid_argument("discretize: delta must be >= 0");
    const int n = sig.lattice.n;
    const auto big_n = static_cast<double>(std::uint64_t{1} << n);
    if (sig.log_samples.size() != (std::size_t{1} << n))
        throw std::invalid_argument("discretize: sample count != 2^n");

    OracleTable f{n, {}};
    f.values.reserve(sig.log_samples.size());
    for (double s : sig.log_samples) {
        const double r = std::round(s);
        if (!std::isfinite(s) || std::abs(s - r) > delta)
            throw QuantizationError("discretize: sample not within delta of an integer");
        if (r < 0.0 || r >= big_n)
            throw std::range_error("discretize: sample out of [0, 2^n)");
        f.values.push_back(static_cast<std::uint32_t>(r));
    }
    return f;
}

SelfSimReport detect_scale_invariance(const SelfSimSignal& sig,
                                      const ShorConfig& cfg, double delta) {
    SelfSimReport report;
    const OracleTable f = discretize(sig, delta);
    for (std::size_t j = 0; j < sig.log_samples.size(); ++j) {
        const double res =
            std::abs(sig.log_samples[j] - static_cast<double>(f.values[j]));
        report.max_quant_residual = std::max(report.max_quant_residual, res);
    }
    report.shor = detect_shor(f, cfg);
    report.found = report.shor.found;
    if (report.found) {
        report.alpha = std::pow(sig.lattice.ratio, report.shor.p);
        report.beta = std::pow(sig.base_b, report.shor.q);
    }
    return report;
}

}  // namespace hidsym
