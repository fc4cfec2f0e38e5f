#include "hidsym/simon.hpp"

#include <stdexcept>

#include "hidsym/fast_sampler.hpp"
#include "hidsym/state_sim.hpp"

namespace hidsym {

namespace {

int effective_max_samples(const OracleTable& f, const SimonConfig& cfg) {
    const int m = cfg.max_samples > 0 ? cfg.max_samples : 8 * f.n;
    if (m < 2 * f.n - 1)
        throw std::invalid_argument("SimonConfig: max_samples < 2n-1");
    return m;
}

}  // namespace

ConstraintCollection collect_constraints(const OracleTable& f,
                                         const SimonConfig& cfg,
                                         QueryCounter& counter) {
    const int n = f.n;
    const int max_samples = effective_max_samples(f, cfg);
    Rng rng(cfg.seed);

    // The dense engine prepares the transformed state once; independent
    // measurements are then draws from its exact distribution.
    StateVector dense_state(1);
    bool have_dense = false;
    if (cfg.engine == Engine::Dense) {
        dense_state = prepare_oracle_state(f);
        hadamard_register(dense_state, Register::Both);
        have_dense = true;
    }

    ConstraintCollection out{Gf2Matrix(2 * n), 0};
    while (out.samples_used < max_samples && out.matrix.rank() < 2 * n - 1) {
        std::uint64_t y;
        if (have_dense) {
            y = dense_state.sample_measurement(rng);
        } else {
            const SimonSample s = sample_simon_y(f, rng);
            y = s.y1 | (static_cast<std::uint64_t>(s.y2) << n);
        }
        ++counter.quantum_runs;
        ++out.samples_used;
        out.matrix.append_if_independent(y);
    }
    return out;
}

std::vector<SimonCandidate> solve_candidates(const Gf2Matrix& m, int n) {
    const auto basis = m.nullspace_basis();
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<SimonCandidate> out;

    auto push = [&](std::uint64_t r) {
        if (r == 0)
            return;
        out.push_back({static_cast<std::uint32_t>(r & mask),
                       static_cast<std::uint32_t>((r >> n) & mask), false});
    };

    if (basis.size() <= 16) {
        // Enumerate the whole nullspace so the planted R is always listed.
        for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << basis.size());
             ++sel) {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if ((sel >> i) & 1)
                    r ^= basis[i];
            }
            push(r);
        }
    } else {
        for (std::uint64_t b : basis)
            push(b);
    }
    return out;
}

bool verify_candidate(const OracleTable& f, std::uint32_t p, std::uint32_t q,
                      int v, Rng& rng, QueryCounter& counter) {
    if (v < 1)
        throw std::invalid_argument("verify_candidate: v must be >= 1");
    bool ok = p != 0;
    for (int t = 0; t < v; ++t) {
        const auto x = static_cast<std::uint32_t>(rng.below(f.size()));
        const std::uint32_t fx = oracle_eval(f, x, counter);
        const std::uint32_t fxp = oracle_eval(f, x ^ p, counter);
        ok = ok && fxp == (fx ^ q);
    }
    return ok;
}

SimonReport detect_simon(const OracleTable& f, const SimonConfig& cfg) {
    const int n = f.n;
    SimonReport report;

    auto collected = collect_constraints(f, cfg, report.counters);
    report.samples_used = collected.samples_used;
    report.rank = collected.matrix.rank();
    report.nullspace_dim = 2 * n - report.rank;

    report.candidates = solve_candidates(collected.matrix, n);
    Rng verify_rng(splitmix64(cfg.seed ^ 0x7665726966796e67ULL));
    int verified_count = 0;
    for (auto& c : report.candidates) {
        c.verified = verify_candidate(f, c.p, c.q, cfg.verify_trials,
                                      verify_rng, report.counters);
        if (c.verified)
            ++verified_count;
    }

    if (report.nullspace_dim == 1 && verified_count == 1)
        report.status = SimonStatus::Unique;
    else if (report.nullspace_dim > 1 && verified_count >= 1)
        report.status = SimonStatus::Ambiguous;
    else
        report.status = SimonStatus::Exhausted;
    return report;
}

}  // namespace hidsym
