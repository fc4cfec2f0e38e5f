#pragma once

#include <cstdint>
#include <vector>

#include "hidsym/gf2.hpp"
#include "hidsym/instances.hpp"

namespace hidsym {

enum class Engine { Fast, Dense };

struct SimonConfig {
    int max_samples = 0;    // 0 -> 8n
    int verify_trials = 32;
    std::uint64_t seed = 0;
    Engine engine = Engine::Fast;
};

enum class SimonStatus { Unique, Ambiguous, Exhausted };

struct SimonCandidate {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    bool verified = false;
};

struct SimonReport {
    SimonStatus status = SimonStatus::Exhausted;
    std::vector<SimonCandidate> candidates;
    int samples_used = 0;
    int rank = 0;
    int nullspace_dim = 0;
    QueryCounter counters;
};

/// Samples Y constraints until rank 2n-1 or the sample budget runs out.
/// Every sample increments quantum_runs.
struct ConstraintCollection {
    Gf2Matrix matrix;
    int samples_used = 0;
};
ConstraintCollection collect_constraints(const OracleTable& f,
                                         const SimonConfig& cfg,
                                         QueryCounter& counter);

/// Unpacks the nullspace of the constraint matrix into (p, q) candidates,
/// excluding R = 0. Enumerates the whole nullspace when its dimension is
/// small; falls back to the basis above 16 dimensions.
std::vector<SimonCandidate> solve_candidates(const Gf2Matrix& m, int n);

/// Probabilistic check of f(x xor p) = f(x) xor q on v random probe points;
/// spends exactly 2v classical queries.
bool verify_candidate(const OracleTable& f, std::uint32_t p, std::uint32_t q,
                      int v, Rng& rng, QueryCounter& counter);

/// Full pipeline: collect constraints, solve over GF(2), verify candidates.
SimonReport detect_simon(const OracleTable& f, const SimonConfig& cfg);

}  // namespace hidsym
