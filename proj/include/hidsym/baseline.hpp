#pragma once

#include <cstdint>
#include <string>

#include "hidsym/instances.hpp"
#include "hidsym/rng.hpp"

namespace hidsym {

struct BaselineReport {
    bool found = false;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint64_t classical_queries = 0;
    std::string strategy;
};

/// Deterministic scan: for each p' ascending, propose q' = f(0) xor f(p'),
/// reject via random probes, accept after `probe_trials` consecutive passes
/// (with exhaustive confirmation for n <= 14).
BaselineReport simon_scan(const OracleTable& f, QueryCounter& counter,
                          Rng& rng, int probe_trials = 8);

/// Collision strategy: random samples propose (x xor x', f(x) xor f(x')) for
/// every unordered pair; a proposal seen twice is verified and returned.
/// Expected O(sqrt(N)) queries.
BaselineReport simon_birthday(const OracleTable& f, QueryCounter& counter,
                              Rng& rng, std::uint64_t sample_budget = 0,
                              int probe_trials = 8);

/// Shor-side scan: for each p' = 1..p_max, test whether f(x + p') - f(x) is
/// constant over random probes.
BaselineReport shor_scan(const OracleTable& f, long long p_max,
                         QueryCounter& counter, Rng& rng,
                         int probe_trials = 8);

}  // namespace hidsym
