#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hidsym/gf2.hpp"
#include "hidsym/rng.hpp"

namespace hidsym {

/// An explicitly tabulated oracle f : [0, 2^n) -> [0, 2^n).
struct OracleTable {
    int n = 0;
    std::vector<std::uint32_t> values;

    std::uint32_t size() const { return std::uint32_t{1} << n; }
    std::uint32_t operator()(std::uint32_t x) const { return values[x]; }
};

struct QueryCounter {
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_runs = 0;
};

/// Counted black-box access; all detectors and baselines go through this.
inline std::uint32_t oracle_eval(const OracleTable& f, std::uint32_t x,
                                 QueryCounter& counter) {
    if (x >= f.size())
        throw std::out_of_range("oracle_eval: argument out of range");
    ++counter.classical_queries;
    return f.values[x];
}

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planted f(x xor p) = f(x) xor q with pseudo-random coset values.
struct SimonInstance {
    int n = 0;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint64_t seed = 0;
    OracleTable table;
};

/// f(x) = A.x xor b with invertible A: every p is a symmetry with q = A.p.
struct LinearInstance {
    int n = 0;
    std::vector<std::uint32_t> a_rows;  // row i is the mask for output bit i
    std::uint32_t b = 0;
    std::uint64_t seed = 0;
    OracleTable table;

    std::uint32_t apply_a(std::uint32_t x) const;
};

/// Planted f(x + p) = f(x) + q built from a non-sub-periodic base sequence:
/// f(x) = base[x mod p] + floor(x / p) * q with base values in [0, q).
struct ShorInstance {
    int n = 0;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> base;
    OracleTable table;
};

/// Component tables f_0..f_n whose XOR-sum F is a q=0 Simon-type function.
struct MultiXorInstance {
    int n = 0;
    std::uint32_t p = 0;
    std::uint64_t seed = 0;
    std::vector<OracleTable> components;

    OracleTable reduce() const;
};

SimonInstance gen_simon(int n, std::uint32_t p, std::uint32_t q,
                        std::uint64_t seed);
LinearInstance gen_linear(int n, std::uint64_t seed);
ShorInstance gen_shor(int n, std::uint32_t p, std::uint32_t q,
                      std::uint64_t seed);
ShorInstance make_shor(int n, std::uint32_t p, std::uint32_t q,
                       std::vector<std::uint32_t> base);
MultiXorInstance gen_multixor(int n, std::uint32_t p, std::uint64_t seed);

/// h1(x,y) = f(x) xor y, h2(x,y) = f(x) xor f(y): the hidden-subgroup
/// reductions; both are highly degenerate across cosets.
std::uint32_t build_h(const SimonInstance& inst, int variant, std::uint32_t x,
                      std::uint32_t y);

/// True iff p' is an exact XOR symmetry of the table (with the implied
/// q' = f(p') xor f(0)). Early-exits on the first violation.
bool has_exact_simon_symmetry(const OracleTable& f, std::uint32_t p_prime);

}  // namespace hidsym
