#include "hidsym/instances.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hidsym {

namespace {

constexpr int kMaxAttempts = 100;

void check_n(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("instance: n out of range");
}

/// Secondary-symmetry scan: exhaustive for n <= 14, 1000 random probes above.
bool has_second_symmetry(const OracleTable& f, std::uint32_t p, Rng& rng) {
    const std::uint32_t big_n = f.size();
    if (f.n <= 14) {
        for (std::uint32_t pp = 1; pp < big_n; ++pp) {
            if (pp != p && has_exact_simon_symmetry(f, pp))
                return true;
        }
        return false;
    }
    for (int t = 0; t < 1000; ++t) {
        const auto pp = static_cast<std::uint32_t>(rng.below(big_n - 1) + 1);
        if (pp != p && has_exact_simon_symmetry(f, pp))
            return true;
    }
    return false;
}

}  // namespace

bool has_exact_simon_symmetry(const OracleTable& f, std::uint32_t p_prime) {
    if (p_prime == 0 || p_prime >= f.size())
        return false;
    const std::uint32_t q_prime = f.values[p_prime] ^ f.values[0];
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (f.values[x ^ p_prime] != (f.values[x] ^ q_prime))
            return false;
    }
    return true;
}

SimonInstance gen_simon(int n, std::uint32_t p, std::uint32_t q,
                        std::uint64_t seed) {
    check_n(n, 24);
    const std::uint32_t big_n = std::uint32_t{1} << n;
    if (p == 0 || p >= big_n || q >= big_n)
        throw std::invalid_argument("gen_simon: invalid (p, q)");

    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        OracleTable table{n, std::vector<std::uint32_t>(big_n)};
        for (std::uint32_t x = 0; x < big_n; ++x) {
            if (x < (x ^ p)) {
                const auto v = static_cast<std::uint32_t>(rng.below(big_n));
                table.values[x] = v;
                table.values[x ^ p] = v ^ q;
            }
        }
        if (!has_second_symmetry(table, p, rng))
            return SimonInstance{n, p, q, seed, std::move(table)};
    }
    throw GenerationError("gen_simon: rejection limit reached");
}

std::uint32_t LinearInstance::apply_a(std::uint32_t x) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < a_rows.size(); ++i)
        out |= static_cast<std::uint32_t>(std::popcount(a_rows[i] & x) & 1) << i;
    return out;
}

LinearInstance gen_linear(int n, std::uint64_t seed) {
    check_n(n, 16);
    const std::uint32_t big_n = std::uint32_t{1} << n;
    Rng rng(seed);

    std::vector<std::uint32_t> rows(n);
    for (;;) {
        Gf2Matrix m(n);
        for (auto& r : rows) {
            r = static_cast<std::uint32_t>(rng.below(big_n));
            m.append_if_independent(r);
        }
        if (m.rank() == n)
            break;
    }
    const auto b = static_cast<std::uint32_t>(rng.below(big_n));

    LinearInstance inst{n, std::move(rows), b, seed, {}};
    inst.table.n = n;
    inst.table.values.resize(big_n);
    for (std::uint32_t x = 0; x < big_n; ++x)
        inst.table.values[x] = inst.apply_a(x) ^ b;
    return inst;
}

namespace {

bool base_is_degenerate(const std::vector<std::uint32_t>& base) {
    const auto p = static_cast<std::uint32_t>(base.size());
    if (std::all_of(base.begin(), base.end(),
                    [&](std::uint32_t v) { return v == base[0]; }))
        return true;
    for (std::uint32_t d = 1; d < p; ++d) {
        if (p % d != 0)
            continue;
        bool periodic = true;
        for (std::uint32_t i = 0; i < p && periodic; ++i)
            periodic = base[i] == base[i % d];
        if (periodic)
            return true;
    }
    return false;
}

/// True when the full table already satisfies f(x + p') = f(x) + q' for some
/// shorter shift p' < p.  Value-periodicity of the base catches only q' with
/// p' * q == p * q'; patterns like 0,0,1,1 (p=4, q=2) slip through yet give an
/// exact (2, 1) symmetry, so scan the table itself.
bool has_finer_additive_symmetry(const OracleTable& f, std::uint32_t p) {
    const std::uint32_t big_n = f.size();
    for (std::uint32_t pp = 1; pp < p; ++pp) {
        const std::int64_t d0 = static_cast<std::int64_t>(f.values[pp]) -
                                static_cast<std::int64_t>(f.values[0]);
        bool constant = true;
        for (std::uint32_t x = 1; x + pp < big_n && constant; ++x) {
            constant = static_cast<std::int64_t>(f.values[x + pp]) -
                           static_cast<std::int64_t>(f.values[x]) == d0;
        }
        if (constant)
            return true;
    }
    return false;
}

OracleTable shor_table(int n, std::uint32_t p, std::uint32_t q,
                       const std::vector<std::uint32_t>& base) {
    const std::uint32_t big_n = std::uint32_t{1} << n;
    OracleTable table{n, std::vector<std::uint32_t>(big_n)};
    for (std::uint32_t x = 0; x < big_n; ++x)
        table.values[x] = base[x % p] + (x / p) * q;
    // base < q and q < p guarantee max f < N for p <= sqrt(N); assert anyway.
    if (table.values[big_n - 1] >= big_n)
        throw std::invalid_argument("shor instance: f exceeds N");
    return table;
}

}  // namespace

ShorInstance make_shor(int n, std::uint32_t p, std::uint32_t q,
                       std::vector<std::uint32_t> base) {
    check_n(n, 24);
    const std::uint32_t big_n = std::uint32_t{1} << n;
    if (q < 1 || q >= p || p >= big_n)
        throw std::invalid_argument("shor instance: need 1 <= q < p < N");
    if (base.size() != p)
        throw std::invalid_argument("shor instance: base length must equal p");
    for (auto v : base) {
        if (v >= q)
            throw std::invalid_argument("shor instance: base value >= q");
    }
    OracleTable table = shor_table(n, p, q, base);
    return ShorInstance{n, p, q, 0, std::move(base), std::move(table)};
}

ShorInstance gen_shor(int n, std::uint32_t p, std::uint32_t q,
                      std::uint64_t seed) {
    check_n(n, 24);
    const std::uint32_t big_n = std::uint32_t{1} << n;
    if (q < 2 || q >= p || p >= big_n)
        throw std::invalid_argument("gen_shor: need 2 <= q < p < N");

    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::uint32_t> base(p);
        for (auto& v : base)
            v = static_cast<std::uint32_t>(rng.below(q));
        if (base_is_degenerate(base))
            continue;
        ShorInstance inst = make_shor(n, p, q, std::move(base));
        if (has_finer_additive_symmetry(inst.table, p))
            continue;
        inst.seed = seed;
        return inst;
    }
    throw GenerationError("gen_shor: rejection limit reached");
}

OracleTable MultiXorInstance::reduce() const {
    OracleTable f{n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
    for (const auto& c : components) {
        for (std::uint32_t x = 0; x < f.size(); ++x)
            f.values[x] ^= c.values[x];
    }
    return f;
}

MultiXorInstance gen_multixor(int n, std::uint32_t p, std::uint64_t seed) {
    check_n(n, 16);
    const std::uint32_t big_n = std::uint32_t{1} << n;
    if (p == 0 || p >= big_n)
        throw std::invalid_argument("gen_multixor: invalid p");

    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Distinct targets for F on the coset representatives keep the
        // reduced function two-to-one.
        std::vector<std::uint32_t> values(big_n);
        std::iota(values.begin(), values.end(), 0u);
        for (std::uint32_t i = big_n - 1; i > 0; --i)
            std::swap(values[i], values[rng.below(i + 1)]);

        std::vector<OracleTable> comps(
            n + 1, OracleTable{n, std::vector<std::uint32_t>(big_n)});
        std::uint32_t next_target = 0;
        for (std::uint32_t x = 0; x < big_n; ++x) {
            if (x >= (x ^ p))
                continue;
            const std::uint32_t target = values[next_target++];
            const std::uint32_t partner = x ^ p;
            std::uint32_t acc_x = 0;
            std::uint32_t acc_partner = 0;
            for (int l = 0; l < n; ++l) {
                const auto vx = static_cast<std::uint32_t>(rng.below(big_n));
                const auto vp = static_cast<std::uint32_t>(rng.below(big_n));
                comps[l].values[x] = vx;
                comps[l].values[partner] = vp;
                acc_x ^= vx;
                acc_partner ^= vp;
            }
            comps[n].values[x] = acc_x ^ target;
            comps[n].values[partner] = acc_partner ^ target;
        }

        MultiXorInstance inst{n, p, seed, std::move(comps)};
        const OracleTable reduced = inst.reduce();
        if (!has_second_symmetry(reduced, p, rng))
            return inst;
    }
    throw GenerationError("gen_multixor: rejection limit reached");
}

std::uint32_t build_h(const SimonInstance& inst, int variant, std::uint32_t x,
                      std::uint32_t y) {
    const auto& f = inst.table;
    if (x >= f.size() || y >= f.size())
        throw std::out_of_range("build_h: argument out of range");
    if (variant == 1)
        return f.values[x] ^ y;
    if (variant == 2)
        return f.values[x] ^ f.values[y];
    throw std::invalid_argument("build_h: variant must be 1 or 2");
}

}  // namespace hidsym
