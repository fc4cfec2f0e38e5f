// Command-line front end: instance generation, detector runs, baselines,
// query-count comparisons, and self-tests. All commands are seeded and, with
// --no-timing, byte-reproducible.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hidsym/baseline.hpp"
#include "hidsym/fast_sampler.hpp"
#include "hidsym/json_io.hpp"
#include "hidsym/selfsim.hpp"
#include "hidsym/shor.hpp"
#include "hidsym/simon.hpp"
#include "hidsym/state_sim.hpp"

namespace {

using namespace hidsym;

constexpr const char* kVersion = "hidsym 0.1.0";

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
    bool no_timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out_path,
                    "Output file (default: env HIDSYM_OUT_DIR ignored, stdout)");
    cmd->add_option("--format", opts.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-timing", opts.no_timing,
                  "Suppress wall-time fields (byte-reproducible output)");
}

void emit(const OutputOptions& opts, const std::string& text) {
    std::string path = opts.out_path;
    if (!path.empty() && path.find('/') == std::string::npos) {
        if (const char* dir = std::getenv("HIDSYM_OUT_DIR"))
            path = std::string(dir) + "/" + path;
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

double median(std::vector<double> v) {
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------- gen

int cmd_gen(const std::string& kind, int n, std::int64_t p, std::int64_t q,
            std::uint64_t seed, bool with_table, const OutputOptions& opts) {
    Json j;
    if (kind == "simon") {
        if (p < 0)
            p = 1 + static_cast<std::int64_t>(
                        hidsym::Rng(seed).below((1u << n) - 1));
        if (q < 0)
            q = static_cast<std::int64_t>(
                hidsym::Rng(seed ^ 1).below(1u << n));
        j = instance_to_json(gen_simon(n, static_cast<std::uint32_t>(p),
                                       static_cast<std::uint32_t>(q), seed),
                             with_table);
    } else if (kind == "linear") {
        j = instance_to_json(hidsym::gen_linear(n, seed), with_table);
    } else if (kind == "shor") {
        if (p < 0 || q < 0)
            throw CLI::ValidationError("gen", "--p and --q required for shor");
        j = instance_to_json(gen_shor(n, static_cast<std::uint32_t>(p),
                                      static_cast<std::uint32_t>(q), seed),
                             with_table);
    } else if (kind == "multixor") {
        if (p < 0)
            p = 1 + static_cast<std::int64_t>(
                        hidsym::Rng(seed).below((1u << n) - 1));
        j = instance_to_json(
            hidsym::gen_multixor(n, static_cast<std::uint32_t>(p), seed),
            with_table);
    } else {
        throw CLI::ValidationError("gen", "unknown kind " + kind);
    }
    emit(opts, j.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- run-simon

int cmd_run_simon(const std::string& kind, int n, std::int64_t p,
                  std::int64_t q, std::uint64_t seed, int trials,
                  const std::string& engine, int max_samples, int verify_trials,
                  const OutputOptions& opts) {
    Json config;
    config["command"] = "run-simon";
    config["kind"] = kind;
    config["n"] = n;
    config["seed"] = seed;
    config["trials"] = trials;
    config["engine"] = engine;

    Json records = Json::array();
    int successes = 0;
    std::vector<double> samples;
    Stopwatch watch;
    std::ostringstream csv;
    csv << "trial,seed,status,p,q,samples_used,rank,quantum_runs,"
           "classical_queries\n";

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = hidsym::derive_seed(seed, t);
        hidsym::OracleTable table;
        std::uint32_t planted_p = 0, planted_q = 0;
        bool has_planted = false;
        if (kind == "simon") {
            hidsym::Rng prng(trial_seed ^ 0x706c616e74ULL);
            planted_p =
                p >= 0 ? static_cast<std::uint32_t>(p)
                       : 1 + static_cast<std::uint32_t>(prng.below((1u << n) - 1));
            planted_q = q >= 0 ? static_cast<std::uint32_t>(q)
                               : static_cast<std::uint32_t>(prng.below(1u << n));
            table = gen_simon(n, planted_p, planted_q, trial_seed).table;
            has_planted = true;
        } else if (kind == "linear") {
            table = hidsym::gen_linear(n, trial_seed).table;
        } else if (kind == "multixor") {
            hidsym::Rng prng(trial_seed ^ 0x706c616e74ULL);
            planted_p =
                p >= 0 ? static_cast<std::uint32_t>(p)
                       : 1 + static_cast<std::uint32_t>(prng.below((1u << n) - 1));
            planted_q = 0;
            table = hidsym::gen_multixor(n, planted_p, trial_seed).reduce();
            has_planted = true;
        } else {
            throw CLI::ValidationError("run-simon", "unknown kind " + kind);
        }

        hidsym::SimonConfig cfg;
        cfg.seed = trial_seed;
        cfg.max_samples = max_samples;
        cfg.verify_trials = verify_trials;
        cfg.engine = engine == "dense" ? hidsym::Engine::Dense
                                       : hidsym::Engine::Fast;
        const auto report = detect_simon(table, cfg);

        const bool success =
            !has_planted
                ? report.status == hidsym::SimonStatus::Ambiguous
                : (report.status == hidsym::SimonStatus::Unique &&
                   report.candidates.size() == 1 &&
                   report.candidates[0].p == planted_p &&
                   report.candidates[0].q == planted_q);
        successes += success;
        samples.push_back(report.samples_used);

        Json rec;
        rec["trial"] = t;
        rec["seed"] = trial_seed;
        if (has_planted) {
            rec["planted_p"] = planted_p;
            rec["planted_q"] = planted_q;
        }
        rec["report"] = report_to_json(report);
        rec["success"] = success;
        records.push_back(std::move(rec));

        const auto& top = report.candidates.empty()
                              ? hidsym::SimonCandidate{}
                              : report.candidates.front();
        csv << t << ',' << trial_seed << ','
            << simon_status_name(report.status) << ',' << top.p << ',' << top.q
            << ',' << report.samples_used << ',' << report.rank << ','
            << report.counters.quantum_runs << ','
            << report.counters.classical_queries << '\n';
    }

    if (opts.format == "csv") {
        emit(opts, csv.str());
        return 0;
    }
    Json out;
    out["config"] = std::move(config);
    out["trials"] = std::move(records);
    out["summary"] = {{"success_rate",
                       static_cast<double>(successes) / trials},
                      {"median_samples", median(samples)}};
    if (!opts.no_timing)
        out["wall_time_ms"] = watch.elapsed_ms();
    out["version"] = kVersion;
    emit(opts, out.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- run-shor

int cmd_run_shor(int n, std::uint32_t p, std::uint32_t q, std::uint64_t seed,
                 int trials, const hidsym::ShorConfig& base_cfg,
                 const OutputOptions& opts) {
    Json config;
    config["command"] = "run-shor";
    config["n"] = n;
    config["p"] = p;
    config["q"] = q;
    config["seed"] = seed;
    config["trials"] = trials;

    Json records = Json::array();
    int successes = 0;
    std::vector<double> fractions;
    Stopwatch watch;
    std::ostringstream csv;
    csv << "trial,seed,status,p,q,pairs_used,resonant_fraction,quantum_runs,"
           "classical_queries\n";

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = hidsym::derive_seed(seed, t);
        const auto inst = gen_shor(n, p, q, trial_seed);
        hidsym::ShorConfig cfg = base_cfg;
        cfg.seed = trial_seed;
        const auto report = detect_shor(inst.table, cfg);
        const bool success = report.found && report.p == p && report.q == q;
        successes += success;
        if (report.found)
            fractions.push_back(report.resonant_fraction);

        Json rec;
        rec["trial"] = t;
        rec["seed"] = trial_seed;
        rec["report"] = report_to_json(report);
        rec["success"] = success;
        records.push_back(std::move(rec));

        csv << t << ',' << trial_seed << ','
            << (report.found ? "found" : "not_found") << ',' << report.p << ','
            << report.q << ',' << report.pairs_used << ','
            << report.resonant_fraction << ',' << report.counters.quantum_runs
            << ',' << report.counters.classical_queries << '\n';
    }

    if (opts.format == "csv") {
        emit(opts, csv.str());
        return 0;
    }
    Json out;
    out["config"] = std::move(config);
    out["trials"] = std::move(records);
    out["summary"] = {{"success_rate",
                       static_cast<double>(successes) / trials},
                      {"median_resonant_fraction", median(fractions)}};
    if (!opts.no_timing)
        out["wall_time_ms"] = watch.elapsed_ms();
    out["version"] = kVersion;
    emit(opts, out.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- run-selfsim

hidsym::SelfSimSignal read_signal(const std::string& csv_path,
                                  const std::string& sidecar_path) {
    std::ifstream sidecar(sidecar_path);
    if (!sidecar)
        throw std::runtime_error("cannot open lattice sidecar: " + sidecar_path);
    Json meta = Json::parse(sidecar);

    hidsym::SelfSimSignal sig;
    sig.lattice = hidsym::GeometricLattice(meta.at("chi_min").get<double>(),
                                           meta.at("ratio").get<double>(),
                                           meta.at("n").get<int>());
    sig.base_b = meta.at("base_b").get<double>();

    std::ifstream csv(csv_path);
    if (!csv)
        throw std::runtime_error("cannot open signal csv: " + csv_path);
    std::string line;
    if (!std::getline(csv, line))
        throw std::runtime_error("empty signal csv");
    const bool log_domain = line.find("log_phi") != std::string::npos;
    if (line.find("chi") == std::string::npos && !log_domain)
        throw std::runtime_error("signal csv needs (chi,phi) or (j,log_phi)");

    while (std::getline(csv, line)) {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed csv line: " + line);
        const double second = std::stod(line.substr(comma + 1));
        if (log_domain) {
            sig.log_samples.push_back(second);
        } else {
            if (second <= 0.0)
                throw std::runtime_error("phi must be positive");
            sig.log_samples.push_back(std::log(second) / std::log(sig.base_b));
        }
    }
    return sig;
}

int cmd_run_selfsim(int n, std::uint32_t p, std::uint32_t q, double g, double b,
                    double chi_min, double delta, std::uint64_t seed,
                    int trials, const std::string& input,
                    const std::string& lattice, hidsym::ShorConfig base_cfg,
                    const OutputOptions& opts) {
    Json config;
    config["command"] = "run-selfsim";
    config["seed"] = seed;
    config["trials"] = trials;
    config["g"] = g;
    config["b"] = b;
    config["delta"] = delta;

    Json records = Json::array();
    int successes = 0;
    Stopwatch watch;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = hidsym::derive_seed(seed, t);
        hidsym::SelfSimSignal sig;
        if (!input.empty()) {
            sig = read_signal(input, lattice);
        } else {
            const auto inst = gen_shor(n, p, q, trial_seed);
            sig = synth_signal(inst, g, b, chi_min);
        }
        hidsym::ShorConfig cfg = base_cfg;
        cfg.seed = trial_seed;
        const auto report = detect_scale_invariance(sig, cfg, delta);
        successes += report.found;

        Json rec;
        rec["trial"] = t;
        rec["seed"] = trial_seed;
        rec["report"] = report_to_json(report);
        records.push_back(std::move(rec));
    }

    Json out;
    out["config"] = std::move(config);
    out["trials"] = std::move(records);
    out["summary"] = {{"success_rate", static_cast<double>(successes) / trials}};
    if (!opts.no_timing)
        out["wall_time_ms"] = watch.elapsed_ms();
    out["version"] = kVersion;
    emit(opts, out.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- baseline

int cmd_baseline(const std::string& kind, const std::string& strategy, int n,
                 std::int64_t p, std::int64_t q, std::uint64_t seed, int trials,
                 long long p_max, const OutputOptions& opts) {
    Json records = Json::array();
    std::ostringstream csv;
    csv << "trial,seed,strategy,status,p,q,classical_queries\n";

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = hidsym::derive_seed(seed, t);
        hidsym::QueryCounter counter;
        hidsym::Rng rng(trial_seed ^ 0x62617365ULL);
        hidsym::BaselineReport report;
        if (kind == "simon") {
            hidsym::Rng prng(trial_seed ^ 0x706c616e74ULL);
            const std::uint32_t pp =
                p >= 0 ? static_cast<std::uint32_t>(p)
                       : 1 + static_cast<std::uint32_t>(prng.below((1u << n) - 1));
            const std::uint32_t qq =
                q >= 0 ? static_cast<std::uint32_t>(q)
                       : static_cast<std::uint32_t>(prng.below(1u << n));
            const auto inst = gen_simon(n, pp, qq, trial_seed);
            report = strategy == "birthday"
                         ? simon_birthday(inst.table, counter, rng)
                         : simon_scan(inst.table, counter, rng);
        } else if (kind == "shor") {
            const auto inst = gen_shor(n, static_cast<std::uint32_t>(p),
                                       static_cast<std::uint32_t>(q), trial_seed);
            report = shor_scan(inst.table,
                               p_max > 0 ? p_max : static_cast<long long>(p),
                               counter, rng);
        } else {
            throw CLI::ValidationError("baseline", "unknown kind " + kind);
        }

        Json rec;
        rec["trial"] = t;
        rec["seed"] = trial_seed;
        rec["report"] = report_to_json(report);
        records.push_back(std::move(rec));
        csv << t << ',' << trial_seed << ',' << report.strategy << ','
            << (report.found ? "found" : "not_found") << ',' << report.p << ','
            << report.q << ',' << report.classical_queries << '\n';
    }

    if (opts.format == "csv") {
        emit(opts, csv.str());
        return 0;
    }
    Json out;
    out["trials"] = std::move(records);
    out["version"] = kVersion;
    emit(opts, out.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- compare

int cmd_compare(const std::string& kind, int n, std::uint64_t seed, int trials,
                const OutputOptions& opts) {
    if (kind != "simon")
        throw CLI::ValidationError("compare", "only --kind simon is supported");

    std::vector<double> quantum_runs, scan_queries, birthday_queries;
    int quantum_ok = 0, scan_ok = 0, birthday_ok = 0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = hidsym::derive_seed(seed, t);
        hidsym::Rng prng(trial_seed ^ 0x706c616e74ULL);
        const auto pp =
            1 + static_cast<std::uint32_t>(prng.below((1u << n) - 1));
        const auto qq = static_cast<std::uint32_t>(prng.below(1u << n));
        const auto inst = gen_simon(n, pp, qq, trial_seed);

        hidsym::SimonConfig cfg;
        cfg.seed = trial_seed;
        const auto qreport = detect_simon(inst.table, cfg);
        quantum_runs.push_back(qreport.counters.quantum_runs);
        quantum_ok += qreport.status == hidsym::SimonStatus::Unique &&
                      qreport.candidates.size() == 1 &&
                      qreport.candidates[0].p == pp &&
                      qreport.candidates[0].q == qq;

        hidsym::QueryCounter c1;
        hidsym::Rng r1(trial_seed ^ 0x7363616eULL);
        const auto sreport = simon_scan(inst.table, c1, r1);
        scan_queries.push_back(sreport.classical_queries);
        scan_ok += sreport.found && sreport.p == pp && sreport.q == qq;

        hidsym::QueryCounter c2;
        hidsym::Rng r2(trial_seed ^ 0x62697274ULL);
        const auto breport = simon_birthday(inst.table, c2, r2);
        birthday_queries.push_back(breport.classical_queries);
        birthday_ok += breport.found && breport.p == pp && breport.q == qq;
    }

    std::ostringstream csv;
    csv << "kind,n,strategy,median_queries,success_rate\n";
    auto row = [&](const char* strategy, double med, int ok) {
        csv << kind << ',' << n << ',' << strategy << ',' << med << ','
            << static_cast<double>(ok) / trials << '\n';
    };
    row("quantum", median(quantum_runs), quantum_ok);
    row("scan", median(scan_queries), scan_ok);
    row("birthday", median(birthday_queries), birthday_ok);
    emit(opts, csv.str());
    return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(std::uint64_t seed) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        failures += !ok;
    };

    // Dense-vs-fast equivalence on every instance kind at n = 3.
    const int n = 3;
    struct Named {
        std::string name;
        hidsym::OracleTable table;
    };
    std::vector<Named> tables;
    tables.push_back({"simon", gen_simon(n, 5, 3, seed).table});
    tables.push_back({"linear", hidsym::gen_linear(n, seed).table});
    tables.push_back({"shor", gen_shor(n, 3, 2, seed).table});
    tables.push_back({"multixor", hidsym::gen_multixor(n, 5, seed).reduce()});

    for (const auto& [name, table] : tables) {
        {
            auto s = prepare_oracle_state(table);
            hadamard_register(s, hidsym::Register::Both);
            const auto dense = s.full_distribution();
            const auto fast = simon_joint_distribution(table);
            double tv = 0.0;
            for (std::size_t i = 0; i < dense.size(); ++i)
                tv += std::abs(dense[i] - fast[i]);
            check(tv / 2.0 <= 1e-9, name + ": hadamard sampler matches dense");
        }
        {
            auto s = prepare_oracle_state(table);
            qft_register(s, hidsym::Register::X, false);
            qft_register(s, hidsym::Register::F, false);
            const auto dense = s.full_distribution();
            const auto fast = shor_joint_distribution(table);
            double tv = 0.0;
            for (std::size_t i = 0; i < dense.size(); ++i)
                tv += std::abs(dense[i] - fast[i]);
            check(tv / 2.0 <= 1e-9, name + ": qft sampler matches dense");
        }
    }

    // Instance invariants.
    {
        const auto inst = gen_simon(8, 77, 13, seed);
        bool ok = true;
        for (std::uint32_t x = 0; x < inst.table.size(); ++x)
            ok = ok && inst.table.values[x ^ inst.p] ==
                           (inst.table.values[x] ^ inst.q);
        check(ok, "simon instance symmetry invariant");
    }
    {
        const auto inst = gen_shor(10, 5, 3, seed);
        bool ok = true;
        for (std::uint32_t x = 0; x + inst.p < inst.table.size(); ++x)
            ok = ok && inst.table.values[x + inst.p] ==
                           inst.table.values[x] + inst.q;
        check(ok, "shor instance symmetry invariant");
    }
    {
        const auto inst = hidsym::gen_multixor(6, 9, seed);
        const auto f = inst.reduce();
        bool ok = true;
        for (std::uint32_t x = 0; x < f.size(); ++x)
            ok = ok && f.values[x ^ inst.p] == f.values[x];
        check(ok, "multixor reduced symmetry invariant");
    }
    {
        const auto inst = hidsym::gen_linear(5, seed);
        bool ok = true;
        for (std::uint32_t x = 0; x < inst.table.size() && ok; ++x)
            for (std::uint32_t p = 0; p < inst.table.size(); ++p)
                ok = ok && inst.table.values[x ^ p] ==
                               (inst.table.values[x] ^ inst.apply_a(p));
        check(ok, "linear instance symmetry family");
    }

    std::cout << (failures ? "selftest: FAILED\n" : "selftest: all checks passed\n");
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " - hidden two-point symmetry detection toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a planted instance (JSON)");
    std::string gen_kind = "simon";
    int gen_n = 10;
    std::int64_t gen_p = -1, gen_q = -1;
    std::uint64_t gen_seed = 1;
    bool gen_table = false;
    OutputOptions gen_opts;
    gen->add_option("--kind", gen_kind)->check(
        CLI::IsMember({"simon", "linear", "shor", "multixor"}));
    gen->add_option("--n", gen_n);
    gen->add_option("--p", gen_p);
    gen->add_option("--q", gen_q);
    gen->add_option("--seed", gen_seed);
    gen->add_flag("--table", gen_table, "Embed the full oracle table");
    add_output_options(gen, gen_opts);

    // run-simon
    auto* rsimon = app.add_subcommand("run-simon", "Run the Simon-type detector");
    std::string rs_kind = "simon";
    int rs_n = 10, rs_trials = 1, rs_max_samples = 0, rs_verify = 32;
    std::int64_t rs_p = -1, rs_q = -1;
    std::uint64_t rs_seed = 1;
    std::string rs_engine = "fast";
    OutputOptions rs_opts;
    rsimon->add_option("--kind", rs_kind)
        ->check(CLI::IsMember({"simon", "linear", "multixor"}));
    rsimon->add_option("--n", rs_n);
    rsimon->add_option("--p", rs_p);
    rsimon->add_option("--q", rs_q);
    rsimon->add_option("--seed", rs_seed);
    rsimon->add_option("--trials", rs_trials);
    rsimon->add_option("--engine", rs_engine)
        ->check(CLI::IsMember({"fast", "dense"}));
    rsimon->add_option("--max-samples", rs_max_samples);
    rsimon->add_option("--verify-trials", rs_verify);
    add_output_options(rsimon, rs_opts);

    // run-shor
    auto* rshor = app.add_subcommand("run-shor", "Run the Shor-type detector");
    int sh_n = 16, sh_trials = 1;
    std::uint32_t sh_p = 13, sh_q = 3;
    std::uint64_t sh_seed = 1;
    hidsym::ShorConfig sh_cfg;
    OutputOptions sh_opts;
    rshor->add_option("--n", sh_n);
    rshor->add_option("--p", sh_p);
    rshor->add_option("--q", sh_q);
    rshor->add_option("--seed", sh_seed);
    rshor->add_option("--trials", sh_trials);
    rshor->add_option("--pairs", sh_cfg.max_pairs);
    rshor->add_option("--M", sh_cfg.m);
    rshor->add_option("--p-max", sh_cfg.p_max);
    rshor->add_option("--lambda-max", sh_cfg.lambda_max);
    rshor->add_option("--c", sh_cfg.c);
    rshor->add_option("--verify-trials", sh_cfg.verify_trials);
    add_output_options(rshor, sh_opts);

    // run-selfsim
    auto* rself = app.add_subcommand("run-selfsim",
                                     "Detect discrete self-similarity");
    int ss_n = 16, ss_trials = 1;
    std::uint32_t ss_p = 13, ss_q = 3;
    double ss_g = 2.0, ss_b = 2.0, ss_chi_min = 1.0, ss_delta = 1e-6;
    std::uint64_t ss_seed = 1;
    std::string ss_input, ss_lattice;
    hidsym::ShorConfig ss_cfg;
    OutputOptions ss_opts;
    rself->add_option("--n", ss_n);
    rself->add_option("--p", ss_p);
    rself->add_option("--q", ss_q);
    rself->add_option("--g", ss_g, "Lattice ratio");
    rself->add_option("--b", ss_b, "Value base");
    rself->add_option("--chi-min", ss_chi_min);
    rself->add_option("--delta", ss_delta, "Quantization tolerance");
    rself->add_option("--seed", ss_seed);
    rself->add_option("--trials", ss_trials);
    rself->add_option("--input", ss_input, "Signal CSV: (chi,phi) or (j,log_phi)");
    rself->add_option("--lattice", ss_lattice, "Lattice sidecar JSON");
    rself->add_option("--pairs", ss_cfg.max_pairs);
    add_output_options(rself, ss_opts);

    // baseline
    auto* base = app.add_subcommand("baseline", "Run a classical baseline");
    std::string bl_kind = "simon", bl_strategy = "scan";
    int bl_n = 10, bl_trials = 1;
    std::int64_t bl_p = -1, bl_q = -1;
    long long bl_pmax = 0;
    std::uint64_t bl_seed = 1;
    OutputOptions bl_opts;
    base->add_option("--kind", bl_kind)->check(CLI::IsMember({"simon", "shor"}));
    base->add_option("--strategy", bl_strategy)
        ->check(CLI::IsMember({"scan", "birthday"}));
    base->add_option("--n", bl_n);
    base->add_option("--p", bl_p);
    base->add_option("--q", bl_q);
    base->add_option("--p-max", bl_pmax);
    base->add_option("--seed", bl_seed);
    base->add_option("--trials", bl_trials);
    add_output_options(base, bl_opts);

    // compare
    auto* comp = app.add_subcommand(
        "compare", "Quantum-vs-classical query comparison table (CSV)");
    std::string cp_kind = "simon";
    int cp_n = 10, cp_trials = 100;
    std::uint64_t cp_seed = 1;
    OutputOptions cp_opts;
    comp->add_option("--kind", cp_kind);
    comp->add_option("--n", cp_n);
    comp->add_option("--seed", cp_seed);
    comp->add_option("--trials", cp_trials);
    add_output_options(comp, cp_opts);

    // selftest
    auto* self = app.add_subcommand("selftest",
                                    "Dense-vs-fast equivalence and invariants");
    std::uint64_t st_seed = 1;
    self->add_option("--seed", st_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_p, gen_q, gen_seed, gen_table,
                           gen_opts);
        if (rsimon->parsed())
            return cmd_run_simon(rs_kind, rs_n, rs_p, rs_q, rs_seed, rs_trials,
                                 rs_engine, rs_max_samples, rs_verify, rs_opts);
        if (rshor->parsed())
            return cmd_run_shor(sh_n, sh_p, sh_q, sh_seed, sh_trials, sh_cfg,
                                sh_opts);
        if (rself->parsed())
            return cmd_run_selfsim(ss_n, ss_p, ss_q, ss_g, ss_b, ss_chi_min,
                                   ss_delta, ss_seed, ss_trials, ss_input,
                                   ss_lattice, ss_cfg, ss_opts);
        if (base->parsed())
            return cmd_baseline(bl_kind, bl_strategy, bl_n, bl_p, bl_q, bl_seed,
                                bl_trials, bl_pmax, bl_opts);
        if (comp->parsed())
            return cmd_compare(cp_kind, cp_n, cp_seed, cp_trials, cp_opts);
        if (self->parsed())
            return cmd_selftest(st_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
