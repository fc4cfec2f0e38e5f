#include "hidsym/json_io.hpp"

namespace hidsym {

namespace {

Json instance_header(const std::string& kind, int n, std::uint64_t p,
                     std::uint64_t q, std::uint64_t seed) {
    Json j;
    j["kind"] = kind;
    j["n"] = n;
    j["p"] = p;
    j["q"] = q;
    j["seed"] = seed;
    return j;
}

}  // namespace

Json instance_to_json(const SimonInstance& inst, bool with_table) {
    Json j = instance_header("simon", inst.n, inst.p, inst.q, inst.seed);
    if (with_table)
        j["table"] = inst.table.values;
    return j;
}

Json instance_to_json(const LinearInstance& inst, bool with_table) {
    Json j = instance_header("linear", inst.n, 0, 0, inst.seed);
    j.erase("p");
    j.erase("q");
    if (with_table)
        j["table"] = inst.table.values;
    return j;
}

Json instance_to_json(const ShorInstance& inst, bool with_table) {
    Json j = instance_header("shor", inst.n, inst.p, inst.q, inst.seed);
    if (with_table)
        j["table"] = inst.table.values;
    return j;
}

Json instance_to_json(const MultiXorInstance& inst, bool with_table) {
    Json j = instance_header("multixor", inst.n, inst.p, 0, inst.seed);
    if (with_table)
        j["table"] = inst.reduce().values;
    return j;
}

OracleTable table_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (j.contains("table")) {
        OracleTable f{n, j.at("table").get<std::vector<std::uint32_t>>()};
        if (f.values.size() != f.size())
            throw std::invalid_argument("instance table has wrong length");
        return f;
    }
    const auto seed = j.at("seed").get<std::uint64_t>();
    if (kind == "simon") {
        return gen_simon(n, j.at("p").get<std::uint32_t>(),
                         j.at("q").get<std::uint32_t>(), seed)
            .table;
    }
    if (kind == "linear")
        return gen_linear(n, seed).table;
    if (kind == "shor") {
        return gen_shor(n, j.at("p").get<std::uint32_t>(),
                        j.at("q").get<std::uint32_t>(), seed)
            .table;
    }
    if (kind == "multixor")
        return gen_multixor(n, j.at("p").get<std::uint32_t>(), seed).reduce();
    throw std::invalid_argument("unknown instance kind: " + kind);
}

Json counters_to_json(const QueryCounter& c) {
    Json j;
    j["classical_queries"] = c.classical_queries;
    j["quantum_runs"] = c.quantum_runs;
    return j;
}

std::string simon_status_name(SimonStatus s) {
    switch (s) {
    case SimonStatus::Unique:
        return "unique";
    case SimonStatus::Ambiguous:
        return "ambiguous";
    default:
        return "exhausted";
    }
}

Json report_to_json(const SimonReport& r) {
    Json j;
    j["status"] = simon_status_name(r.status);
    Json cands = Json::array();
    for (const auto& c : r.candidates) {
        Json jc;
        jc["p"] = c.p;
        jc["q"] = c.q;
        jc["verified"] = c.verified;
        cands.push_back(std::move(jc));
    }
    j["candidates"] = std::move(cands);
    j["samples_used"] = r.samples_used;
    j["rank"] = r.rank;
    j["nullspace_dim"] = r.nullspace_dim;
    j["counters"] = counters_to_json(r.counters);
    return j;
}

Json report_to_json(const ShorReport& r) {
    Json j;
    j["status"] = r.found ? "found" : "not_found";
    if (r.found) {
        j["p"] = r.p;
        j["q"] = r.q;
    }
    j["pairs_used"] = r.pairs_used;
    j["resonant_fraction"] = r.resonant_fraction;
    Json log = Json::array();
    for (const auto& t : r.candidate_log) {
        Json jt;
        jt["p"] = t.p;
        jt["q"] = t.q;
        jt["verified"] = t.verified;
        log.push_back(std::move(jt));
    }
    j["candidate_log"] = std::move(log);
    j["counters"] = counters_to_json(r.counters);
    return j;
}

Json report_to_json(const SelfSimReport& r) {
    Json j;
    j["status"] = r.found ? "found" : "not_found";
    if (r.found) {
        j["alpha"] = r.alpha;
        j["beta"] = r.beta;
    }
    j["max_quant_residual"] = r.max_quant_residual;
    j["shor"] = report_to_json(r.shor);
    return j;
}

Json report_to_json(const BaselineReport& r) {
    Json j;
    j["status"] = r.found ? "found" : "not_found";
    if (r.found) {
        j["p"] = r.p;
        j["q"] = r.q;
    }
    j["strategy"] = r.strategy;
    j["classical_queries"] = r.classical_queries;
    return j;
}

}  // namespace hidsym
