#pragma once

#include <string>

#include <json.hpp>

#include "hidsym/baseline.hpp"
#include "hidsym/instances.hpp"
#include "hidsym/selfsim.hpp"
#include "hidsym/shor.hpp"
#include "hidsym/simon.hpp"

namespace hidsym {

// Stable key ordering so identical runs serialize to identical bytes.
using Json = nlohmann::ordered_json;

// Instance schema: {kind, n, p, q, seed, table?}. The table is optional when
// (kind, n, p, q, seed) regenerate it deterministically.
Json instance_to_json(const SimonInstance& inst, bool with_table);
Json instance_to_json(const LinearInstance& inst, bool with_table);
Json instance_to_json(const ShorInstance& inst, bool with_table);
Json instance_to_json(const MultiXorInstance& inst, bool with_table);

/// Regenerates or loads the oracle table of a serialized instance.
OracleTable table_from_json(const Json& j);

Json counters_to_json(const QueryCounter& c);
Json report_to_json(const SimonReport& r);
Json report_to_json(const ShorReport& r);
Json report_to_json(const SelfSimReport& r);
Json report_to_json(const BaselineReport& r);

std::string simon_status_name(SimonStatus s);

}  // namespace hidsym
