#pragma once

#include <json.hpp>

#include "solrep/measures.hpp"
#include "solrep/unitary_rep.hpp"

namespace solrep {

// ordered_json keeps object keys in insertion order so emitted reports diff cleanly
using Json = nlohmann::ordered_json;

// Exact points serialize as {"num": "...", "den": "..."} (decimal strings, arbitrary
// precision); truncated points as {"prefix": [t0, t1, ...]}.
Json point_to_json(const SolenoidPoint& p);
SolenoidPoint point_from_json(const Json& j);

// {"first": point, "second": point}
Json pair_to_json(const SolenoidPair& p);
SolenoidPair pair_from_json(const Json& j);

// {"space": "solenoid" | "solenoid_pair", "atoms": [{"point": ..., "weight": w}]}
Json measure_to_json(const PointMeasure& mu);
Json measure_to_json(const PairMeasure& mu);
PointMeasure point_measure_from_json(const Json& j);
PairMeasure pair_measure_from_json(const Json& j);

// {"dimension": d, "generators": [{"label": ..., "matrix": [[[re, im], ...], ...]}]}
Json rep_to_json(const UnitaryRep& rep);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace solrep
