// File formats and report rendering. Formats:
//   weights file:  {"weights": ["1/3", "2", ...]}
//   map file:      {"m": 3, "values": [1, -1, ...]}   values[k] = sigma(mask k)
//   points file:   {"points": [["3","0"], ["4","0"], ["5","0"]]}
// Rational strings are canonical ("p" or "p/q"); JSON rendering uses a stable
// key order so that parse + re-render is byte-identical.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "signcount/geomslab.hpp"
#include "signcount/invariants.hpp"
#include "signcount/signspace.hpp"

namespace signcount {

using Json = nlohmann::ordered_json;

std::vector<ExactScalar> load_weights_file(const std::string& path);
EvenMapOracle load_map_file(const std::string& path);
std::vector<RationalVector> load_points_file(const std::string& path);

// comma-separated rationals, e.g. "1,0" or "1/2,3"
RationalVector parse_vector(const std::string& text);

Json weights_to_json(const std::vector<ExactScalar>& weights);
Json invariant_report_to_json(const InvariantReport& report, const std::vector<ExactScalar>& weights);
Json slab_report_to_json(const SlabInstance& inst, const SlabReport& report);

std::string render_invariant_table(const InvariantReport& report);
std::string render_slab_table(const SlabInstance& inst, const SlabReport& report);

// canonical dump used everywhere JSON is emitted
std::string dump_json(const Json& j);

}  // namespace signcount
