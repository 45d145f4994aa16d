#include "signcount/io.hpp"

#include <fstream>
#include <sstream>

namespace signcount {

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

std::vector<ExactScalar> load_weights_file(const std::string& path) {
  Json j = load_json(path);
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    throw ParseError(path + ": expected {\"weights\": [...]}");
  std::vector<ExactScalar> out;
  for (const auto& entry : j["weights"]) {
    if (entry.is_string())
      out.push_back(ExactScalar::parse(entry.get<std::string>()));
    else if (entry.is_number_integer())
      out.push_back(ExactScalar::parse(entry.dump()));  // decimal text, any magnitude
    else
      throw ParseError(path + ": weights must be rational strings or integers");
  }
  return out;
}

EvenMapOracle load_map_file(const std::string& path) {
  Json j = load_json(path);
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer() || !j.contains("values") ||
      !j["values"].is_array())
    throw ParseError(path + ": expected {\"m\": int, \"values\": [...]}");
  int m = j["m"].get<int>();
  if (m < 1 || m > EvenMapOracle::kDenseMaxM)
    throw ParseError(path + ": m must be between 1 and " + std::to_string(EvenMapOracle::kDenseMaxM));
  if (j["values"].size() != (1ull << m))
    throw ParseError(path + ": values must have exactly 2^m entries");
  std::vector<std::int8_t> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    if (!v.is_number_integer()) throw ParseError(path + ": map values must be integers");
    long long x = v.get<long long>();
    if (x != 1 && x != -1) throw ParseError(path + ": map values must be +1 or -1");
    values.push_back(static_cast<std::int8_t>(x));
  }
  return EvenMapOracle::dense(m, std::move(values), Evenness::Assumed);
}

std::vector<RationalVector> load_points_file(const std::string& path) {
  Json j = load_json(path);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw ParseError(path + ": expected {\"points\": [[...], ...]}");
  std::vector<RationalVector> out;
  for (const auto& row : j["points"]) {
    if (!row.is_array()) throw ParseError(path + ": each point must be an array of rationals");
    RationalVector p;
    for (const auto& coord : row) {
      if (coord.is_string())
        p.push_back(ExactScalar::parse(coord.get<std::string>()));
      else if (coord.is_number_integer())
        p.push_back(ExactScalar::parse(coord.dump()));
      else
        throw ParseError(path + ": coordinates must be rational strings or integers");
    }
    out.push_back(std::move(p));
  }
  return out;
}

RationalVector parse_vector(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(ExactScalar::parse(token));
  if (out.empty()) throw ParseError("empty vector literal '" + text + "'");
  return out;
}

Json weights_to_json(const std::vector<ExactScalar>& weights) {
  Json arr = Json::array();
  for (const auto& w : weights) arr.push_back(w.str());
  return arr;
}

Json invariant_report_to_json(const InvariantReport& report, const std::vector<ExactScalar>& weights) {
  Json j;
  j["mode"] = report.mode == ReportMode::Plain ? "plain" : "calligraphic";
  j["m"] = report.m;
  j["weights"] = weights_to_json(weights);
  Json pairs = Json::array();
  for (const PairEntry& e : report.pairs) {
    Json row;
    row["i"] = e.i + 1;
    row["j"] = e.j + 1;
    row["value"] = e.value;
    row["cardinality"] = e.cardinality;
    row["parity"] = e.parity;
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  Json summary;
  summary["all_equal"] = report.all_equal();
  if (auto common = report.common_value()) summary["common_value"] = *common;
  summary["parity_constant"] = report.parity_constant();
  if (report.h) summary["h"] = *report.h;
  j["summary"] = std::move(summary);
  return j;
}

Json slab_report_to_json(const SlabInstance& inst, const SlabReport& report) {
  Json j;
  j["m"] = inst.m();
  j["dim"] = inst.dim();
  j["normal"] = weights_to_json(inst.normal());
  j["projections"] = weights_to_json(inst.projections().weights());
  j["c"] = report.c;
  j["abs_m"] = report.abs_m;
  Json pairs = Json::array();
  for (const SlabPairEntry& e : report.pairs) {
    Json row;
    row["i"] = e.i + 1;
    row["j"] = e.j + 1;
    row["m"] = e.m;
    row["sign_aj"] = e.sign_aj;
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

namespace {

std::string pad(const std::string& s, size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 1, ' ');
}

}  // namespace

std::string render_invariant_table(const InvariantReport& report) {
  std::ostringstream out;
  out << "pair    value    |S|   parity\n";
  for (const PairEntry& e : report.pairs) {
    std::string pair = "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
    out << pad(pair, 8) << pad(std::to_string(e.value), 9) << pad(std::to_string(e.cardinality), 6)
        << e.parity << "\n";
  }
  out << "all_equal=" << (report.all_equal() ? "true" : "false");
  if (auto common = report.common_value()) out << " common_value=" << *common;
  out << " parity_constant=" << (report.parity_constant() ? "true" : "false");
  if (report.h) out << " h=" << *report.h;
  out << "\n";
  return out.str();
}

std::string render_slab_table(const SlabInstance& inst, const SlabReport& report) {
  std::ostringstream out;
  out << "projections:";
  for (const auto& a : inst.projections().weights()) out << " " << a.str();
  out << "\nc=" << report.c << " |M|=" << report.abs_m << "\n";
  out << "pair    M        sgn(a_j)\n";
  for (const SlabPairEntry& e : report.pairs) {
    std::string pair = "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
    out << pad(pair, 8) << pad(std::to_string(e.m), 9) << (e.sign_aj > 0 ? "+1" : "-1") << "\n";
  }
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace signcount
