#include "fsq/report.hpp"

#include <sstream>

namespace fsq {

using nlohmann::json;

namespace {

json vec_json(const LatticeVec& v) { return json::array({v.x, v.y}); }
json cell_json(const Cell& c) { return json::array({c.x, c.y}); }

LatticeVec vec_from(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }
Cell cell_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json rational_json(const Rational& q) { return {{"num", q.num}, {"den", q.den}}; }
Rational rational_from(const json& j) { return {j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()}; }

json loop_json(const LoopWitness& loop) {
  json edges = json::array();
  for (const auto& e : loop.edges) {
    edges.push_back({{"from", cell_json(e.from)}, {"to", cell_json(e.to)}, {"b", vec_json(e.b)}});
  }
  return {{"generation", loop.generation}, {"edges", edges}, {"sum", vec_json(loop.sum)}};
}

LoopWitness loop_from(const json& j) {
  LoopWitness loop;
  loop.generation = j.at("generation").get<int>();
  for (const auto& e : j.at("edges")) {
    loop.edges.push_back({cell_from(e.at("from")), cell_from(e.at("to")), vec_from(e.at("b"))});
  }
  loop.sum = vec_from(j.at("sum"));
  return loop;
}

struct EvidenceToJson {
  json operator()(const StabilizedEvidence& e) const {
    json q = json::array();
    for (const auto& v : e.q) q.push_back(vec_json(v));
    return {{"kind", "stabilized_q"}, {"k", e.k}, {"q", q}};
  }
  json operator()(const LoopWitness& loop) const {
    json j = loop_json(loop);
    j["kind"] = "loop";
    return j;
  }
  json operator()(const NormBreachEvidence& e) const {
    return {{"kind", "norm_breach"}, {"q", vec_json(e.q)}, {"generation", e.generation}};
  }
  json operator()(const LineWitness& w) const {
    return {{"kind", "line"}, {"slope", slope_to_json(w.slope)}, {"omega", rational_json(w.omega)}};
  }
};

Evidence evidence_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "stabilized_q") {
    StabilizedEvidence e;
    e.k = j.at("k").get<int>();
    for (const auto& v : j.at("q")) e.q.push_back(vec_from(v));
    return e;
  }
  if (kind == "loop") return loop_from(j);
  if (kind == "norm_breach") return NormBreachEvidence{vec_from(j.at("q")), j.at("generation").get<int>()};
  if (kind == "line") return LineWitness{slope_from_json(j.at("slope")), rational_from(j.at("omega"))};
  throw InputError("unknown evidence kind: " + kind);
}

BoundednessStatus boundedness_from(const std::string& s) {
  for (auto b : {BoundednessStatus::kBounded, BoundednessStatus::kUnbounded, BoundednessStatus::kInconclusive}) {
    if (to_string(b) == s) return b;
  }
  throw InputError("unknown boundedness status: " + s);
}

}  // namespace

json slope_to_json(const Slope& s) {
  if (s.is_vertical()) return "vertical";
  return {{"r", s.r}, {"s", s.s}};
}

Slope slope_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "vertical") throw InputError("bad slope");
    return Slope::vertical();
  }
  return Slope::rational(j.at("r").get<std::int64_t>(), j.at("s").get<std::int64_t>());
}

json report_to_json(const ClassificationReport& r, bool include_timing) {
  json digits = json::array();
  for (const auto& c : r.digits.digits()) digits.push_back(cell_json(c));
  json j = {
      {"n", r.digits.base()},
      {"digits", digits},
      {"class", std::string(to_string(r.classification))},
      {"evidence", std::visit(EvidenceToJson{}, r.evidence)},
      {"boundedness", std::string(to_string(r.boundedness))},
      {"iterations", r.iterations},
      {"version", r.version},
  };
  if (r.direction) j["direction"] = slope_to_json(*r.direction);
  if (r.k_stabilized) j["k_stabilized"] = *r.k_stabilized;
  if (r.loop) j["loop"] = loop_json(*r.loop);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ClassificationReport report_from_json(const json& j) {
  std::vector<Cell> cells;
  for (const auto& c : j.at("digits")) cells.push_back(cell_from(c));
  ClassificationReport r(DigitSet(j.at("n").get<int>(), std::move(cells)));
  const auto cls = parse_topology_class(j.at("class").get<std::string>());
  if (!cls) throw InputError("unknown class: " + j.at("class").dump());
  r.classification = *cls;
  r.evidence = evidence_from(j.at("evidence"));
  r.boundedness = boundedness_from(j.at("boundedness").get<std::string>());
  r.iterations = j.at("iterations").get<int>();
  r.version = j.at("version").get<std::string>();
  if (j.contains("direction")) r.direction = slope_from_json(j.at("direction"));
  if (j.contains("k_stabilized")) r.k_stabilized = j.at("k_stabilized").get<int>();
  if (j.contains("loop")) r.loop = loop_from(j.at("loop"));
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string report_serialize(const ClassificationReport& r, bool include_timing) {
  return report_to_json(r, include_timing).dump();
}

ClassificationReport report_parse(std::string_view text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "n = " << r.digits.base() << ", #D = " << r.digits.size() << "\n" << to_grid_text(r.digits);
  out << "class: " << to_string(r.classification);
  if (r.direction) out << " (direction " << to_string(*r.direction) << ")";
  out << "\nboundedness: " << to_string(r.boundedness) << " after " << r.iterations << " iteration(s)";
  if (r.k_stabilized) out << ", Q stabilized at k = " << *r.k_stabilized;
  out << "\n";
  if (const auto* line = std::get_if<LineWitness>(&r.evidence)) {
    out << "line witness: slope " << to_string(line->slope) << ", omega " << to_string(line->omega) << "\n";
  }
  if (r.loop) {
    out << "non-zero loop in G_Q" << r.loop->generation << " with sum " << to_string(r.loop->sum) << ":";
    for (const auto& e : r.loop->edges) {
      out << " (" << e.from.x << "," << e.from.y << ")->(" << e.to.x << "," << e.to.y << ";"
          << to_string(e.b) << ")";
    }
    out << "\n";
  }
  if (const auto* nb = std::get_if<NormBreachEvidence>(&r.evidence)) {
    out << "norm cap exceeded by " << to_string(nb->q) << "\n";
  }
  return out.str();
}

std::string census_csv(const CensusResult& c) {
  std::ostringstream out;
  out << "size,class,count\n";
  for (const auto& [key, count] : c.by_size_and_class()) {
    out << key.first << ',' << to_string(key.second) << ',' << count << "\n";
  }
  for (const auto& [cls, count] : c.by_class()) out << "all," << to_string(cls) << ',' << count << "\n";
  return out.str();
}

json census_summary_json(const CensusResult& c) {
  json counts = json::object();
  json weighted = json::object();
  for (auto cls : {TopologyClass::kTotallyDisconnected, TopologyClass::kParallelSegments,
                   TopologyClass::kNonSegmentComponent}) {
    const std::string key(to_string(cls));
    const auto plain = c.by_class();
    const auto w = c.weighted_by_class();
    counts[key] = plain.count(cls) ? plain.at(cls) : 0;
    weighted[key] = w.count(cls) ? w.at(cls) : 0;
  }
  json by_size = json::object();
  for (const auto& [key, count] : c.by_size_and_class()) {
    by_size[std::to_string(key.first)][std::string(to_string(key.second))] = count;
  }
  return {{"n", c.n},          {"dedup", c.dedup},   {"reports", c.entries.size()},
          {"counts", counts}, {"weighted_counts", weighted}, {"by_size", by_size}};
}

}  // namespace fsq
