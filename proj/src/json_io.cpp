#include "dhc/json_io.hpp"

#include "dhc/graph6.hpp"

namespace dhc {

Json to_json(VertexSet s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("branch set must be an array of vertices");
  VertexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("vertex must be an integer");
    auto x = v.get<long long>();
    if (x < 0 || x >= kMaxVertices) throw std::invalid_argument("vertex " + std::to_string(x) + " out of range");
    if (s.contains(static_cast<int>(x)))
      throw std::invalid_argument("vertex " + std::to_string(x) + " repeated inside one branch set");
    s.insert(static_cast<int>(x));
  }
  return s;
}

Json certificate_json(const Graph& g, const MinorCertificate& cert) {
  Json sets = Json::array();
  for (auto s : cert.branch_sets) sets.push_back(to_json(s));
  return Json{{"schema", "dhc.certificate/1"}, {"n", g.order()}, {"graph6", to_graph6(g)}, {"branch_sets", sets}};
}

CertificateFile certificate_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate document must be a JSON object");
  if (!j.contains("branch_sets") && j.contains("certificate") && j["certificate"].is_object())
    return certificate_from_json(j["certificate"]);
  if (!j.contains("graph6") || !j["graph6"].is_string()) throw std::invalid_argument("missing \"graph6\" string");
  if (!j.contains("branch_sets") || !j["branch_sets"].is_array())
    throw std::invalid_argument("missing \"branch_sets\" array");
  CertificateFile out;
  out.graph = from_graph6(j["graph6"].get<std::string>());
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != out.graph.order()))
    throw std::invalid_argument("\"n\" disagrees with the graph6 record");
  for (const auto& s : j["branch_sets"]) out.certificate.branch_sets.push_back(vertex_set_from_json(s));
  return out;
}

Json invariants_json(const Graph& g, const InvariantBundle& inv) {
  return Json{{"schema", "dhc.invariants/1"},
              {"graph6", to_graph6(g)},
              {"n", inv.order},
              {"m", g.size()},
              {"alpha", inv.alpha},
              {"alpha_witness", to_json(inv.alpha_witness)},
              {"omega", inv.omega},
              {"omega_witness", to_json(inv.omega_witness)},
              {"chi", inv.chi},
              {"min_degree", inv.min_degree},
              {"max_degree", inv.max_degree},
              {"anti_matching", inv.anti_matching},
              {"connectivity", inv.connectivity}};
}

Json hd_json(const Graph& g, const HdResult& r) {
  return Json{{"schema", "dhc.hd/1"},
              {"graph6", to_graph6(g)},
              {"value", r.value},
              {"upper", r.upper},
              {"exact", r.exact},
              {"nodes", r.nodes},
              {"certificate", certificate_json(g, r.certificate)}};
}

namespace {

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

}  // namespace

Json lower_bound_json(const Graph& g, const LowerBound& lb) {
  Json j{{"target", lb.target}, {"status", status_name(lb.status)}, {"provenance", lb.provenance}, {"nodes", lb.nodes}};
  j["certificate"] = lb.certificate && lb.status == SearchStatus::found ? certificate_json(g, *lb.certificate) : Json();
  return j;
}

Json verdict_json(const Graph& g, const Verdict& v) {
  Json hyp = Json::array();
  for (const auto& c : v.hypotheses) hyp.push_back({{"clause", c.name}, {"holds", c.holds}, {"witness", c.witness}});
  Json ev = Json::array();
  for (const auto& lb : v.evidence) ev.push_back(lower_bound_json(g, lb));
  return Json{{"schema", "dhc.verdict/1"},
              {"graph6", to_graph6(g)},
              {"theorem", v.theorem_id},
              {"status", to_string(v.status)},
              {"hypotheses", hyp},
              {"conclusion", v.conclusion_text},
              {"conclusion_holds", v.conclusion ? Json(*v.conclusion) : Json()},
              {"evidence", ev}};
}

Json feasibility_json(const FeasibilityReport& f) {
  Json cap;
  if (f.min_capacity)
    cap = Json{{"clique", to_json(f.min_capacity->clique)},
               {"boundary", to_json(f.min_capacity->boundary)},
               {"capacity", f.min_capacity->capacity()}};
  return Json{{"ell", f.ell},
              {"alpha_le_2", f.alpha_le_2},
              {"size", f.cond_size},
              {"connectivity", f.connectivity},
              {"connected_enough", f.cond_conn},
              {"min_capacity", cap},
              {"capacity", f.cond_capacity},
              {"anti_matching", f.anti_matching.size},
              {"anti_matching_ok", f.cond_antimatching},
              {"all_conditions", f.all()},
              {"exception", f.exception}};
}

Json packing_json(const SeagullPacking& p) {
  Json a = Json::array();
  for (const auto& s : p.seagulls) a.push_back({{"ends", {s.a, s.c}}, {"center", s.b}});
  return Json{{"size", p.size}, {"seagulls", a}};
}

Json built_json(const Graph& g, const BuiltCertificate& b) {
  return Json{{"schema", "dhc.construct/1"},
              {"graph6", to_graph6(g)},
              {"order", b.certificate.order()},
              {"provenance", b.provenance},
              {"exact_fallback", b.used_exact_solver()},
              {"certificate", certificate_json(g, b.certificate)}};
}

}  // namespace dhc
