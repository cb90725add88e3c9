#pragma once

#include <json.hpp>

#include "dhc/construct.hpp"
#include "dhc/invariants.hpp"
#include "dhc/minor.hpp"
#include "dhc/seagull.hpp"
#include "dhc/theorems.hpp"

namespace dhc {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j);

// {"schema": "dhc.certificate/1", "n", "graph6", "branch_sets": [[...], ...]}
Json certificate_json(const Graph& g, const MinorCertificate& cert);

struct CertificateFile {
  Graph graph;
  MinorCertificate certificate;
};
// Accepts a certificate document or any document embedding one under
// "certificate". Throws std::invalid_argument on schema violations.
CertificateFile certificate_from_json(const Json& j);

Json invariants_json(const Graph& g, const InvariantBundle& inv);
Json hd_json(const Graph& g, const HdResult& r);
Json lower_bound_json(const Graph& g, const LowerBound& lb);
Json verdict_json(const Graph& g, const Verdict& v);
Json feasibility_json(const FeasibilityReport& f);
Json packing_json(const SeagullPacking& p);
Json built_json(const Graph& g, const BuiltCertificate& b);

}  // namespace dhc
