#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dhc/graph.hpp"
#include "dhc/minor.hpp"
#include "dhc/seagull.hpp"

namespace dhc {

// Edge xy (x < y) such that every other vertex is adjacent to x or y.
struct DominatingEdge {
  int x = 0, y = 0;
};

std::optional<DominatingEdge> find_dominating_edge(const Graph& g);

// A certificate together with the construction path that produced it, e.g.
// "clique+seagulls" or "remove-vertex/clique". "exact" marks the exact solver.
struct BuiltCertificate {
  MinorCertificate certificate;
  std::string provenance;
  bool used_exact_solver() const;
};

// Certificates of G1 and G2 concatenated into one of the join G1 + G2
// (G2's vertices shifted by |G1|). Throws PreconditionError on invalid input.
MinorCertificate compose_join(const Graph& g1, const MinorCertificate& a, const Graph& g2,
                              const MinorCertificate& b);

// Seagull branch sets first, then the clique's vertices as singletons.
// With alpha <= 2 every vertex outside a seagull sees one of its two ends,
// so each seagull dominates everything placed after it.
MinorCertificate assemble_clique_plus_seagulls(const Graph& g, VertexSet clique,
                                               const std::vector<Seagull>& pack);

// Order >= ceil(n/2) for alpha <= 2 and 2*omega >= ceil(n/2) + 1.
BuiltCertificate build_omega_certificate(const Graph& g);

// Order >= chi(g) when the minimum degree is at least n - 3.
BuiltCertificate build_mindeg_certificate(const Graph& g);

using BaseSolver = std::function<BuiltCertificate(const Graph&)>;

// Exact h_d certificate (no budget).
BuiltCertificate exact_base(const Graph& g);

// Peels dominating edges as leading branch sets. After each prefix of the
// peel chain the remainder goes to `base`; the longest result wins, with
// fewer peels preferred on ties.
BuiltCertificate peel_dominating_edges(const Graph& g, const BaseSolver& base = exact_base);

// Induced C5 through x as the cycle sequence (x, v1, v2, v3, v4) with v1 < v4,
// lexicographically least; similarly (x, v1, v2, v3) for C4.
std::optional<std::vector<int>> find_induced_c5_through(const Graph& g, int x);
std::optional<std::vector<int>> find_induced_c4_through(const Graph& g, int x);

// Hypotheses under which the locators must succeed.
bool c5_guarantee_applies(const Graph& g, int x);
bool c4_guarantee_applies(const Graph& g, int x);

inline int ceil_half(int n) { return (n + 1) / 2; }

}  // namespace dhc
