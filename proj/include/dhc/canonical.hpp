#pragma once

#include <string>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

struct CanonicalForm {
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  Graph graph;
  // Automorphisms discovered during the search (as vertex maps).
  std::vector<std::vector<int>> automorphisms;
};

// Canonical labeling by colour refinement plus an individualize-and-refine
// search tree. Isomorphic inputs produce identical `graph` values.
CanonicalForm canonical_form(const Graph& g);

// graph6 of the canonical graph.
std::string canonical_key(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace dhc
