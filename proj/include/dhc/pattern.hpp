#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

// mapping[u] is the host vertex that pattern vertex u lands on.
struct InducedWitness {
  std::vector<int> mapping;
};

// Pattern vertices are placed in a fixed max-degree-first order (least index on
// ties) and host candidates are tried in increasing order, so the returned
// witness is the lexicographically least one with respect to that placement
// order.
std::optional<InducedWitness> find_induced(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);
bool is_induced_witness(const Graph& host, const Graph& pattern, const InducedWitness& w);

// name -> true iff host has no induced copy of catalog(name).
std::map<std::string, bool> is_free(const Graph& host, const std::vector<std::string>& names);

}  // namespace dhc
