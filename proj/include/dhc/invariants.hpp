#pragma once

#include <stdexcept>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

struct SetWitness {
  int value = 0;
  VertexSet witness;
};

struct Matching {
  int size = 0;
  std::vector<Edge> edges;
};

struct InvariantBundle {
  int order = 0;
  int alpha = 0;
  VertexSet alpha_witness;
  int omega = 0;
  VertexSet omega_witness;
  int chi = 0;
  int min_degree = 0;
  int max_degree = 0;
  int anti_matching = 0;
  int connectivity = 0;
};

// Largest clique contained in `within`; branch and bound with greedy colouring.
SetWitness max_clique(const Graph& g, VertexSet within);
SetWitness clique_number(const Graph& g);
SetWitness independence_number(const Graph& g);
// alpha(g) <= 2, via triangle-freeness of the complement.
bool alpha_le_2(const Graph& g);

// Maximum matching in a general graph (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);

inline constexpr int kMaxExactColoringOrder = 16;

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact chromatic number. Uses n - mu(complement) when alpha <= 2; otherwise
// an exact colouring search limited to kMaxExactColoringOrder vertices.
int chromatic_number(const Graph& g);
// The search path alone, regardless of alpha.
int chromatic_number_by_search(const Graph& g);

InvariantBundle compute_invariants(const Graph& g);

}  // namespace dhc
