#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dhc/graph.hpp"
#include "dhc/invariants.hpp"

namespace dhc {

// Induced path a - b - c (ends a < c, centre b).
struct Seagull {
  int a = 0, b = 0, c = 0;
  VertexSet vertices() const { return VertexSet{a, b, c}; }
  bool operator==(const Seagull&) const = default;
};

bool is_seagull(const Graph& g, const Seagull& s);
std::vector<Seagull> all_seagulls(const Graph& g);

struct SeagullPacking {
  int size = 0;
  std::vector<Seagull> seagulls;
};

// Exact maximum number of pairwise vertex-disjoint seagulls.
SeagullPacking max_disjoint_seagulls(const Graph& g);
// Same search restricted to `within`; stops once `target` seagulls are packed.
SeagullPacking pack_seagulls(const Graph& g, VertexSet within, int target);

// K* holds the vertices outside K that are neither complete nor anticomplete
// to K. Capacity is (n + |K*| - |K|) / 2; it is stored doubled.
struct CliqueCapacity {
  VertexSet clique;
  VertexSet boundary;
  int twice_capacity = 0;
  double capacity() const { return twice_capacity / 2.0; }
};

inline constexpr int kMaxCapacityOrder = 16;

CliqueCapacity clique_capacity(const Graph& g, VertexSet clique);
// Minimum over all non-empty cliques. Requires 1 <= n <= kMaxCapacityOrder.
CliqueCapacity min_clique_capacity(const Graph& g);

struct FeasibilityReport {
  int ell = 0;
  bool alpha_le_2 = false;
  bool cond_size = false;  // n >= 3 ell
  int connectivity = 0;
  bool cond_conn = false;  // ell-connected
  std::optional<CliqueCapacity> min_capacity;  // empty for the null graph
  bool cond_capacity = false;
  Matching anti_matching;
  bool cond_antimatching = false;
  bool exception = false;  // g is W_5 and ell == 2
  bool all() const { return cond_size && cond_conn && cond_capacity && cond_antimatching; }
};

FeasibilityReport feasibility(const Graph& g, int ell);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CrosscheckVerdict {
  bool conditions = false;
  bool packing = false;
  int max_packing = 0;
  bool discrepancy() const { return conditions != packing; }
};

// Compares the four conditions against exact packing. Throws PreconditionError
// when alpha(g) > 2 or (g, ell) is the excluded pair (W_5, 2).
CrosscheckVerdict crosscheck_characterization(const Graph& g, int ell);

bool is_w5(const Graph& g);

}  // namespace dhc
