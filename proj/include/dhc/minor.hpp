#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

// Ordered branch sets (T_1, ..., T_t) of a dominating K_t minor: disjoint,
// non-empty, connected, and every vertex of T_j has a neighbour in each
// earlier T_i. Branch sets need not cover the graph.
struct MinorCertificate {
  std::vector<VertexSet> branch_sets;
  int order() const { return static_cast<int>(branch_sets.size()); }
  VertexSet support() const;
};

struct Verification {
  enum class Clause { ok, empty, overlap, disconnected, undominated };
  Clause clause = Clause::ok;
  int i = -1;  // 0-based branch set indices
  int j = -1;
  int vertex = -1;
  std::string diagnostic;
  explicit operator bool() const { return clause == Clause::ok; }
};

// Throws std::out_of_range if a branch set names a vertex outside the graph.
Verification verify_dominating(const Graph& g, const MinorCertificate& cert);

// Relabel a certificate of an induced subgraph back to host indices.
MinorCertificate lift(const MinorCertificate& cert, const std::vector<int>& host_index);

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

enum class SearchStatus { found, none, budget_exhausted };

struct KtSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<MinorCertificate> certificate;
  std::uint64_t nodes = 0;
};

struct HdResult {
  int value = 0;  // best order found; equals h_d when exact
  int upper = 0;  // upper bound; equals value when exact
  bool exact = true;
  MinorCertificate certificate;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Decides dominating K_t minors. Branch sets are chosen front to back: T_1
// is any connected set and the remaining t-1 sets must live inside the
// vertices T_1 dominates, so the problem recurses on that set. Budget counts
// expanded nodes (enumerated candidate branch sets), never wall time.
class DominatingMinorSolver {
 public:
  explicit DominatingMinorSolver(std::uint64_t budget = kUnlimited) : budget_(budget) {}

  KtSearch has_dominating_kt(const Graph& g, int t);
  HdResult hd(const Graph& g);

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Exhausted {};

  bool solve(VertexSet avail, int k, std::vector<VertexSet>& seq);
  bool solve_small(VertexSet avail, int k, std::vector<VertexSet>& seq);
  void charge();

  const Graph* g_ = nullptr;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, int>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(k.second));
    }
  };
  // Failed (available set, k) pairs for the current graph.
  std::unordered_set<std::pair<std::uint64_t, int>, KeyHash> failed_;
  // Completed negatives keyed by (canonical graph6, t); valid across graphs.
  std::unordered_set<std::string> negative_;
};

KtSearch has_dominating_kt(const Graph& g, int t, std::uint64_t budget = kUnlimited);
HdResult hd(const Graph& g, std::uint64_t budget = kUnlimited);

// Ordinary (unordered) K_t minor: branch sets pairwise joined by an edge.
bool has_kt_minor(const Graph& g, int t);

// Upper bound for any K_t minor: t <= n and t(t-1)/2 <= |E|.
int trivial_minor_upper_bound(const Graph& g);

// Cycle in g[s] as a vertex sequence, or empty if g[s] is a forest.
std::vector<int> find_cycle(const Graph& g, VertexSet s);

}  // namespace dhc
