#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond Graph and VertexSet, and are only fit for tiny graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "dhc/graph.hpp"

namespace oracle {

using dhc::Graph;
using dhc::VertexSet;

inline bool connected(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  std::uint64_t seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < g.order(); ++v)
      if ((frontier >> v) & 1U) next |= g.neighbors(v).bits();
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

inline bool sees(const Graph& g, int v, std::uint64_t set) { return (g.neighbors(v).bits() & set) != 0; }

// Longest ordered sequence of disjoint connected sets, each vertex of a later
// set adjacent to every earlier set. Every connected subset is tried at every
// position.
inline int hd(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> conn;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
    if (connected(g, s)) conn.push_back(s);
  std::vector<std::uint64_t> seq;
  int best = 0;
  std::function<void(std::uint64_t)> go = [&](std::uint64_t used) {
    best = std::max(best, static_cast<int>(seq.size()));
    for (auto s : conn) {
      if (s & used) continue;
      bool ok = true;
      for (int v = 0; v < n && ok; ++v)
        if ((s >> v) & 1U)
          for (auto t : seq)
            if (!sees(g, v, t)) {
              ok = false;
              break;
            }
      if (!ok) continue;
      seq.push_back(s);
      go(used | s);
      seq.pop_back();
    }
  };
  go(0);
  return best;
}

inline bool is_clique(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u)
    if ((s >> u) & 1U)
      for (int v = u + 1; v < g.order(); ++v)
        if (((s >> v) & 1U) && !g.has_edge(u, v)) return false;
  return true;
}

inline int popcount(std::uint64_t s) { return __builtin_popcountll(s); }

inline int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (popcount(s) > best && is_clique(g, s)) best = popcount(s);
  return best;
}

inline int independence_number(const Graph& g) { return oracle::clique_number(dhc::complement(g)); }

inline int matching(const Graph& g) {
  auto edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> go = [&](std::size_t i, std::uint64_t used, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      auto [u, v] = edges[j];
      std::uint64_t m = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      if (used & m) continue;
      go(j + 1, used | m, size + 1);
    }
  };
  go(0, 0, 0);
  return best;
}

// Smallest k admitting a proper colouring, by plain backtracking.
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> colour(n, -1);
  std::function<bool(int, int)> fits = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) && colour[u] == c) ok = false;
      if (!ok) continue;
      colour[v] = c;
      if (fits(v + 1, k)) return true;
    }
    colour[v] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (fits(0, k)) return k;
}

inline std::vector<std::uint64_t> adjacency_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) rows[perm[u]] |= std::uint64_t{1} << perm[v];
  return rows;
}

// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  auto target = adjacency_code(b, perm);
  do {
    if (adjacency_code(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Induced copy of h in g, trying every injection.
inline bool contains_induced(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (k > n) return false;
  std::vector<int> map(k);
  std::uint64_t used = 0;
  std::function<bool(int)> go = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (h.has_edge(i, j) != g.has_edge(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      used |= std::uint64_t{1} << v;
      if (go(i + 1)) return true;
      used &= ~(std::uint64_t{1} << v);
    }
    return false;
  };
  return go(0);
}

// Doubled minimum capacity over every non-empty clique.
inline int min_twice_capacity(const Graph& g) {
  const int n = g.order();
  int best = 1 << 30;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    if (!is_clique(g, k)) continue;
    int mixed = 0;
    for (int v = 0; v < n; ++v) {
      if ((k >> v) & 1U) continue;
      std::uint64_t nb = g.neighbors(v).bits() & k;
      if (nb != 0 && nb != k) ++mixed;
    }
    best = std::min(best, n + mixed - popcount(k));
  }
  return best;
}

// Vertex connectivity: smallest removal that disconnects, or n - 1.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << n); ++cut) {
    int k = popcount(cut);
    if (k >= best || n - k < 2) continue;
    if (!connected(g, all & ~cut)) best = k;
  }
  return best;
}

// Maximum number of vertex-disjoint induced P3s.
inline int seagull_packing(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> gulls;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c)
        if (a != b && c != b && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c))
          gulls.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> go = [&](std::size_t i, std::uint64_t used, int k) {
    best = std::max(best, k);
    if (k + (n - popcount(used)) / 3 <= best) return;
    for (std::size_t j = i; j < gulls.size(); ++j)
      if (!(gulls[j] & used)) go(j + 1, used | gulls[j], k + 1);
  };
  go(0, 0, 0);
  return best;
}

// Ordinary K_t minor for t <= 3: t = 1 non-empty, t = 2 an edge, t = 3 a cycle.
inline bool small_clique_minor(const Graph& g, int t) {
  if (t <= 1) return g.order() >= 1;
  if (t == 2) return g.size() >= 1;
  // A forest has m = n - c.
  return g.size() > g.order() - static_cast<int>(dhc::components(g).size());
}

}  // namespace oracle
