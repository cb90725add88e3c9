#include "dhc/invariants.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace dhc {

namespace {

// Degeneracy ordering restricted to `within`: repeatedly remove a vertex of
// minimum degree (least index on ties). The clique search branches in the
// reverse of this order.
std::vector<int> degeneracy_order(const Graph& g, VertexSet within) {
  std::vector<int> order;
  VertexSet left = within;
  while (!left.empty()) {
    int pick = -1, best = kMaxVertices + 1;
    for (int v : left) {
      int d = (g.neighbors(v) & left).size();
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    order.push_back(pick);
    left.erase(pick);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, VertexSet within) : g_(g), order_(degeneracy_order(g, within)) {
  }

  SetWitness run(VertexSet within) {
    expand(VertexSet{}, within);
    return {best_.size(), best_};
  }

 private:
  // Greedy colouring of p in search order; returns vertices with their colour bound.
  void colour(VertexSet p, std::vector<int>& vs, std::vector<int>& bound) const {
    vs.clear();
    bound.clear();
    std::vector<int> ordered;
    for (int v : order_)
      if (p.contains(v)) ordered.push_back(v);
    VertexSet uncoloured = p;
    int c = 0;
    while (!uncoloured.empty()) {
      ++c;
      VertexSet avail = uncoloured;
      for (int v : ordered) {
        if (!avail.contains(v)) continue;
        vs.push_back(v);
        bound.push_back(c);
        uncoloured.erase(v);
        avail -= g_.neighbors(v);
        avail.erase(v);
      }
      std::erase_if(ordered, [&](int v) { return !uncoloured.contains(v); });
    }
  }

  void expand(VertexSet r, VertexSet p) {
    if (p.empty()) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    std::vector<int> vs, bound;
    colour(p, vs, bound);
    for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i) {
      if (r.size() + bound[i] <= best_.size()) return;
      int v = vs[i];
      VertexSet r2 = r;
      r2.insert(v);
      expand(r2, p & g_.neighbors(v));
      p.erase(v);
    }
  }

  const Graph& g_;
  std::vector<int> order_;
  VertexSet best_;
};

// Classic O(n^3) blossom-contraction matching on adjacency bitsets.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    // Greedy start, then augment from every exposed vertex.
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0)
        for (int w : g_.neighbors(v))
          if (match_[w] < 0) {
            match_[v] = w;
            match_[w] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) {
        int end = find_path(v);
        while (end >= 0) {
          int pv = parent_[end], ppv = match_[pv];
          match_[end] = pv;
          match_[pv] = end;
          end = ppv;
        }
      }
    Matching m;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
    m.size = static_cast<int>(m.edges.size());
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push_back(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

// k-colourability by DSatur-ordered backtracking.
class Colouring {
 public:
  Colouring(const Graph& g, int k) : g_(g), k_(k), classes_(k) {}

  bool run() { return assign(g_.vertices()); }

 private:
  bool assign(VertexSet left) {
    if (left.empty()) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v : left) {
      int sat = 0;
      for (int c = 0; c < used_; ++c) sat += classes_[c].intersects(g_.neighbors(v));
      int deg = (g_.neighbors(v) & left).size();
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    left.erase(pick);
    int limit = std::min(k_, used_ + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c].intersects(g_.neighbors(pick))) continue;
      bool fresh = c == used_;
      classes_[c].insert(pick);
      if (fresh) ++used_;
      if (assign(left)) return true;
      if (fresh) --used_;
      classes_[c].erase(pick);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int used_ = 0;
  std::vector<VertexSet> classes_;
};

}  // namespace

SetWitness max_clique(const Graph& g, VertexSet within) {
  within &= g.vertices();
  return CliqueSearch(g, within).run(within);
}

SetWitness clique_number(const Graph& g) { return max_clique(g, g.vertices()); }

SetWitness independence_number(const Graph& g) { return clique_number(complement(g)); }

bool alpha_le_2(const Graph& g) { return is_triangle_free(complement(g)); }

Matching max_matching(const Graph& g) { return Blossom(g).run(); }

int chromatic_number_by_search(const Graph& g) {
  if (g.order() > kMaxExactColoringOrder)
    throw SearchLimitError("exact colouring is limited to " + std::to_string(kMaxExactColoringOrder) +
                           " vertices; got " + std::to_string(g.order()));
  if (g.order() == 0) return 0;
  for (int k = clique_number(g).value;; ++k)
    if (Colouring(g, k).run()) return k;
}

int chromatic_number(const Graph& g) {
  if (alpha_le_2(g)) return g.order() - max_matching(complement(g)).size;
  return chromatic_number_by_search(g);
}

InvariantBundle compute_invariants(const Graph& g) {
  InvariantBundle b;
  b.order = g.order();
  auto a = independence_number(g);
  b.alpha = a.value;
  b.alpha_witness = a.witness;
  auto w = clique_number(g);
  b.omega = w.value;
  b.omega_witness = w.witness;
  b.chi = chromatic_number(g);
  b.min_degree = g.min_degree();
  b.max_degree = g.max_degree();
  b.anti_matching = max_matching(complement(g)).size;
  b.connectivity = vertex_connectivity(g);
  return b;
}

}  // namespace dhc
