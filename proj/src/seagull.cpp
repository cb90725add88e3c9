#include "dhc/seagull.hpp"

#include <algorithm>

#include "dhc/canonical.hpp"
#include "dhc/catalog.hpp"

namespace dhc {

bool is_seagull(const Graph& g, const Seagull& s) {
  const int n = g.order();
  for (int v : {s.a, s.b, s.c})
    if (v < 0 || v >= n) return false;
  if (s.a == s.b || s.b == s.c || s.a == s.c) return false;
  return g.has_edge(s.a, s.b) && g.has_edge(s.b, s.c) && !g.has_edge(s.a, s.c);
}

std::vector<Seagull> all_seagulls(const Graph& g) {
  std::vector<Seagull> out;
  for (int b = 0; b < g.order(); ++b) {
    VertexSet nb = g.neighbors(b);
    for (int a : nb)
      for (int c : (nb - g.neighbors(a)) - VertexSet::range(a + 1)) out.push_back({a, b, c});
  }
  std::sort(out.begin(), out.end(), [](const Seagull& x, const Seagull& y) {
    VertexSet sx = x.vertices(), sy = y.vertices();
    if (sx != sy) return sx.lex_less(sy);
    return x.b < y.b;
  });
  return out;
}

namespace {

class Packer {
 public:
  Packer(std::vector<Seagull> gulls, int target) : gulls_(std::move(gulls)), target_(target) {}

  SeagullPacking run(VertexSet within) {
    search(within);
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  bool done() const { return static_cast<int>(best_.size()) >= target_; }

  void search(VertexSet left) {
    if (current_.size() > best_.size()) best_ = current_;
    if (done()) return;
    VertexSet coverable;
    std::vector<const Seagull*> live;
    for (const auto& s : gulls_)
      if (s.vertices().subset_of(left)) {
        live.push_back(&s);
        coverable |= s.vertices();
      }
    if (current_.size() + coverable.size() / 3 <= best_.size()) return;
    // Branch on the least coverable vertex: some seagull through it, or none.
    int v = coverable.front();
    for (const Seagull* s : live) {
      if (!s->vertices().contains(v)) continue;
      current_.push_back(*s);
      search(left - s->vertices());
      current_.pop_back();
      if (done()) return;
    }
    search(left - VertexSet::single(v));
  }

  std::vector<Seagull> gulls_;
  int target_;
  std::vector<Seagull> current_, best_;
};

}  // namespace

SeagullPacking pack_seagulls(const Graph& g, VertexSet within, int target) {
  return Packer(all_seagulls(g), target).run(within & g.vertices());
}

SeagullPacking max_disjoint_seagulls(const Graph& g) {
  return pack_seagulls(g, g.vertices(), g.order() / 3 + 1);
}

CliqueCapacity clique_capacity(const Graph& g, VertexSet clique) {
  CliqueCapacity c;
  c.clique = clique;
  for (int v : g.vertices() - clique) {
    int hits = (g.neighbors(v) & clique).size();
    if (hits > 0 && hits < clique.size()) c.boundary.insert(v);
  }
  c.twice_capacity = g.order() + c.boundary.size() - clique.size();
  return c;
}

namespace {

// Cliques in lexicographic order. Boundary vertices stay on the boundary as
// the clique grows, and the clique can gain at most |cand| vertices, so
// n + |K*| - |K| - |cand| bounds every extension from below.
class CapacitySearch {
 public:
  explicit CapacitySearch(const Graph& g) : g_(g) {}

  CliqueCapacity run() {
    for (int v : g_.vertices()) grow(VertexSet::single(v), g_.neighbors(v) - VertexSet::range(v + 1));
    return best_;
  }

 private:
  void grow(VertexSet k, VertexSet cand) {
    CliqueCapacity c = clique_capacity(g_, k);
    if (!have_ || c.twice_capacity < best_.twice_capacity) {
      best_ = c;
      have_ = true;
    }
    if (g_.order() + c.boundary.size() - k.size() - cand.size() >= best_.twice_capacity) return;
    for (int w : cand) {
      VertexSet k2 = k;
      k2.insert(w);
      grow(k2, cand & (g_.neighbors(w) - VertexSet::range(w + 1)));
    }
  }

  const Graph& g_;
  CliqueCapacity best_;
  bool have_ = false;
};

}  // namespace

CliqueCapacity min_clique_capacity(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("clique capacity needs a non-empty graph");
  if (g.order() > kMaxCapacityOrder)
    throw SearchLimitError("clique capacity enumeration is limited to " +
                           std::to_string(kMaxCapacityOrder) + " vertices");
  return CapacitySearch(g).run();
}

bool is_w5(const Graph& g) {
  static const Graph w5 = catalog("W_5");
  return g.order() == 6 && g.size() == 10 && isomorphic(g, w5);
}

FeasibilityReport feasibility(const Graph& g, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  FeasibilityReport r;
  r.ell = ell;
  r.alpha_le_2 = alpha_le_2(g);
  r.cond_size = g.order() >= 3 * ell;
  r.connectivity = vertex_connectivity(g);
  r.cond_conn = ell == 0 || r.connectivity >= ell;
  if (g.order() > 0) {
    r.min_capacity = min_clique_capacity(g);
    r.cond_capacity = r.min_capacity->twice_capacity >= 2 * ell;
  } else {
    r.cond_capacity = true;
  }
  r.anti_matching = max_matching(complement(g));
  r.cond_antimatching = r.anti_matching.size >= ell;
  r.exception = ell == 2 && is_w5(g);
  return r;
}

CrosscheckVerdict crosscheck_characterization(const Graph& g, int ell) {
  if (!alpha_le_2(g)) throw PreconditionError("seagull characterization needs alpha <= 2");
  if (ell == 2 && is_w5(g)) throw PreconditionError("(W_5, 2) is the excluded pair");
  CrosscheckVerdict v;
  v.conditions = feasibility(g, ell).all();
  auto pack = max_disjoint_seagulls(g);
  v.max_packing = pack.size;
  v.packing = pack.size >= ell;
  return v;
}

}  // namespace dhc
