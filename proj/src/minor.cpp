#include "dhc/minor.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <unordered_map>

#include "dhc/canonical.hpp"
#include "dhc/invariants.hpp"

namespace dhc {

VertexSet MinorCertificate::support() const {
  VertexSet s;
  for (auto b : branch_sets) s |= b;
  return s;
}

Verification verify_dominating(const Graph& g, const MinorCertificate& cert) {
  using C = Verification::Clause;
  const VertexSet all = g.vertices();
  for (int i = 0; i < cert.order(); ++i)
    if (!cert.branch_sets[i].subset_of(all))
      throw std::out_of_range("branch set T_" + std::to_string(i + 1) + " names vertex " +
                              std::to_string((cert.branch_sets[i] - all).front()) +
                              " outside a graph on " + std::to_string(g.order()) + " vertices");

  auto fail = [](C clause, int i, int j, int v, std::string msg) {
    Verification r;
    r.clause = clause;
    r.i = i;
    r.j = j;
    r.vertex = v;
    r.diagnostic = std::move(msg);
    return r;
  };
  auto name = [](int i) { return "T_" + std::to_string(i + 1); };

  VertexSet used;
  for (int i = 0; i < cert.order(); ++i) {
    VertexSet b = cert.branch_sets[i];
    if (b.empty()) return fail(C::empty, i, -1, -1, name(i) + " is empty");
    if (b.intersects(used))
      return fail(C::overlap, i, -1, (b & used).front(),
                  "vertex " + std::to_string((b & used).front()) + " of " + name(i) +
                      " already used by an earlier branch set");
    if (!g.is_connected(b)) return fail(C::disconnected, i, -1, -1, name(i) + " is not connected");
    used |= b;
  }
  for (int j = 1; j < cert.order(); ++j)
    for (int v : cert.branch_sets[j])
      for (int i = 0; i < j; ++i)
        if (!g.neighbors(v).intersects(cert.branch_sets[i]))
          return fail(C::undominated, i, j, v,
                      "vertex " + std::to_string(v) + " undominated by " + name(i) + " (in " + name(j) + ")");
  return {};
}

MinorCertificate lift(const MinorCertificate& cert, const std::vector<int>& host_index) {
  MinorCertificate out;
  for (auto b : cert.branch_sets) {
    VertexSet h;
    for (int v : b) h.insert(host_index.at(v));
    out.branch_sets.push_back(h);
  }
  return out;
}

int trivial_minor_upper_bound(const Graph& g) {
  int m = g.size(), t = 0;
  while (t + 1 <= g.order() && (t + 1) * t / 2 <= m) ++t;
  return t;
}

std::vector<int> find_cycle(const Graph& g, VertexSet s) {
  std::array<int, kMaxVertices> parent{}, depth{};
  VertexSet seen;
  std::vector<int> found;
  std::function<bool(int, int)> dfs = [&](int v, int from) {
    seen.insert(v);
    for (int w : g.neighbors(v) & s) {
      if (w == from) continue;
      if (seen.contains(w)) {
        if (depth[w] < depth[v]) {
          for (int x = v; x != w; x = parent[x]) found.push_back(x);
          found.push_back(w);
          std::reverse(found.begin(), found.end());
          return true;
        }
        continue;
      }
      parent[w] = v;
      depth[w] = depth[v] + 1;
      if (dfs(w, v)) return true;
    }
    return false;
  };
  for (int root : s) {
    if (seen.contains(root)) continue;
    depth[root] = 0;
    parent[root] = -1;
    if (dfs(root, -1)) return found;
  }
  return {};
}

namespace {

int induced_edges(const Graph& g, VertexSet s) {
  int twice = 0;
  for (int v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

// Each connected subset of `within` with at most `max_size` vertices, once.
// A set is grown from its least vertex; `banned` holds vertices already
// decided against on the current branch.
template <class Fn>
void for_each_connected(const Graph& g, VertexSet within, int max_size, Fn&& fn) {
  std::function<void(VertexSet, VertexSet, VertexSet)> grow = [&](VertexSet t, VertexSet ext,
                                                                  VertexSet banned) {
    fn(t);
    if (t.size() == max_size) return;
    while (!ext.empty()) {
      int w = ext.front();
      ext.erase(w);
      VertexSet t2 = t;
      t2.insert(w);
      VertexSet ext2 = (ext | (g.neighbors(w) & within)) - t2 - banned;
      grow(t2, ext2, banned);
      banned.insert(w);
    }
  };
  for (int v : within) {
    VertexSet lower = within & VertexSet::range(v + 1);
    grow(VertexSet::single(v), (g.neighbors(v) & within) - lower, lower);
  }
}

}  // namespace

void DominatingMinorSolver::charge() {
  if (++nodes_ > budget_) throw Exhausted{};
}

bool DominatingMinorSolver::solve_small(VertexSet avail, int k, std::vector<VertexSet>& seq) {
  const Graph& g = *g_;
  if (k == 1) {
    seq.push_back(VertexSet::single(avail.front()));
    return true;
  }
  if (k == 2) {
    for (int u : avail) {
      VertexSet nb = g.neighbors(u) & avail;
      if (!nb.empty()) {
        seq.push_back(VertexSet::single(u));
        seq.push_back(VertexSet::single(nb.front()));
        return true;
      }
    }
    return false;
  }
  // k == 3 without a triangle: a cycle c0..c(m-1) gives ({c0..c(m-3)}, {c(m-2)}, {c(m-1)}).
  auto cyc = find_cycle(g, avail);
  if (cyc.empty()) return false;
  VertexSet head;
  for (std::size_t i = 0; i + 2 < cyc.size(); ++i) head.insert(cyc[i]);
  seq.push_back(head);
  seq.push_back(VertexSet::single(cyc[cyc.size() - 2]));
  seq.push_back(VertexSet::single(cyc.back()));
  return true;
}

bool DominatingMinorSolver::solve(VertexSet avail, int k, std::vector<VertexSet>& seq) {
  const Graph& g = *g_;
  if (k == 0) return true;
  if (avail.size() < k) return false;
  if (k == 1) return solve_small(avail, k, seq);
  if (induced_edges(g, avail) < k * (k - 1) / 2) return false;
  if (k == 2) return solve_small(avail, k, seq);
  charge();
  const std::pair<std::uint64_t, int> key{avail.bits(), k};
  if (failed_.contains(key)) return false;

  auto clique = max_clique(g, avail);
  if (clique.value >= k) {
    int taken = 0;
    for (int v : clique.witness) {
      if (taken++ == k) break;
      seq.push_back(VertexSet::single(v));
    }
    return true;
  }
  if (k == 3) {
    bool ok = solve_small(avail, k, seq);
    if (!ok) failed_.insert(key);
    return ok;
  }

  struct Candidate {
    VertexSet first, rest;
  };
  std::vector<Candidate> cands;
  std::unordered_map<std::uint64_t, std::size_t> by_rest;
  for_each_connected(g, avail, avail.size() - (k - 1), [&](VertexSet t) {
    charge();
    VertexSet rest = (g.neighbors_of(t) & avail) - t;
    if (rest.size() < k - 1) return;
    auto [it, fresh] = by_rest.try_emplace(rest.bits(), cands.size());
    if (fresh) {
      cands.push_back({t, rest});
    } else {
      Candidate& c = cands[it->second];
      if (t.size() < c.first.size() || (t.size() == c.first.size() && t.lex_less(c.first))) c.first = t;
    }
  });
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.rest.size() != b.rest.size()) return a.rest.size() > b.rest.size();
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first.lex_less(b.first);
  });

  std::vector<VertexSet> dead;
  for (const auto& c : cands) {
    if (std::any_of(dead.begin(), dead.end(), [&](VertexSet d) { return c.rest.subset_of(d); })) continue;
    seq.push_back(c.first);
    if (solve(c.rest, k - 1, seq)) return true;
    seq.pop_back();
    dead.push_back(c.rest);
  }
  failed_.insert(key);
  return false;
}

KtSearch DominatingMinorSolver::has_dominating_kt(const Graph& g, int t) {
  if (t <= 0) throw std::invalid_argument("t must be positive, got " + std::to_string(t));
  KtSearch out;
  const std::uint64_t before = nodes_;
  std::string key;
  if (g.order() <= 32) {
    key = canonical_key(g) + "/" + std::to_string(t);
    if (negative_.contains(key)) return out;
  }
  g_ = &g;
  failed_.clear();
  std::vector<VertexSet> seq;
  try {
    if (solve(g.vertices(), t, seq)) {
      out.status = SearchStatus::found;
      out.certificate = MinorCertificate{seq};
    } else {
      out.status = SearchStatus::none;
      if (!key.empty()) negative_.insert(key);
    }
  } catch (const Exhausted&) {
    out.status = SearchStatus::budget_exhausted;
    nodes_ = budget_;
  }
  out.nodes = nodes_ - before;
  g_ = nullptr;
  if (out.certificate) {
    auto v = verify_dominating(g, *out.certificate);
    if (!v) throw std::logic_error("solver produced an invalid certificate: " + v.diagnostic);
  }
  return out;
}

HdResult DominatingMinorSolver::hd(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  const std::uint64_t before = nodes_;
  HdResult r;
  if (g.order() == 0) return r;
  auto clique = clique_number(g);
  for (int v : clique.witness) r.certificate.branch_sets.push_back(VertexSet::single(v));
  r.value = clique.value;
  r.upper = trivial_minor_upper_bound(g);
  for (int t = r.value + 1; t <= r.upper; ++t) {
    auto s = has_dominating_kt(g, t);
    if (s.status == SearchStatus::found) {
      r.value = t;
      r.certificate = *s.certificate;
    } else if (s.status == SearchStatus::none) {
      r.upper = t - 1;
    } else {
      r.exact = false;
      break;
    }
  }
  if (r.exact) r.upper = r.value;
  r.nodes = nodes_ - before;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

KtSearch has_dominating_kt(const Graph& g, int t, std::uint64_t budget) {
  return DominatingMinorSolver(budget).has_dominating_kt(g, t);
}

HdResult hd(const Graph& g, std::uint64_t budget) { return DominatingMinorSolver(budget).hd(g); }

namespace {

// Ordinary K_t minors, t >= 4, in a connected graph: a model can always be
// grown into a partition of V into t connected, pairwise adjacent parts.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int t) : g_(g), t_(t) {}

  bool run() { return place(g_.vertices()); }

 private:
  // Parts are chosen in order of their least vertex, so the least unplaced
  // vertex always opens the next part.
  bool place(VertexSet left) {
    const int k = static_cast<int>(parts_.size());
    if (k == t_) return left.empty();
    if (left.size() < t_ - k) return false;
    if (k == t_ - 1) {
      if (!g_.is_connected(left)) return false;
      for (auto p : parts_)
        if (!g_.neighbors_of(p).intersects(left)) return false;
      return true;
    }
    bool ok = false;
    for_each_connected_with(left.front(), left, [&](VertexSet part) {
      if (ok || left.size() - part.size() < t_ - k - 1) return;
      for (auto p : parts_)
        if (!g_.neighbors_of(p).intersects(part)) return;
      parts_.push_back(part);
      ok = place(left - part);
      parts_.pop_back();
    });
    return ok;
  }

  template <class Fn>
  void for_each_connected_with(int anchor, VertexSet within, Fn&& fn) {
    std::function<void(VertexSet, VertexSet, VertexSet)> grow = [&](VertexSet t, VertexSet ext,
                                                                    VertexSet banned) {
      fn(t);
      while (!ext.empty()) {
        int w = ext.front();
        ext.erase(w);
        VertexSet t2 = t;
        t2.insert(w);
        grow(t2, (ext | (g_.neighbors(w) & within)) - t2 - banned, banned);
        banned.insert(w);
      }
    };
    grow(VertexSet::single(anchor), g_.neighbors(anchor) & within, VertexSet{});
  }

  const Graph& g_;
  int t_;
  std::vector<VertexSet> parts_;
};

// Deletes vertices of degree <= 1 and suppresses degree-2 vertices; neither
// changes whether a K_t minor exists for t >= 4.
Graph reduce_for_minor(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> adj{};
  const int n = g.order();
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).bits();
  VertexSet alive = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : alive) {
      VertexSet nb = VertexSet(adj[v]) & alive;
      if (nb.size() <= 1) {
        alive.erase(v);
        changed = true;
      } else if (nb.size() == 2) {
        int a = nb.front(), b = nb.back();
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
        alive.erase(v);
        changed = true;
      }
    }
  }
  GraphBuilder out(n);
  for (int u : alive)
    for (int w : VertexSet(adj[u]) & alive)
      if (u < w) out.add_edge(u, w);
  return out.build().induced(alive);
}

}  // namespace

bool has_kt_minor(const Graph& g, int t) {
  if (t <= 0) throw std::invalid_argument("t must be positive, got " + std::to_string(t));
  if (t == 1) return g.order() >= 1;
  if (t == 2) return g.size() >= 1;
  if (t == 3) return !find_cycle(g, g.vertices()).empty();
  Graph r = reduce_for_minor(g);
  for (auto comp : components(r)) {
    Graph c = r.induced(comp);
    if (c.order() < t || c.size() < t * (t - 1) / 2) continue;
    if (clique_number(c).value >= t) return true;
    if (PartitionSearch(c, t).run()) return true;
  }
  return false;
}

}  // namespace dhc
