#include "dhc/construct.hpp"

#include <algorithm>

#include "dhc/invariants.hpp"

namespace dhc {

namespace {

MinorCertificate checked(const Graph& g, MinorCertificate cert, const char* who) {
  auto v = verify_dominating(g, cert);
  if (!v) throw std::logic_error(std::string(who) + " built an invalid certificate: " + v.diagnostic);
  return cert;
}

MinorCertificate singletons(VertexSet s) {
  MinorCertificate c;
  for (int v : s) c.branch_sets.push_back(VertexSet::single(v));
  return c;
}

MinorCertificate prepend(std::vector<VertexSet> head, const MinorCertificate& tail) {
  MinorCertificate c{std::move(head)};
  c.branch_sets.insert(c.branch_sets.end(), tail.branch_sets.begin(), tail.branch_sets.end());
  return c;
}

}  // namespace

bool BuiltCertificate::used_exact_solver() const { return provenance.find("exact") != std::string::npos; }

std::optional<DominatingEdge> find_dominating_edge(const Graph& g) {
  for (auto [x, y] : g.edges())
    if ((g.neighbors(x) | g.neighbors(y) | VertexSet{x, y}) == g.vertices()) return DominatingEdge{x, y};
  return std::nullopt;
}

MinorCertificate compose_join(const Graph& g1, const MinorCertificate& a, const Graph& g2,
                              const MinorCertificate& b) {
  if (auto v = verify_dominating(g1, a); !v)
    throw PreconditionError("first certificate is invalid: " + v.diagnostic);
  if (auto v = verify_dominating(g2, b); !v)
    throw PreconditionError("second certificate is invalid: " + v.diagnostic);
  MinorCertificate out = a;
  for (auto s : b.branch_sets) out.branch_sets.push_back(VertexSet(s.bits() << g1.order()));
  return checked(join(g1, g2), out, "compose_join");
}

MinorCertificate assemble_clique_plus_seagulls(const Graph& g, VertexSet clique,
                                               const std::vector<Seagull>& pack) {
  if (!alpha_le_2(g)) throw PreconditionError("assembly needs alpha <= 2");
  if (!clique.subset_of(g.vertices()) || !g.is_clique(clique))
    throw PreconditionError("A is not a clique of the graph");
  VertexSet used = clique;
  for (std::size_t i = 0; i < pack.size(); ++i) {
    const auto& s = pack[i];
    if (!is_seagull(g, s))
      throw PreconditionError("entry " + std::to_string(i) + " is not a seagull");
    if (s.vertices().intersects(used))
      throw PreconditionError("seagull " + std::to_string(i) + " meets A or an earlier seagull");
    used |= s.vertices();
  }
  MinorCertificate c;
  for (const auto& s : pack) c.branch_sets.push_back(s.vertices());
  for (int v : clique) c.branch_sets.push_back(VertexSet::single(v));
  return checked(g, c, "assemble_clique_plus_seagulls");
}

BuiltCertificate exact_base(const Graph& g) {
  return {hd(g).certificate, "exact"};
}

namespace {

BuiltCertificate omega_steps(const Graph& g) {
  const int n = g.order();
  const int target = ceil_half(n);
  auto omega = clique_number(g);
  if (omega.value >= target) return {singletons(omega.witness), "clique"};

  // Even order: drop a vertex outside a maximum clique; the hypothesis survives.
  if (n % 2 == 0) {
    int x = (g.vertices() - omega.witness).front();
    VertexSet keep = g.vertices() - VertexSet::single(x);
    auto sub = omega_steps(g.induced(keep));
    return {lift(sub.certificate, members(keep)), "remove-vertex/" + sub.provenance};
  }

  const int ell = target - omega.value;
  const VertexSet a = omega.witness;
  const VertexSet rest = g.vertices() - a;
  auto parts = components(g.induced(rest));

  if (parts.size() == 2) {
    auto index = members(rest);
    VertexSet b1, b2;
    for (int v : parts[0]) b1.insert(index[v]);
    for (int v : parts[1]) b2.insert(index[v]);
    VertexSet a1;
    for (int v : a)
      if (b1.subset_of(g.neighbors(v))) a1.insert(v);
    VertexSet c1 = a1 | b1, c2 = (a - a1) | b2;
    VertexSet big = c1.size() >= c2.size() ? c1 : c2;
    if (g.is_clique(c1) && g.is_clique(c2) && big.size() >= target)
      return {singletons(big), "two-clique-partition"};
  }

  if (parts.size() == 1) {
    bool all_attached = std::all_of(a.begin(), a.end(), [&](int v) { return g.neighbors(v).intersects(rest); });
    if (ell == 1 && all_attached) {
      MinorCertificate c;
      c.branch_sets.push_back(rest);
      for (int v : a) c.branch_sets.push_back(VertexSet::single(v));
      return {c, "clique+contraction"};
    }
    auto pack = pack_seagulls(g, rest, ell);
    if (pack.size >= ell) return {assemble_clique_plus_seagulls(g, a, pack.seagulls), "clique+seagulls"};
  }

  auto s = has_dominating_kt(g, target);
  if (s.status != SearchStatus::found)
    throw std::logic_error("no dominating K_" + std::to_string(target) + " minor in a graph meeting the omega hypotheses");
  return {*s.certificate, "exact"};
}

}  // namespace

BuiltCertificate build_omega_certificate(const Graph& g) {
  if (!alpha_le_2(g)) throw PreconditionError("omega builder needs alpha <= 2");
  const int n = g.order();
  const int omega = clique_number(g).value;
  if (2 * omega < ceil_half(n) + 1)
    throw PreconditionError("omega builder needs 2*omega >= ceil(n/2) + 1; have omega = " +
                            std::to_string(omega) + ", n = " + std::to_string(n));
  auto built = omega_steps(g);
  built.certificate = checked(g, built.certificate, "build_omega_certificate");
  return built;
}

namespace {

MinorCertificate mindeg_steps(const Graph& g, std::string& trail) {
  const int n = g.order();
  if (n == 0) return {};
  if (g.is_clique(g.vertices())) {
    trail += "clique";
    return singletons(g.vertices());
  }

  auto parts = components(g);
  if (parts.size() > 1) {
    MinorCertificate best;
    std::string best_trail;
    for (auto p : parts) {
      std::string sub_trail;
      auto sub = lift(mindeg_steps(g.induced(p), sub_trail), members(p));
      if (sub.order() > best.order()) {
        best = sub;
        best_trail = sub_trail;
      }
    }
    trail += "component/" + best_trail;
    return best;
  }

  // The complement has maximum degree <= 2: a union of paths and cycles.
  const Graph co = complement(g);

  // A triangle of the complement is a stable set complete to the rest.
  for (int u = 0; u < n; ++u) {
    VertexSet nb = co.neighbors(u);
    if (nb.size() == 2 && co.has_edge(nb.front(), nb.back()) && u < nb.front()) {
      VertexSet s = nb | VertexSet::single(u);
      VertexSet keep = g.vertices() - s;
      trail += "stable-triple/";
      auto sub = lift(mindeg_steps(g.induced(keep), trail), members(keep));
      return prepend({VertexSet::single(u)}, sub);
    }
  }

  for (int x = 0; x < n; ++x)
    if (g.degree(x) >= n - 2) {
      VertexSet nb = g.neighbors(x);
      trail += "high-degree/";
      auto sub = lift(mindeg_steps(g.induced(nb), trail), members(nb));
      return prepend({VertexSet::single(x)}, sub);
    }

  // Complement is 2-regular. Walk each cycle from its least vertex.
  VertexSet left = g.vertices();
  while (!left.empty()) {
    int v1 = left.front();
    std::vector<int> cyc{v1};
    int prev = v1, cur = co.neighbors(v1).front();
    while (cur != v1) {
      cyc.push_back(cur);
      VertexSet nxt = co.neighbors(cur) - VertexSet::single(prev);
      prev = cur;
      cur = nxt.front();
    }
    VertexSet c = VertexSet::from(cyc);
    left -= c;
    if (cyc.size() % 2 == 0) continue;
    // Odd complement cycle v1..v(2k+1): {v1, v3, v(2k+1)} then v2, v4, ..., v(2k).
    const int len = static_cast<int>(cyc.size());
    std::vector<VertexSet> head{VertexSet{cyc[0], cyc[2], cyc[len - 1]}};
    for (int i = 1; i < len - 1; i += 2) head.push_back(VertexSet::single(cyc[i]));
    VertexSet keep = g.vertices() - c;
    trail += "odd-cycle/";
    auto sub = lift(mindeg_steps(g.induced(keep), trail), members(keep));
    return prepend(std::move(head), sub);
  }

  // Every complement cycle is even, so a side of the bipartition is a clique
  // of order n/2 = chi.
  trail += "bipartite-complement";
  return singletons(clique_number(g).witness);
}

}  // namespace

BuiltCertificate build_mindeg_certificate(const Graph& g) {
  if (g.order() > 0 && g.min_degree() < g.order() - 3)
    throw PreconditionError("mindeg builder needs minimum degree >= n - 3");
  std::string trail;
  auto cert = mindeg_steps(g, trail);
  return {checked(g, cert, "build_mindeg_certificate"), "mindeg:" + trail};
}

BuiltCertificate peel_dominating_edges(const Graph& g, const BaseSolver& base) {
  std::vector<VertexSet> peeled;
  VertexSet rest = g.vertices();
  std::vector<std::pair<std::vector<VertexSet>, VertexSet>> chain{{peeled, rest}};
  for (;;) {
    auto index = members(rest);
    auto e = find_dominating_edge(g.induced(rest));
    if (!e) break;
    VertexSet edge{index[e->x], index[e->y]};
    peeled.push_back(edge);
    rest -= edge;
    chain.emplace_back(peeled, rest);
  }
  BuiltCertificate best;
  bool have = false;
  for (const auto& [prefix, remainder] : chain) {
    BuiltCertificate sub = remainder.empty() ? BuiltCertificate{{}, "empty"} : base(g.induced(remainder));
    auto cert = prepend(prefix, lift(sub.certificate, members(remainder)));
    if (!have || cert.order() > best.certificate.order()) {
      best = {cert, "peel(" + std::to_string(prefix.size()) + ")/" + sub.provenance};
      have = true;
    }
  }
  best.certificate = checked(g, best.certificate, "peel_dominating_edges");
  return best;
}

std::optional<std::vector<int>> find_induced_c5_through(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex out of range");
  const VertexSet nx = g.neighbors(x) | VertexSet::single(x);
  for (int a : g.neighbors(x)) {
    const VertexSet na = g.neighbors(a) | VertexSet::single(a);
    for (int b : g.neighbors(a) - nx) {
      const VertexSet nb = g.neighbors(b) | VertexSet::single(b);
      for (int c : g.neighbors(b) - nx - na)
        for (int d : (g.neighbors(c) & g.neighbors(x)) - na - nb)
          if (d > a) return std::vector<int>{x, a, b, c, d};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced_c4_through(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex out of range");
  const VertexSet nx = g.neighbors(x) | VertexSet::single(x);
  for (int a : g.neighbors(x)) {
    const VertexSet na = g.neighbors(a) | VertexSet::single(a);
    for (int b : g.neighbors(a) - nx)
      for (int c : (g.neighbors(b) & g.neighbors(x)) - na)
        if (c > a) return std::vector<int>{x, a, b, c};
  }
  return std::nullopt;
}

bool c5_guarantee_applies(const Graph& g, int x) {
  const int n = g.order();
  return alpha_le_2(g) && clique_number(g).value < ceil_half(n) && !find_dominating_edge(g) &&
         g.degree(x) < n - 1;
}

bool c4_guarantee_applies(const Graph& g, int x) {
  const int n = g.order();
  return alpha_le_2(g) && 2 * clique_number(g).value <= ceil_half(n) && g.degree(x) < n - 1;
}

}  // namespace dhc
