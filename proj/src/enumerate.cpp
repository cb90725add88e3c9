#include "dhc/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "dhc/canonical.hpp"
#include "dhc/graph6.hpp"
#include "dhc/invariants.hpp"

namespace dhc {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxGeneratorOrder)
    throw std::invalid_argument("generator order must be in 1.." + std::to_string(kMaxGeneratorOrder) + ", got " +
                                std::to_string(n));
}

// Calls f on every subset of `cand` that is independent in g (or every subset).
template <class F>
void for_each_extension_set(const Graph& g, bool independent, VertexSet chosen, VertexSet cand, F& f) {
  f(chosen);
  for (int v : cand) {
    VertexSet later(cand.bits() & ~((std::uint64_t{2} << v) - 1));
    if (independent) later -= g.neighbors(v);
    for_each_extension_set(g, independent, chosen | VertexSet::single(v), later, f);
  }
}

class Augmenter {
 public:
  explicit Augmenter(bool triangle_free) : triangle_free_(triangle_free) {}

  // Children of canonical parent p, in a fixed order; returns false if the
  // visitor asked to stop.
  bool children(const Graph& p, const GraphVisitor& visit) const {
    const int m = p.order();
    std::vector<int> deg(m);
    for (int v = 0; v < m; ++v) deg[v] = p.degree(v);
    std::unordered_set<std::string> seen;
    bool go = true;
    auto try_set = [&](VertexSet s) {
      if (!go) return;
      const int k = s.size();
      for (int v = 0; v < m; ++v)
        if (deg[v] + (s.contains(v) ? 1 : 0) > k) return;
      GraphBuilder b(m + 1);
      for (auto [u, v] : p.edges()) b.add_edge(u, v);
      for (int v : s) b.add_edge(v, m);
      Graph child = b.build();
      auto cf = canonical_form(child);
      int star = -1;
      for (int v = 0; v <= m; ++v)
        if (child.degree(v) == k && (star < 0 || cf.labeling[v] > cf.labeling[star])) star = v;
      if (star != m && !(canonical_form(child.without(VertexSet::single(star))).graph == p)) return;
      if (!seen.insert(to_graph6(cf.graph)).second) return;
      go = visit(cf.graph);
    };
    for_each_extension_set(p, triangle_free_, VertexSet{}, p.vertices(), try_set);
    return go;
  }

  void run(int n, const GraphVisitor& visit) const {
    check_order(n);
    std::vector<Graph> level{Graph::empty(1)};
    for (int m = 1; m < n; ++m) {
      std::vector<Graph> next;
      const bool last = m + 1 == n;
      for (const auto& p : level) {
        bool go = children(p, [&](const Graph& c) {
          if (last) return visit(c);
          next.push_back(c);
          return true;
        });
        if (!go) return;
      }
      if (last) return;
      level = std::move(next);
    }
    for (const auto& g : level)
      if (!visit(g)) return;
  }

 private:
  bool triangle_free_;
};

std::vector<Graph> collect(void (*gen)(int, const GraphVisitor&), int n) {
  std::vector<Graph> out;
  gen(n, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace

void for_each_triangle_free(int n, const GraphVisitor& visit) { Augmenter(true).run(n, visit); }
void for_each_graph(int n, const GraphVisitor& visit) { Augmenter(false).run(n, visit); }

std::vector<Graph> triangle_free_graphs(int n) { return collect(for_each_triangle_free, n); }
std::vector<Graph> all_graphs(int n) { return collect(for_each_graph, n); }

void for_each_alpha2(int n, const GraphVisitor& visit) {
  for_each_triangle_free(n, [&](const Graph& g) { return visit(complement(g)); });
}

std::vector<Graph> enumerate_alpha2(int n) { return collect(for_each_alpha2, n); }

Graph random_alpha2(int n, std::uint64_t seed, double density) {
  if (n < 0 || n > kMaxVertices) throw GraphSizeError("order out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution take(density);
  std::vector<std::uint64_t> adj(n, 0);
  GraphBuilder b(n);
  for (auto [u, v] : pairs) {
    if ((adj[u] & adj[v]) != 0 || !take(rng)) continue;
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
    b.add_edge(u, v);
  }
  return complement(b.build());
}

IngestResult ingest_text(const std::string& text, IngestOptions options) {
  IngestResult out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const Graph6Error& e) {
      throw IngestError(number, e.what());
    }
    if (options.complement) g = complement(g);
    if (options.require_alpha2 && !alpha_le_2(g)) {
      ++out.rejected;
      continue;
    }
    out.graphs.push_back(std::move(g));
  }
  return out;
}

IngestResult ingest(const std::string& path, IngestOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_text(buf.str(), options);
}

}  // namespace dhc
