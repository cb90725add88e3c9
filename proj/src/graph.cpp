#include "dhc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dhc {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphSizeError("graph order " + std::to_string(n) + " outside [0, 64]");
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n) + ")");
}

}  // namespace

GraphBuilder::GraphBuilder(int n) : n_(n) { check_order(n); }

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
  return *this;
}

GraphBuilder& GraphBuilder::label(std::string name) {
  label_ = std::move(name);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  g.label_ = label_;
  return g;
}

Graph Graph::empty(int n) { return GraphBuilder(n).build(); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::neighbors_of(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= neighbors(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_label(std::string name) const {
  Graph g = *this;
  g.label_ = std::move(name);
  return g;
}

std::vector<int> members(VertexSet s) { return s.to_vector(); }

Graph Graph::induced(VertexSet s) const {
  s &= vertices();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (int v : s) index[v] = k++;
  GraphBuilder b(k);
  for (int v : s)
    for (int w : neighbors(v) & s)
      if (v < w) b.add_edge(index[v], index[w]);
  return b.build();
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(perm[u], perm[v]);
  b.label(label_);
  return b.build();
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(neighbors(v))) return false;
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s)
    if (neighbors(v).intersects(s)) return false;
  return true;
}

VertexSet Graph::reach(int start, VertexSet s) const {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (neighbors_of(frontier) & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected(VertexSet s) const {
  if (s.empty()) return true;
  return reach(s.front(), s) == s;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool cross) {
  int n = a.order() + b.order();
  if (n > kMaxVertices)
    throw GraphSizeError("composition has " + std::to_string(n) + " vertices, limit is 64");
  GraphBuilder out(n);
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  if (cross)
    for (int u = 0; u < a.order(); ++u)
      for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out.build();
}

}  // namespace

Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }
Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }

Graph copies(int k, const Graph& g) {
  if (k < 0) throw std::invalid_argument("negative copy count");
  if (static_cast<long>(k) * g.order() > kMaxVertices)
    throw GraphSizeError("copies exceed 64 vertices");
  Graph out = Graph::empty(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph subdivide_once(const Graph& g) {
  auto es = g.edges();
  int n = g.order() + static_cast<int>(es.size());
  if (n > kMaxVertices)
    throw GraphSizeError("subdivision has " + std::to_string(n) + " vertices, limit is 64");
  GraphBuilder b(n);
  int mid = g.order();
  for (auto [u, v] : es) {
    b.add_edge(u, mid);
    b.add_edge(mid, v);
    ++mid;
  }
  return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = g.reach(left.front(), left);
    out.push_back(c);
    left -= c;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.is_connected(g.vertices()); }

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u).intersects(g.neighbors(v))) return false;
  return true;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, capped at `cap`.
// Unit-capacity flow on the split graph (v_in -> v_out), found by BFS augmentation.
int local_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.order();
  const int nodes = 2 * n;
  // node 2v = v_in, 2v+1 = v_out
  std::vector<std::vector<int>> cap_m(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) cap_m[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    cap_m[2 * u + 1][2 * v] = n;
    cap_m[2 * v + 1][2 * u] = n;
  }
  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[src] = src;
    std::deque<int> queue{src};
    while (!queue.empty() && parent[dst] < 0) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y)
        if (parent[y] < 0 && cap_m[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (parent[dst] < 0) break;
    for (int y = dst; y != src; y = parent[y]) {
      --cap_m[parent[y]][y];
      ++cap_m[y][parent[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  bool complete = true;
  int best = n - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) {
        complete = false;
        best = std::min(best, local_connectivity(g, u, v, best));
      }
  return complete ? n - 1 : best;
}

}  // namespace dhc
