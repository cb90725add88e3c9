#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhc/vertex_set.hpp"

namespace dhc {

using Edge = std::pair<int, int>;

class Graph;

// Mutable staging area; a Graph is immutable once built.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  int order() const { return n_; }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  GraphBuilder& label(std::string name);
  Graph build() const;

 private:
  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::string label_;
};

// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  Graph() = default;
  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const;  // edge count
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  int min_degree() const;
  int max_degree() const;
  // Union of the neighborhoods of s, including s itself when s has internal edges.
  VertexSet neighbors_of(VertexSet s) const;
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string name) const;

  // Subgraph induced by s, vertices renumbered by increasing original index.
  Graph induced(VertexSet s) const;
  Graph without(VertexSet s) const { return induced(vertices() - s); }
  // Relabel so that old vertex v becomes perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  bool is_connected(VertexSet s) const;
  // Vertices of s reachable from `start` inside s.
  VertexSet reach(int start, VertexSet s) const;

  // Label is metadata and does not take part in equality.
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::string label_;
};

// Map induced-subgraph indices back to host indices.
std::vector<int> members(VertexSet s);

Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(int k, const Graph& g);
Graph subdivide_once(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
int vertex_connectivity(const Graph& g);
bool is_triangle_free(const Graph& g);

class GraphSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dhc
