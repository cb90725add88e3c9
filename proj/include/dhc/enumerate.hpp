#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

inline constexpr int kMaxGeneratorOrder = 12;

// Called once per isomorphism class, with the class's canonical graph.
// Returning false stops the generation early.
using GraphVisitor = std::function<bool(const Graph&)>;

// Canonical augmentation: a child is the parent plus one new vertex, and is
// kept only when the vertex a canonical rule would delete is equivalent to
// the new one. Deterministic order. 1 <= n <= kMaxGeneratorOrder.
void for_each_triangle_free(int n, const GraphVisitor& visit);
void for_each_graph(int n, const GraphVisitor& visit);

std::vector<Graph> triangle_free_graphs(int n);
std::vector<Graph> all_graphs(int n);

// Every alpha <= 2 graph on n vertices once up to isomorphism, as
// complements of the triangle-free classes (same order).
void for_each_alpha2(int n, const GraphVisitor& visit);
std::vector<Graph> enumerate_alpha2(int n);

// Random alpha <= 2 graph: complement of a random triangle-free graph built
// by offering the pairs in random order, each accepted with probability
// `density` unless it closes a triangle.
Graph random_alpha2(int n, std::uint64_t seed, double density = 0.5);

class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IngestOptions {
  bool require_alpha2 = false;
  // Records are complements (e.g. output of a triangle-free generator).
  bool complement = false;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::size_t rejected = 0;  // records dropped by the alpha filter
};

// One graph6 record per line; blank lines are skipped.
IngestResult ingest(const std::string& path, IngestOptions options = {});
IngestResult ingest_text(const std::string& text, IngestOptions options = {});

}  // namespace dhc
