#include <doctest.h>

#include "dhc/catalog.hpp"
#include "dhc/graph.hpp"
#include "dhc/graph6.hpp"
#include "oracles.hpp"

using namespace dhc;

TEST_CASE("graph6 round trip and decoding") {
  CHECK(to_graph6(from_graph6("D?{")) == "D?{");
  Graph k3 = from_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(to_graph6(catalog("K_3")) == "Bw");
  CHECK(from_graph6(">>graph6<<Bw\n") == k3);
  for (const auto& name : manifest_names()) {
    Graph g = catalog(name);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  Graph big = Graph::empty(64);
  CHECK(from_graph6(to_graph6(big)).order() == 64);
}

TEST_CASE("graph6 errors carry kind and offset") {
  auto kind_of = [](const std::string& s) {
    try {
      from_graph6(s);
    } catch (const Graph6Error& e) {
      return std::pair{e.kind(), e.offset()};
    }
    FAIL("no error for " << s);
    return std::pair{Graph6Error::Kind::malformed_header, std::size_t{0}};
  };
  // n = 100 needs the long form: '~' then 18 bits.
  std::string hundred = "~";
  for (int shift : {12, 6, 0}) hundred += static_cast<char>(((100 >> shift) & 63) + 63);
  CHECK(kind_of(hundred).first == Graph6Error::Kind::out_of_range);
  CHECK(kind_of("").first == Graph6Error::Kind::malformed_header);
  CHECK(kind_of("Bw?").first == Graph6Error::Kind::trailing_garbage);
  CHECK(kind_of("Bw?").second == 2);
  CHECK(kind_of("D?").first == Graph6Error::Kind::truncated);
  CHECK(kind_of("B\x01").first == Graph6Error::Kind::bad_byte);
  CHECK(kind_of("Bx").first == Graph6Error::Kind::bad_byte);  // non-zero padding
}

TEST_CASE("complement") {
  CHECK(complement(catalog("K_4")) == Graph::empty(4));
  CHECK(oracle::isomorphic(complement(catalog("C_5")), catalog("C_5")));
  Graph p = catalog("petersen");
  CHECK(complement(complement(p)) == p);
}

TEST_CASE("composition") {
  Graph w4 = join(catalog("K_1"), catalog("C_4"));
  CHECK(w4.order() == 5);
  CHECK(w4.size() == 8);
  CHECK(w4 == catalog("W_4"));
  Graph s = subdivide_once(catalog("K_4"));
  CHECK(s.order() == 10);
  CHECK(s.size() == 12);
  CHECK(copies(2, catalog("K_2")) == catalog("2K_2"));
  Graph u = disjoint_union(catalog("C_5"), catalog("K_3"));
  CHECK(u.size() == 8);
  CHECK(join(catalog("C_5"), catalog("K_3")).size() == 5 + 3 + 15);
  CHECK_THROWS_AS(copies(9, catalog("K_8")), GraphSizeError);
}

TEST_CASE("catalog") {
  Graph w5 = catalog("W_5");
  CHECK(w5.order() == 6);
  CHECK(w5.size() == 10);
  CHECK(w5.degree(0) == 5);
  CHECK(w5.max_degree() == 5);
  Graph h = catalog("hammer");
  CHECK(h.order() == 5);
  CHECK(h.size() == 5);
  CHECK(catalog("K_7_less").size() == 19);
  CHECK(catalog("K_7_minus").size() == 20);
  CHECK(catalog("W_5_less").size() == 8);
  CHECK(catalog("kite").size() == 6);
  CHECK(catalog("fig2_a").order() == 8);
  CHECK(catalog("fig2_b").size() == catalog("fig2_a").size() + 1);
  CHECK(catalog("fig2_c").size() == catalog("fig2_a").size() + 2);
  CHECK(catalog("K_1+(K_1∪K_5)").order() == 7);
  CHECK(catalog("K_1+(K_1UK_5)") == catalog("K_1+(K_1∪K_5)"));
  CHECK(catalog("2K_1+P_4").size() == 0 + 3 + 8);
  CHECK_THROWS_AS(catalog("nonsense"), UnknownGraphName);
  CHECK_THROWS_AS(catalog("K_2+"), UnknownGraphName);
}

TEST_CASE("components and connectivity") {
  auto parts = components(catalog("2K_2"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 2);
  CHECK(parts[1].size() == 2);
  CHECK(components(catalog("C_7")).size() == 1);
  CHECK(components(Graph::empty(0)).empty());
  CHECK(is_connected(Graph::empty(0)));
  CHECK(is_connected(Graph::empty(1)));
  CHECK(vertex_connectivity(catalog("K_6")) == 5);
  CHECK(vertex_connectivity(catalog("C_5")) == 2);
  CHECK(vertex_connectivity(catalog("W_5")) == 3);
  CHECK(vertex_connectivity(catalog("petersen")) == 3);
  for (const auto& name : manifest_names()) {
    Graph g = catalog(name);
    if (g.order() <= 10) CHECK(vertex_connectivity(g) == oracle::connectivity(g));
  }
}

TEST_CASE("builder rejects loops and out-of-range vertices") {
  GraphBuilder b(3);
  CHECK_THROWS(b.add_edge(1, 1));
  CHECK_THROWS(b.add_edge(0, 3));
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 2}}) == Graph::from_edges(3, {{2, 1}, {1, 0}}));
}
