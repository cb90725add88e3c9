#include <doctest.h>

#include "dhc/catalog.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/invariants.hpp"
#include "oracles.hpp"

using namespace dhc;

TEST_CASE("independence number") {
  CHECK(independence_number(catalog("C_5")).value == 2);
  CHECK(independence_number(complement(catalog("petersen"))).value == 2);
  CHECK(independence_number(catalog("K_7")).value == 1);
  CHECK(independence_number(catalog("petersen")).value == 4);
  auto w = independence_number(catalog("C_7"));
  CHECK(catalog("C_7").is_independent(w.witness));
  CHECK(w.witness.size() == w.value);
}

TEST_CASE("clique number") {
  CHECK(clique_number(catalog("W_5")).value == 3);
  CHECK(clique_number(catalog("kite")).value == 3);
  CHECK(clique_number(complement(catalog("petersen"))).value == 4);
  for (const auto& g : enumerate_alpha2(9)) CHECK(clique_number(g).value >= 4);
  Graph k = catalog("K_1+(K_1∪K_5)");
  auto w = clique_number(k);
  CHECK(w.value == 6);
  CHECK(k.is_clique(w.witness));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(catalog("C_5")) == 3);
  CHECK(chromatic_number(complement(catalog("C_7"))) == 4);
  GraphBuilder b(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (!(u % 2 == 0 && v == u + 1 && v < 8)) b.add_edge(u, v);
  Graph k9m = b.build();
  CHECK(k9m.size() == 36 - 4);
  CHECK(chromatic_number(k9m) == 5);
  CHECK(chromatic_number_by_search(k9m) == 5);
  CHECK(chromatic_number(catalog("petersen")) == 3);
  CHECK_THROWS_AS(chromatic_number_by_search(catalog("C_17")), SearchLimitError);
  CHECK(chromatic_number(Graph::empty(0)) == 0);
}

TEST_CASE("maximum matching") {
  CHECK(max_matching(catalog("C_5")).size == 2);
  CHECK(max_matching(catalog("petersen")).size == 5);
  CHECK(max_matching(catalog("K_1")).size == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      auto m = max_matching(g);
      CHECK(m.size == oracle::matching(g));
      VertexSet used;
      for (auto [u, v] : m.edges) {
        CHECK(g.has_edge(u, v));
        CHECK_FALSE(used.contains(u));
        CHECK_FALSE(used.contains(v));
        used |= VertexSet{u, v};
      }
    }
}

TEST_CASE("alpha_le_2 agrees with the independence number") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) CHECK(alpha_le_2(g) == (oracle::independence_number(g) <= 2));
}

TEST_CASE("bundle relations") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      auto inv = compute_invariants(g);
      CHECK(inv.alpha * inv.chi >= n);
      CHECK(inv.omega <= inv.chi);
      CHECK(inv.min_degree <= inv.max_degree);
      CHECK(inv.omega == oracle::clique_number(g));
      CHECK(inv.chi == oracle::chromatic_number(g));
    }
}
