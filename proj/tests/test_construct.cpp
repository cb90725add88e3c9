#include <doctest.h>

#include "dhc/catalog.hpp"
#include "dhc/construct.hpp"
#include "dhc/invariants.hpp"

using namespace dhc;

TEST_CASE("dominating edges") {
  auto c4 = find_dominating_edge(catalog("C_4"));
  REQUIRE(c4);
  CHECK(c4->x == 0);
  CHECK(c4->y == 1);
  CHECK_FALSE(find_dominating_edge(catalog("C_5")));
  auto k2 = find_dominating_edge(catalog("K_2"));
  REQUIRE(k2);
  CHECK(k2->x == 0);
  CHECK(k2->y == 1);
}

TEST_CASE("join composition") {
  Graph k1 = catalog("K_1");
  MinorCertificate one{{VertexSet{0}}};
  auto two = compose_join(k1, one, k1, one);
  CHECK(two.order() == 2);
  Graph c5 = catalog("C_5"), k2 = catalog("K_2");
  MinorCertificate a{{VertexSet{0, 1, 2}, VertexSet{3}, VertexSet{4}}};
  MinorCertificate b{{VertexSet{0}, VertexSet{1}}};
  auto ab = compose_join(c5, a, k2, b);
  CHECK(ab.order() == 5);
  CHECK(verify_dominating(join(c5, k2), ab));
  MinorCertificate bad{{VertexSet{0, 1}, VertexSet{2}, VertexSet{3}}};
  CHECK_THROWS_AS(compose_join(c5, bad, k2, b), PreconditionError);
}

TEST_CASE("clique plus seagulls") {
  Graph c5 = catalog("C_5");
  auto c = assemble_clique_plus_seagulls(c5, VertexSet{0, 1}, {Seagull{2, 3, 4}});
  REQUIRE(c.order() == 3);
  CHECK(c.branch_sets[0] == VertexSet{2, 3, 4});
  CHECK(c.branch_sets[1] == VertexSet{0});
  CHECK(c.branch_sets[2] == VertexSet{1});
  CHECK(assemble_clique_plus_seagulls(catalog("K_6"), VertexSet::range(6), {}).order() == 6);
  CHECK_THROWS_AS(assemble_clique_plus_seagulls(catalog("C_7"), VertexSet{0, 1}, {}), PreconditionError);
  CHECK_THROWS_AS(assemble_clique_plus_seagulls(c5, VertexSet{0, 2}, {}), PreconditionError);
  CHECK_THROWS_AS(assemble_clique_plus_seagulls(c5, VertexSet{0, 1}, {Seagull{1, 2, 3}}), PreconditionError);
}

TEST_CASE("omega builder") {
  auto k7 = build_omega_certificate(catalog("K_7"));
  CHECK(k7.certificate.order() == 7);
  CHECK(k7.provenance == "clique");
  Graph g = join(catalog("K_5"), complement(catalog("C_5")));
  CHECK(clique_number(g).value == 7);
  auto b = build_omega_certificate(g);
  CHECK(b.certificate.order() >= 5);
  CHECK(verify_dominating(g, b.certificate));
  // 2 * 2 >= ceil(5/2) + 1 holds with equality.
  auto c5 = build_omega_certificate(catalog("C_5"));
  CHECK(c5.certificate.order() >= 3);
  CHECK_THROWS_AS(build_omega_certificate(catalog("C_7")), PreconditionError);
}

TEST_CASE("peeling") {
  auto k4 = peel_dominating_edges(catalog("K_4"));
  CHECK(k4.certificate.order() == 4);
  CHECK(verify_dominating(catalog("K_4"), k4.certificate));
  auto c5 = peel_dominating_edges(catalog("C_5"));
  CHECK(c5.certificate.order() == 3);
  CHECK(c5.provenance.rfind("peel(0)/", 0) == 0);
  CHECK(peel_dominating_edges(catalog("K_1")).certificate.order() == 1);
  auto with_omega = peel_dominating_edges(catalog("K_6"), [](const Graph& g) { return build_omega_certificate(g); });
  CHECK(with_omega.certificate.order() == 6);
}

TEST_CASE("mindeg builder") {
  for (int n = 1; n <= 7; ++n) {
    auto k = build_mindeg_certificate(catalog("K_" + std::to_string(n)));
    CHECK(k.certificate.order() == n);
  }
  Graph c7 = complement(catalog("C_7"));
  auto a = build_mindeg_certificate(c7);
  CHECK(a.certificate.order() >= 4);
  CHECK(verify_dominating(c7, a.certificate));
  Graph p = complement(disjoint_union(catalog("P_4"), catalog("K_1")));
  auto b = build_mindeg_certificate(p);
  CHECK(b.certificate.order() >= chromatic_number(p));
  CHECK_THROWS_AS(build_mindeg_certificate(catalog("C_6")), PreconditionError);
}

TEST_CASE("cycle locators") {
  Graph c5 = catalog("C_5");
  REQUIRE(c5_guarantee_applies(c5, 0));
  auto w = find_induced_c5_through(c5, 0);
  REQUIRE(w);
  CHECK(*w == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_induced_c5_through(catalog("K_6"), 2));
  CHECK_FALSE(find_induced_c5_through(catalog("W_5"), 0));
  CHECK(find_induced_c5_through(catalog("W_5"), 1));
  auto c4 = find_induced_c4_through(catalog("C_4"), 0);
  REQUIRE(c4);
  CHECK(*c4 == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(find_induced_c4_through(catalog("petersen"), 0));
  CHECK_FALSE(find_induced_c4_through(catalog("K_5"), 0));
  CHECK_THROWS_AS(find_induced_c4_through(catalog("K_5"), 5), std::out_of_range);
}
