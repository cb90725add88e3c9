#include <doctest.h>

#include "dhc/catalog.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/invariants.hpp"
#include "dhc/minor.hpp"
#include "oracles.hpp"

using namespace dhc;

namespace {

MinorCertificate cert(std::vector<VertexSet> sets) { return MinorCertificate{std::move(sets)}; }

}  // namespace

TEST_CASE("verifier") {
  CHECK(verify_dominating(catalog("K_3"), cert({{0}, {1}, {2}})));
  Graph c5 = catalog("C_5");
  CHECK(verify_dominating(c5, cert({{0, 1, 2}, {3}, {4}})));
  auto bad = verify_dominating(c5, cert({{0, 1}, {2}, {3}}));
  CHECK_FALSE(bad);
  CHECK(bad.clause == Verification::Clause::undominated);
  CHECK(bad.vertex == 3);
  CHECK(bad.i == 0);
  CHECK(bad.diagnostic.find("vertex 3 undominated by T_1") != std::string::npos);
  CHECK(verify_dominating(c5, cert({{0}, {}})).clause == Verification::Clause::empty);
  CHECK(verify_dominating(c5, cert({{0, 1}, {1, 2}})).clause == Verification::Clause::overlap);
  CHECK(verify_dominating(c5, cert({{0, 2}})).clause == Verification::Clause::disconnected);
  CHECK_THROWS_AS(verify_dominating(c5, cert({{7}})), std::out_of_range);
  CHECK(verify_dominating(c5, cert({})));
}

TEST_CASE("decision examples") {
  auto s = has_dominating_kt(subdivide_once(catalog("K_4")), 4);
  CHECK(s.status == SearchStatus::none);
  auto k5 = has_dominating_kt(catalog("K_5"), 5);
  REQUIRE(k5.status == SearchStatus::found);
  CHECK(k5.certificate->order() == 5);
  for (auto b : k5.certificate->branch_sets) CHECK(b.size() == 1);
  auto c5 = has_dominating_kt(catalog("C_5"), 3);
  REQUIRE(c5.status == SearchStatus::found);
  CHECK(verify_dominating(catalog("C_5"), *c5.certificate));
  CHECK_THROWS_AS(has_dominating_kt(catalog("C_5"), 0), std::invalid_argument);
}

TEST_CASE("hd examples") {
  for (int n = 1; n <= 10; ++n) CHECK(hd(catalog("K_" + std::to_string(n))).value == n);
  CHECK(hd(catalog("C_5")).value == 3);
  auto s = hd(subdivide_once(catalog("K_4")));
  CHECK(s.value == 3);
  CHECK(s.exact);
  CHECK(hd(Graph::empty(0)).value == 0);
  CHECK(hd(Graph::empty(1)).value == 1);
  CHECK(hd(Graph::empty(3)).value == 1);
}

TEST_CASE("budget exhaustion is explicit") {
  Graph g = complement(catalog("C_7"));
  auto s = has_dominating_kt(join(g, g), 9, 5);
  CHECK(s.status == SearchStatus::budget_exhausted);
  auto r = hd(join(g, g), 5);
  CHECK_FALSE(r.exact);
  CHECK(r.value <= r.upper);
  CHECK(verify_dominating(join(g, g), r.certificate));
}

TEST_CASE("ordinary clique minors") {
  CHECK(has_kt_minor(subdivide_once(catalog("K_5")), 5));
  CHECK_FALSE(has_kt_minor(catalog("K_4"), 5));
  CHECK(has_kt_minor(catalog("C_5"), 3));
  CHECK_FALSE(has_kt_minor(catalog("P_5"), 3));
  CHECK(has_kt_minor(catalog("petersen"), 5));
  CHECK_FALSE(has_kt_minor(catalog("petersen"), 6));
  CHECK_FALSE(has_kt_minor(catalog("C_9"), 4));
}

TEST_CASE("solver matches the naive oracle on all graphs up to five vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      auto r = hd(g);
      CHECK(r.value == oracle::hd(g));
      CHECK(verify_dominating(g, r.certificate));
      CHECK(r.certificate.order() == r.value);
    }
}

TEST_CASE("t <= 3 dominating and ordinary minors coincide") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n))
      for (int t = 1; t <= 3; ++t) {
        bool d = has_dominating_kt(g, t).status == SearchStatus::found;
        CHECK(d == has_kt_minor(g, t));
        CHECK(d == oracle::small_clique_minor(g, t));
      }
}

TEST_CASE("find_cycle") {
  auto c = find_cycle(catalog("W_4"), VertexSet::range(5));
  REQUIRE(c.size() >= 3);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(catalog("W_4").has_edge(c[i], c[(i + 1) % c.size()]));
  CHECK(find_cycle(catalog("P_6"), VertexSet::range(6)).empty());
}
