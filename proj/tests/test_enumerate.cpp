#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "dhc/canonical.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/graph6.hpp"
#include "dhc/invariants.hpp"
#include "oracles.hpp"

using namespace dhc;

TEST_CASE("triangle-free census") {
  const std::vector<std::size_t> expected = {1, 2, 3, 7, 14, 38, 107, 410, 1897};
  for (int n = 1; n <= 9; ++n) CHECK(triangle_free_graphs(n).size() == expected[n - 1]);
  CHECK(enumerate_alpha2(4).size() == 7);
  CHECK(enumerate_alpha2(5).size() == 14);
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(all_graphs(n).size() == all[n - 1]);
  CHECK_THROWS_AS(enumerate_alpha2(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_alpha2(13), std::invalid_argument);
}

TEST_CASE("no duplicates and deterministic order") {
  for (int n = 1; n <= 9; ++n) {
    auto gs = enumerate_alpha2(n);
    std::set<std::string> keys;
    for (const auto& g : gs) {
      CHECK(alpha_le_2(g));
      keys.insert(canonical_key(g));
    }
    CHECK(keys.size() == gs.size());
    if (n == 8) CHECK(gs == enumerate_alpha2(8));
  }
}

TEST_CASE("alpha filter over all graphs agrees with the generator") {
  for (int n = 1; n <= 7; ++n) {
    std::size_t filtered = 0;
    for (const auto& g : all_graphs(n))
      if (oracle::independence_number(g) <= 2) ++filtered;
    CHECK(filtered == enumerate_alpha2(n).size());
  }
}

TEST_CASE("canonical form against brute force") {
  for (int n = 1; n <= 6; ++n) {
    auto gs = all_graphs(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = (v * 5 + static_cast<int>(i)) % n;
      std::set<int> distinct(perm.begin(), perm.end());
      if (static_cast<int>(distinct.size()) != n) std::iota(perm.rbegin(), perm.rend(), 0);
      Graph h = gs[i].permuted(perm);
      CHECK(canonical_form(h).graph == canonical_form(gs[i]).graph);
      CHECK(oracle::isomorphic(canonical_form(h).graph, gs[i]));
    }
    for (std::size_t i = 0; i + 1 < gs.size(); i += 3) CHECK(isomorphic(gs[i], gs[i + 1]) == oracle::isomorphic(gs[i], gs[i + 1]));
  }
  for (const auto& g : all_graphs(7)) CHECK(canonical_form(g).graph == g);
}

TEST_CASE("random alpha <= 2 graphs") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Graph g = random_alpha2(11, seed);
    CHECK(g.order() == 11);
    CHECK(alpha_le_2(g));
  }
  CHECK(random_alpha2(10, 7) == random_alpha2(10, 7));
}

TEST_CASE("ingest") {
  auto three = ingest_text("Bw\nD?{\n\nC~\n");
  CHECK(three.graphs.size() == 3);
  try {
    ingest_text("Bw\nD?{\nC~~\n");
    FAIL("expected an ingest error");
  } catch (const IngestError& e) {
    CHECK(e.line() == 3);
  }
  std::string tf;
  for (const auto& g : triangle_free_graphs(6)) tf += to_graph6(g) + "\n";
  auto as_is = ingest_text(tf, {.require_alpha2 = true, .complement = false});
  CHECK(as_is.rejected > 0);
  auto flipped = ingest_text(tf, {.require_alpha2 = true, .complement = true});
  CHECK(flipped.rejected == 0);
  CHECK(flipped.graphs.size() == 38);
  for (const auto& g : flipped.graphs) CHECK(alpha_le_2(g));

  auto path = std::filesystem::temp_directory_path() / "dhc_ingest_test.g6";
  std::ofstream(path) << "Bw\nD?{\nC~\n";
  CHECK(ingest(path.string()).graphs.size() == 3);
  std::filesystem::remove(path);
  CHECK_THROWS(ingest("/nonexistent/file.g6"));
}
