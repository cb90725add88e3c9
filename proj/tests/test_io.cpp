#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dhc/catalog.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/graph6.hpp"
#include "dhc/hunt.hpp"
#include "dhc/json_io.hpp"

using namespace dhc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "dhc_tests";
  fs::create_directories(dir);
  auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("certificate JSON round trip") {
  Graph g = catalog("C_5");
  auto r = hd(g);
  Json j = certificate_json(g, r.certificate);
  CHECK(j["schema"] == "dhc.certificate/1");
  auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.graph == g);
  CHECK(back.certificate.branch_sets == r.certificate.branch_sets);
  auto embedded = certificate_from_json(hd_json(g, r));
  CHECK(embedded.certificate.order() == 3);
  CHECK_THROWS_AS(certificate_from_json(Json{{"graph6", "Dhc"}}), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(Json{{"graph6", "Dhc"}, {"branch_sets", {{70}}}}), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(Json{{"graph6", "Dhc"}, {"n", 4}, {"branch_sets", Json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("every serializer names its schema") {
  Graph g = catalog("W_5");
  CHECK(invariants_json(g, compute_invariants(g)).contains("schema"));
  CHECK(verdict_json(g, check_theorem(g, "small-n")).contains("schema"));
  CHECK(built_json(g, build_omega_certificate(g)).contains("schema"));
  CHECK(feasibility_json(feasibility(g, 2))["exception"] == true);
}

TEST_CASE("hunt config validation") {
  CHECK_THROWS_AS(hunt_config_from_json(Json{{"n_min", 1}, {"n_max", 4}, {"predicate", "nope"}}), HuntError);
  CHECK_THROWS_AS(hunt_config_from_json(Json{{"n_min", 1}, {"n_max", 13}}), HuntError);
  CHECK_THROWS_AS(hunt_config_from_json(Json{{"n_min", 1}, {"n_max", 4}, {"colour", "red"}}), HuntError);
  CHECK_THROWS_AS(hunt_config_from_json(Json{{"n_min", 3}, {"n_max", 2}}), HuntError);
  auto c = hunt_config_from_json(Json{{"n_min", 1}, {"n_max", 6}, {"predicate", "ddm"}, {"workers", 3}});
  auto d = c;
  d.workers = 1;
  d.output_path = "elsewhere.json";
  CHECK(c.hash() == d.hash());
  d.budget = 17;
  CHECK(c.hash() != d.hash());
}

TEST_CASE("hunt counts and determinism") {
  HuntConfig c;
  c.n_min = 1;
  c.n_max = 6;
  c.predicate = "ddm";
  c.checkpoint_every = 5;
  auto r = run_hunt(c);
  CHECK(r.complete);
  std::uint64_t total = 0;
  for (const auto& [n, counts] : r.per_n) {
    CHECK(counts.enumerated == enumerate_alpha2(n).size());
    CHECK(counts.filtered_in == counts.pass + counts.not_applicable + counts.budget_exhausted + counts.fail);
    CHECK(counts.fail == 0);
    total += counts.enumerated;
  }
  CHECK(total == 1 + 2 + 3 + 7 + 14 + 38);
  c.workers = 4;
  CHECK(report_json(run_hunt(c), false).dump() == report_json(r, false).dump());
}

TEST_CASE("hunt filters") {
  HuntConfig c;
  c.n_min = 5;
  c.n_max = 7;
  c.predicate = "target:half";
  c.free_of = {"K_2∪K_3"};
  c.omega.max = 4;
  auto r = run_hunt(c);
  for (const auto& [n, counts] : r.per_n) {
    CHECK(counts.filtered_in < counts.enumerated);
    CHECK(counts.fail == 0);
  }
}

TEST_CASE("kill and resume reproduces the report") {
  auto ckpt = scratch("resume.ckpt.json");
  auto out = scratch("resume.report.json");
  HuntConfig c;
  c.n_min = 1;
  c.n_max = 6;
  c.predicate = "small-n";
  c.checkpoint_every = 4;
  c.checkpoint_path = ckpt.string();
  c.output_path = out.string();
  auto full = report_json(run_hunt(c), false).dump();

  fs::remove(ckpt);
  HuntControl kill;
  kill.stop_after_chunks = 3;
  auto partial = run_hunt(c, kill);
  CHECK_FALSE(partial.complete);
  REQUIRE(partial.resume_cursor);
  HuntControl resume;
  resume.resume = true;
  resume.stop_after_chunks = 2;
  run_hunt(c, resume);
  resume.stop_after_chunks.reset();
  auto finished = run_hunt(c, resume);
  CHECK(finished.complete);
  CHECK(report_json(finished, false).dump() == full);

  std::ifstream in(out);
  auto on_disk = Json::parse(in);
  CHECK(on_disk.contains("timing"));
  on_disk.erase("timing");
  CHECK(on_disk.dump() == full);

  HuntConfig other = c;
  other.predicate = "ddm";
  CHECK_THROWS_AS(run_hunt(other, resume), HuntError);
}

TEST_CASE("hunt over an ingested file") {
  auto src = scratch("tf.g6");
  {
    std::ofstream f(src);
    for (const auto& g : triangle_free_graphs(7)) f << to_graph6(g) << "\n";
  }
  HuntConfig c;
  c.ingest_path = src.string();
  c.ingest_complement = true;
  c.n_min = 1;
  c.n_max = 64;
  c.predicate = "small-n";
  auto r = run_hunt(c);
  REQUIRE(r.per_n.size() == 1);
  CHECK(r.per_n.at(7).enumerated == 107);
  CHECK(r.per_n.at(7).pass == 107);
}

TEST_CASE("unwritable paths are rejected up front") {
  HuntConfig c;
  c.n_max = 3;
  c.output_path = "/nonexistent-dir/report.json";
  CHECK_THROWS_AS(run_hunt(c), HuntError);
}

TEST_CASE("budget-exhausted graphs go to the retry list") {
  auto retry = scratch("retry.g6");
  HuntConfig c;
  c.n_min = 9;
  c.n_max = 9;
  c.predicate = "equiv";
  c.budget = 1;
  c.retry_path = retry.string();
  auto r = run_hunt(c);
  const auto& counts = r.per_n.at(9);
  CHECK(counts.fail == 0);
  CHECK(counts.budget_exhausted == r.retry.size());
  std::ifstream in(retry);
  std::size_t lines = 0;
  for (std::string s; std::getline(in, s);) ++lines;
  CHECK(lines == r.retry.size());
}
