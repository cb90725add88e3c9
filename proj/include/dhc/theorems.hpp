#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhc/graph.hpp"
#include "dhc/minor.hpp"

namespace dhc {

enum class VerdictStatus { pass, fail, not_applicable, budget_exhausted };

const char* to_string(VerdictStatus s);

struct Clause {
  std::string name;
  bool holds = false;
  std::string witness;
};

// Outcome of deciding h_d(G) >= target.
struct LowerBound {
  int target = 0;
  SearchStatus status = SearchStatus::none;  // found / none / budget_exhausted
  std::optional<MinorCertificate> certificate;
  std::string provenance;
  std::uint64_t nodes = 0;
};

struct Verdict {
  std::string theorem_id;
  std::vector<Clause> hypotheses;
  std::string conclusion_text;
  std::optional<bool> conclusion;  // empty when not evaluated or undecided
  std::vector<LowerBound> evidence;
  VerdictStatus status = VerdictStatus::not_applicable;
};

class UnknownTheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Decides h_d(g) >= target, preferring the constructive builders and falling
// back to the exact search under `budget`.
LowerBound decide_hd_at_least(const Graph& g, int target, std::uint64_t budget);

// Supported ids: ddm, equiv, omega, small-clique, small-n, mindeg,
// high-mindeg, connectivity, main:<H>, cor-main:<H>, 2k2-free, and the raw
// hunt targets target:chi (h_d >= chi) and target:half (h_d >= ceil(n/2)).
Verdict check_theorem(const Graph& g, const std::string& id, std::uint64_t budget = kUnlimited);

std::vector<std::string> theorem_ids();

// Up-to-isomorphism alpha <= 2 graphs on n in {4, 5} vertices, labelled with
// their names and checked against the named lists.
std::vector<Graph> catalog_census(int n);

// Frozen Ramsey values R(3, k) for k = 3..7, used for stratification only.
const std::map<int, int>& ramsey_r3();

}  // namespace dhc
