#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhc/graph.hpp"

namespace dhc {

class UnknownGraphName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Named graphs with a frozen vertex numbering.
//
// Atoms:
//   K_k          complete graph on 0..k-1
//   K_k_minus    K_k without edge 01
//   K_k_less     K_k without edges 01 and 02
//   C_k, P_k     cycle / path 0-1-...-(k-1)
//   W_k          hub 0, rim 1..k in cycle order
//   W_k_minus    W_k without hub edge 0-1
//   W_k_less     W_k without hub edges 0-1 and 0-2
//   hammer       triangle 0,1,2; path 0-3-4
//   kite         diamond on 1,2,3,4 with chord 2-3; pendant 0-1
//   fig2_a/b/c   the three 8-vertex graphs (see catalog.cpp)
//   petersen     outer 5-cycle 0..4, spokes i-(i+5), inner pentagram
//
// Compound names combine atoms: "G+H" is the join, "G∪H" (also "GUH" or
// "G|H") the disjoint union, "kG" k disjoint copies; parentheses group.
// Operators are left-associative with equal precedence; copies bind tightest.
// In every composition the left operand's vertices come first.
Graph catalog(std::string_view name);

// Graphs forbidden in the H-free dominating-minor theorem.
const std::vector<std::string>& main_theorem_patterns();
// Named graphs on 4 and 5 vertices with independence number at most two.
const std::vector<std::string>& census_names(int n);
// Every fixed-size name worth listing in a manifest.
std::vector<std::string> manifest_names();

}  // namespace dhc
