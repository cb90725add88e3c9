#include "dhc/theorems.hpp"

#include <algorithm>

#include "dhc/canonical.hpp"
#include "dhc/catalog.hpp"
#include "dhc/construct.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/graph6.hpp"
#include "dhc/invariants.hpp"
#include "dhc/pattern.hpp"

namespace dhc {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::not_applicable: return "not-applicable";
    case VerdictStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

LowerBound from_builder(int target, const BuiltCertificate& b) {
  LowerBound r;
  r.target = target;
  r.status = b.certificate.order() >= target ? SearchStatus::found : SearchStatus::none;
  r.certificate = b.certificate;
  r.provenance = b.provenance;
  return r;
}

LowerBound exact(const Graph& g, int target, std::uint64_t budget) {
  LowerBound r;
  r.target = target;
  auto s = DominatingMinorSolver(budget).has_dominating_kt(g, target);
  r.status = s.status;
  r.certificate = s.certificate;
  r.provenance = "exact";
  r.nodes = s.nodes;
  return r;
}

bool omega_hypothesis(const Graph& g, int omega) {
  return alpha_le_2(g) && 2 * omega >= ceil_half(g.order()) + 1;
}

}  // namespace

LowerBound decide_hd_at_least(const Graph& g, int target, std::uint64_t budget) {
  const int n = g.order();
  if (target <= 0) {
    LowerBound r;
    r.target = target;
    r.status = SearchStatus::found;
    r.certificate = MinorCertificate{};
    r.provenance = "trivial";
    return r;
  }
  if (target > n) {
    LowerBound r;
    r.target = target;
    r.provenance = "order";
    return r;
  }
  auto omega = clique_number(g);
  if (omega.value >= target) {
    MinorCertificate c;
    for (int v : omega.witness)
      if (c.order() < target) c.branch_sets.push_back(VertexSet::single(v));
    LowerBound r;
    r.target = target;
    r.status = SearchStatus::found;
    r.certificate = c;
    r.provenance = "clique";
    return r;
  }
  if (target <= ceil_half(n) && omega_hypothesis(g, omega.value)) {
    auto r = from_builder(target, build_omega_certificate(g));
    if (r.status == SearchStatus::found) return r;
  }
  if (g.min_degree() >= n - 3) {
    auto r = from_builder(target, build_mindeg_certificate(g));
    if (r.status == SearchStatus::found) return r;
  }
  return exact(g, target, budget);
}

namespace {

struct Context {
  const Graph& g;
  std::uint64_t budget;
  int n() const { return g.order(); }

  Clause alpha2() const {
    auto a = independence_number(g);
    Clause c{"alpha <= 2", a.value <= 2, ""};
    if (!c.holds) c.witness = "independent set " + set_text(a.witness);
    return c;
  }
  Clause nonempty() const { return {"n >= 1", n() >= 1, ""}; }
  Clause free_of(const std::string& name) const {
    Graph h = catalog(name);
    auto w = find_induced(g, h);
    Clause c{name + "-free", !w.has_value(), ""};
    if (w) {
      std::string m;
      for (int v : w->mapping) m += (m.empty() ? "" : ",") + std::to_string(v);
      c.witness = "induced copy at [" + m + "]";
    }
    return c;
  }
};

void settle_at_least(Verdict& v, LowerBound lb) {
  v.conclusion_text = "h_d >= " + std::to_string(lb.target);
  if (lb.status == SearchStatus::budget_exhausted) {
    v.status = VerdictStatus::budget_exhausted;
  } else {
    v.conclusion = lb.status == SearchStatus::found;
    v.status = *v.conclusion ? VerdictStatus::pass : VerdictStatus::fail;
  }
  v.evidence.push_back(std::move(lb));
}

bool hypotheses_hold(const Verdict& v) {
  return std::all_of(v.hypotheses.begin(), v.hypotheses.end(), [](const Clause& c) { return c.holds; });
}

bool names_main_pattern(const Graph& h) {
  for (const auto& name : main_theorem_patterns())
    if (isomorphic(h, catalog(name))) return true;
  return false;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  return {"ddm",          "equiv",        "omega",       "small-clique", "small-n",    "mindeg",
          "high-mindeg",  "connectivity", "main:<H>",    "cor-main:<H>", "2k2-free",   "target:chi",
          "target:half"};
}

Verdict check_theorem(const Graph& g, const std::string& id, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  Context ctx{g, budget};
  Verdict v;
  v.theorem_id = id;
  const int n = g.order();
  const int half = ceil_half(n);
  auto& hyp = v.hypotheses;
  hyp.push_back(ctx.nonempty());

  enum class Goal { half, chi, ddm, equiv, omega_builder, mindeg_builder };
  Goal goal;

  if (id == "ddm") {
    goal = Goal::ddm;
  } else if (id == "equiv") {
    hyp.push_back(ctx.alpha2());
    goal = Goal::equiv;
  } else if (id == "omega") {
    hyp.push_back(ctx.alpha2());
    int omega = clique_number(g).value;
    hyp.push_back({"2*omega >= ceil(n/2) + 1", 2 * omega >= half + 1, "omega = " + std::to_string(omega)});
    goal = Goal::omega_builder;
  } else if (id == "small-clique") {
    hyp.push_back(ctx.alpha2());
    int omega = clique_number(g).value;
    hyp.push_back({"omega <= 6", omega <= 6, "omega = " + std::to_string(omega)});
    goal = Goal::half;
  } else if (id == "small-n") {
    hyp.push_back(ctx.alpha2());
    hyp.push_back({"n <= 26", n <= 26, ""});
    goal = Goal::half;
  } else if (id == "mindeg") {
    hyp.push_back({"delta >= n - 3", g.min_degree() >= n - 3, "delta = " + std::to_string(g.min_degree())});
    goal = Goal::mindeg_builder;
  } else if (id == "high-mindeg") {
    hyp.push_back(ctx.alpha2());
    hyp.push_back({"delta >= n - 6", g.min_degree() >= n - 6, "delta = " + std::to_string(g.min_degree())});
    goal = Goal::half;
  } else if (id == "connectivity") {
    hyp.push_back(ctx.alpha2());
    int kappa = vertex_connectivity(g);
    hyp.push_back({"kappa >= n - 6", kappa >= n - 6, "kappa = " + std::to_string(kappa)});
    goal = Goal::half;
  } else if (id.starts_with("main:")) {
    std::string name = id.substr(5);
    Graph h;
    try {
      h = catalog(name);
    } catch (const UnknownGraphName& e) {
      throw UnknownTheorem("unknown pattern in '" + id + "': " + e.what());
    }
    if (!names_main_pattern(h)) throw UnknownTheorem("'" + name + "' is not one of the H-free theorem's patterns");
    hyp.push_back(ctx.alpha2());
    hyp.push_back(ctx.free_of(name));
    goal = Goal::half;
  } else if (id.starts_with("cor-main:")) {
    std::string name = id.substr(9);
    Graph h;
    try {
      h = catalog(name);
    } catch (const UnknownGraphName& e) {
      throw UnknownTheorem("unknown pattern in '" + id + "': " + e.what());
    }
    hyp.push_back(ctx.alpha2());
    hyp.push_back({"|H| <= 5", h.order() <= 5, "|H| = " + std::to_string(h.order())});
    hyp.push_back({"alpha(H) <= 2", alpha_le_2(h), ""});
    hyp.push_back({"H != K_2∪K_3", !isomorphic(h, catalog("K_2∪K_3")), ""});
    if (h.order() <= 5) hyp.push_back(ctx.free_of(name));
    goal = Goal::chi;
  } else if (id == "2k2-free") {
    hyp.push_back(ctx.free_of("2K_2"));
    goal = Goal::chi;
  } else if (id == "target:chi") {
    goal = Goal::chi;
  } else if (id == "target:half") {
    goal = Goal::half;
  } else {
    throw UnknownTheorem("unknown theorem id '" + id + "'");
  }

  if (!hypotheses_hold(v)) {
    v.status = VerdictStatus::not_applicable;
    return v;
  }

  switch (goal) {
    case Goal::half:
      settle_at_least(v, decide_hd_at_least(g, half, budget));
      break;
    case Goal::chi:
      settle_at_least(v, decide_hd_at_least(g, chromatic_number(g), budget));
      break;
    case Goal::ddm: {
      int alpha = independence_number(g).value;
      settle_at_least(v, decide_hd_at_least(g, (n + alpha - 1) / alpha, budget));
      break;
    }
    case Goal::omega_builder:
      settle_at_least(v, from_builder(half, build_omega_certificate(g)));
      break;
    case Goal::mindeg_builder:
      settle_at_least(v, from_builder(chromatic_number(g), build_mindeg_certificate(g)));
      break;
    case Goal::equiv: {
      const int chi = chromatic_number(g);
      auto at_chi = decide_hd_at_least(g, chi, budget);
      v.conclusion_text = "(h_d >= chi) <=> (h_d >= ceil(n/2)), chi = " + std::to_string(chi);
      if (at_chi.status == SearchStatus::budget_exhausted) {
        v.status = VerdictStatus::budget_exhausted;
        v.evidence.push_back(std::move(at_chi));
        break;
      }
      bool lhs = at_chi.status == SearchStatus::found;
      v.evidence.push_back(std::move(at_chi));
      bool rhs = lhs;
      if (!lhs) {
        auto at_half = decide_hd_at_least(g, half, budget);
        if (at_half.status == SearchStatus::budget_exhausted) {
          v.status = VerdictStatus::budget_exhausted;
          v.evidence.push_back(std::move(at_half));
          break;
        }
        rhs = at_half.status == SearchStatus::found;
        v.evidence.push_back(std::move(at_half));
      }
      v.conclusion = lhs == rhs;
      v.status = *v.conclusion ? VerdictStatus::pass : VerdictStatus::fail;
      break;
    }
  }
  return v;
}

std::vector<Graph> catalog_census(int n) {
  if (n != 4 && n != 5) throw std::invalid_argument("census is only defined for n = 4, 5");
  std::vector<Graph> out;
  auto generated = enumerate_alpha2(n);
  const auto& names = census_names(n);
  if (generated.size() != names.size())
    throw std::logic_error("generator found " + std::to_string(generated.size()) + " graphs, named list has " +
                           std::to_string(names.size()));
  std::vector<bool> matched(generated.size(), false);
  for (const auto& name : names) {
    Graph h = catalog(name);
    std::string key = canonical_key(h);
    bool hit = false;
    for (std::size_t i = 0; i < generated.size() && !hit; ++i)
      if (!matched[i] && canonical_key(generated[i]) == key) {
        matched[i] = hit = true;
        out.push_back(generated[i].with_label(name));
      }
    if (!hit) throw std::logic_error("named graph " + name + " missing from the generated census");
  }
  return out;
}

const std::map<int, int>& ramsey_r3() {
  static const std::map<int, int> table = {{3, 6}, {4, 9}, {5, 14}, {6, 18}, {7, 23}};
  return table;
}

}  // namespace dhc
