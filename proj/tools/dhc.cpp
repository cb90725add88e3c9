// dhc: command-line front end. Exit codes: 0 success, 1 negative result,
// 2 usage error, 3 budget or search limit reached.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dhc/catalog.hpp"
#include "dhc/construct.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/graph6.hpp"
#include "dhc/hunt.hpp"
#include "dhc/json_io.hpp"
#include "dhc/pattern.hpp"
#include "dhc/seagull.hpp"
#include "dhc/theorems.hpp"

using namespace dhc;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A catalog name or expression, else a graph6 record.
Graph read_graph(const std::string& arg) {
  try {
    return catalog(arg);
  } catch (const UnknownGraphName&) {
  }
  try {
    return from_graph6(arg);
  } catch (const Graph6Error& e) {
    throw UsageError("'" + arg + "' is neither a catalog name nor valid graph6 (" + e.what() + ")");
  }
}

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

void print_certificate(const Graph& g, const MinorCertificate& c) {
  std::cout << "graph6: " << to_graph6(g) << "\n";
  for (int i = 0; i < c.order(); ++i) std::cout << "T_" << i + 1 << " = " << set_text(c.branch_sets[i]) << "\n";
}

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

// The human form printed by `hd`: a "graph6:" line and "T_i = {...}" lines.
CertificateFile parse_human_certificate(const std::string& text) {
  CertificateFile out;
  bool have_graph = false;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("graph6: ", 0) == 0) {
      out.graph = from_graph6(line.substr(8));
      have_graph = true;
    } else if (line.rfind("T_", 0) == 0) {
      auto open = line.find('{'), close = line.find('}');
      if (open == std::string::npos || close == std::string::npos) throw std::invalid_argument("bad line: " + line);
      Json a = Json::array();
      std::istringstream items(line.substr(open + 1, close - open - 1));
      for (std::string v; std::getline(items, v, ',');) a.push_back(std::stoi(v));
      out.certificate.branch_sets.push_back(vertex_set_from_json(a));
    }
  }
  if (!have_graph) throw std::invalid_argument("no graph6 line found");
  return out;
}

int cmd_invariants(const std::string& arg, bool json) {
  Graph g = read_graph(arg);
  auto inv = compute_invariants(g);
  if (json) {
    std::cout << invariants_json(g, inv).dump(2) << "\n";
  } else {
    std::cout << "n = " << inv.order << ", m = " << g.size() << "\n"
              << "alpha = " << inv.alpha << " " << set_text(inv.alpha_witness) << "\n"
              << "omega = " << inv.omega << " " << set_text(inv.omega_witness) << "\n"
              << "chi = " << inv.chi << "\n"
              << "min degree = " << inv.min_degree << ", max degree = " << inv.max_degree << "\n"
              << "anti-matching = " << inv.anti_matching << "\n"
              << "connectivity = " << inv.connectivity << "\n";
  }
  return kOk;
}

int cmd_freeness(const std::string& arg, const std::vector<std::string>& patterns, bool json) {
  Graph g = read_graph(arg);
  Json out{{"schema", "dhc.freeness/1"}, {"graph6", to_graph6(g)}, {"patterns", Json::array()}};
  for (const auto& name : patterns) {
    auto w = find_induced(g, catalog(name));
    Json e{{"pattern", name}, {"free", !w}};
    e["witness"] = w ? Json(w->mapping) : Json();
    out["patterns"].push_back(e);
    if (!json) {
      std::cout << name << ": " << (w ? "contained" : "free");
      if (w) {
        std::cout << " at [";
        for (std::size_t i = 0; i < w->mapping.size(); ++i) std::cout << (i ? "," : "") << w->mapping[i];
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_hd(const std::string& arg, std::optional<int> target, std::uint64_t budget, bool json) {
  Graph g = read_graph(arg);
  if (target) {
    auto s = has_dominating_kt(g, *target, budget);
    if (json) {
      Json j{{"schema", "dhc.kt/1"}, {"graph6", to_graph6(g)}, {"t", *target}, {"nodes", s.nodes}};
      j["status"] = s.status == SearchStatus::found ? "found" : s.status == SearchStatus::none ? "none" : "budget-exhausted";
      j["certificate"] = s.certificate ? certificate_json(g, *s.certificate) : Json();
      std::cout << j.dump(2) << "\n";
    } else if (s.status == SearchStatus::found) {
      std::cout << "dominating K_" << *target << " minor found\n";
      print_certificate(g, *s.certificate);
    } else {
      std::cout << (s.status == SearchStatus::none ? "no dominating K_" + std::to_string(*target) + " minor\n"
                                                   : "budget exhausted after " + std::to_string(s.nodes) + " nodes\n");
    }
    if (s.status == SearchStatus::budget_exhausted) return kBudget;
    return s.status == SearchStatus::found ? kOk : kNegative;
  }
  auto r = hd(g, budget);
  if (json) {
    std::cout << hd_json(g, r).dump(2) << "\n";
  } else {
    std::cout << "h_d = " << r.value;
    if (!r.exact) std::cout << " (budget exhausted; upper bound " << r.upper << ")";
    std::cout << "\n";
    print_certificate(g, r.certificate);
  }
  return r.exact ? kOk : kBudget;
}

int cmd_verify(const std::string& path, bool json) {
  std::string text = slurp(path);
  CertificateFile cf;
  try {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      cf = certificate_from_json(Json::parse(text));
    else
      cf = parse_human_certificate(text);
  } catch (const std::exception& e) {
    std::cerr << "malformed certificate: " << e.what() << "\n";
    return kNegative;
  }
  Verification v;
  try {
    v = verify_dominating(cf.graph, cf.certificate);
  } catch (const std::out_of_range& e) {
    v.clause = Verification::Clause::empty;
    v.diagnostic = e.what();
  }
  if (json) {
    std::cout << Json{{"schema", "dhc.verification/1"},
                      {"valid", static_cast<bool>(v)},
                      {"order", cf.certificate.order()},
                      {"diagnostic", v.diagnostic}}
                     .dump(2)
              << "\n";
  } else if (v) {
    std::cout << "valid dominating K_" << cf.certificate.order() << " minor\n";
  } else {
    std::cout << "invalid: " << v.diagnostic << "\n";
  }
  return v ? kOk : kNegative;
}

int cmd_seagulls(const std::string& arg, std::optional<int> ell, bool json) {
  Graph g = read_graph(arg);
  auto p = max_disjoint_seagulls(g);
  Json out{{"schema", "dhc.seagulls/1"}, {"graph6", to_graph6(g)}, {"packing", packing_json(p)}};
  if (ell) out["feasibility"] = feasibility_json(feasibility(g, *ell));
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "max disjoint seagulls = " << p.size << "\n";
    for (const auto& s : p.seagulls) std::cout << "  " << s.a << "-" << s.b << "-" << s.c << "\n";
    if (ell) {
      const auto& f = out["feasibility"];
      std::cout << "ell = " << *ell << ": size " << f["size"] << ", connectivity " << f["connected_enough"]
                << ", capacity " << f["capacity"] << ", anti-matching " << f["anti_matching_ok"]
                << (f["exception"].get<bool>() ? " (W_5 exception)" : "") << "\n";
    }
  }
  if (ell) return p.size >= *ell ? kOk : kNegative;
  return kOk;
}

int cmd_construct(const std::string& arg, const std::string& method, bool json) {
  Graph g = read_graph(arg);
  BuiltCertificate b;
  try {
    if (method == "omega") b = build_omega_certificate(g);
    else if (method == "mindeg") b = build_mindeg_certificate(g);
    else b = peel_dominating_edges(g);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kNegative;
  }
  if (json) {
    std::cout << built_json(g, b).dump(2) << "\n";
  } else {
    std::cout << "order " << b.certificate.order() << " via " << b.provenance << "\n";
    print_certificate(g, b.certificate);
  }
  return kOk;
}

int cmd_check(const std::string& arg, const std::string& id, std::uint64_t budget, bool json) {
  Graph g = read_graph(arg);
  Verdict v;
  try {
    v = check_theorem(g, id, budget);
  } catch (const UnknownTheorem& e) {
    throw UsageError(e.what());
  }
  if (json) {
    std::cout << verdict_json(g, v).dump(2) << "\n";
  } else {
    std::cout << v.theorem_id << ": " << to_string(v.status) << "\n";
    for (const auto& c : v.hypotheses)
      std::cout << "  [" << (c.holds ? "x" : " ") << "] " << c.name << (c.witness.empty() ? "" : "  (" + c.witness + ")")
                << "\n";
    if (!v.conclusion_text.empty()) std::cout << "  conclusion: " << v.conclusion_text << "\n";
    for (const auto& e : v.evidence)
      if (e.certificate && e.status == SearchStatus::found) {
        std::cout << "  via " << e.provenance << "\n";
        print_certificate(g, *e.certificate);
      }
  }
  switch (v.status) {
    case VerdictStatus::fail: return kNegative;
    case VerdictStatus::budget_exhausted: return kBudget;
    default: return kOk;
  }
}

int cmd_hunt(const std::string& config_path, bool resume, bool json) {
  HuntConfig c;
  try {
    c = load_hunt_config(config_path);
  } catch (const HuntError& e) {
    throw UsageError(e.what());
  }
  HuntControl control;
  control.resume = resume;
  auto r = run_hunt(c, control);
  Json j = report_json(r);
  if (json || c.output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : j["per_n"])
      std::cout << "n = " << e["n"] << ": " << e["enumerated"] << " enumerated, " << e["filtered_in"]
                << " filtered in, " << e["pass"] << " pass, " << e["not_applicable"] << " n/a, "
                << e["budget_exhausted"] << " budget, " << e["fail"] << " fail\n";
    std::cout << "report written to " << c.output_path << "\n";
  }
  if (j["totals"]["fail"].get<std::uint64_t>() > 0) return kNegative;
  if (j["totals"]["budget_exhausted"].get<std::uint64_t>() > 0) return kBudget;
  return kOk;
}

int cmd_catalog(const std::optional<std::string>& name, bool json) {
  if (!name) {
    Json all = Json::array();
    for (const auto& n : manifest_names()) {
      Graph g = catalog(n);
      all.push_back({{"name", n}, {"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}});
      if (!json) std::cout << n << "\t" << to_graph6(g) << "\n";
    }
    if (json) std::cout << Json{{"schema", "dhc.catalog/1"}, {"graphs", all}}.dump(2) << "\n";
    return kOk;
  }
  Graph g;
  try {
    g = catalog(*name);
  } catch (const UnknownGraphName& e) {
    throw UsageError(e.what());
  }
  if (json)
    std::cout << Json{{"schema", "dhc.graph/1"}, {"name", *name}, {"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}}
                     .dump(2)
              << "\n";
  else
    std::cout << to_graph6(g) << "\n";
  return kOk;
}

int cmd_enumerate(int n, bool triangle_free, bool all) {
  if (n < 1 || n > kMaxGeneratorOrder) throw UsageError("n must be in 1.." + std::to_string(kMaxGeneratorOrder));
  GraphVisitor print = [](const Graph& g) {
    std::cout << to_graph6(g) << "\n";
    return true;
  };
  if (all) for_each_graph(n, print);
  else if (triangle_free) for_each_triangle_free(n, print);
  else for_each_alpha2(n, print);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating clique minors: exact search, certificates, constructions and hunts"};
  app.require_subcommand(1);
  std::string graph_arg, path, method = "omega", theorem;
  std::vector<std::string> patterns;
  std::optional<int> target, ell;
  std::optional<std::string> name;
  std::uint64_t budget = kUnlimited;
  bool json = false, resume = false, triangle_free = false, all = false;
  int order = 0;

  auto with_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_arg, "catalog name or graph6 record")->required();
    sub->add_flag("--json", json, "JSON output");
    return sub;
  };

  auto* inv = with_graph(app.add_subcommand("invariants", "alpha, omega, chi, degrees, anti-matching, connectivity"));
  auto* fre = with_graph(app.add_subcommand("freeness", "induced-subgraph tests against named patterns"));
  fre->add_option("--patterns", patterns, "pattern names")->required()->delimiter(',');
  auto* hdc = with_graph(app.add_subcommand("hd", "dominating Hadwiger number with certificate"));
  hdc->add_option("--target", target, "only decide h_d >= t");
  hdc->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
  auto* ver = app.add_subcommand("verify-cert", "check a certificate file ('-' for stdin)");
  ver->add_option("file", path, "certificate (JSON or hd text output)")->required();
  ver->add_flag("--json", json, "JSON output");
  auto* sea = with_graph(app.add_subcommand("seagulls", "maximum seagull packing and feasibility conditions"));
  sea->add_option("--ell", ell, "packing size to test")->check(CLI::NonNegativeNumber);
  auto* con = with_graph(app.add_subcommand("construct", "build a certificate constructively"));
  con->add_option("--method", method, "omega | mindeg | peel")->check(CLI::IsMember({"omega", "mindeg", "peel"}));
  auto* chk = with_graph(app.add_subcommand("check", "evaluate a theorem's hypotheses and conclusion"));
  chk->add_option("--theorem", theorem, "theorem id")->required();
  chk->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
  auto* hun = app.add_subcommand("hunt", "run a counterexample hunt");
  hun->add_option("--config", path, "config JSON")->required();
  hun->add_flag("--resume", resume, "continue from the checkpoint");
  hun->add_flag("--json", json, "print the report as JSON");
  auto* cat = app.add_subcommand("catalog", "graph6 of a named graph, or the manifest");
  cat->add_option("name", name, "catalog name or expression");
  cat->add_flag("--json", json, "JSON output");
  auto* enu = app.add_subcommand("enumerate", "alpha <= 2 graphs on n vertices, one graph6 per line");
  enu->add_option("n", order, "order")->required();
  enu->add_flag("--triangle-free", triangle_free, "emit the triangle-free graphs instead");
  enu->add_flag("--all", all, "emit all graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*inv) return cmd_invariants(graph_arg, json);
    if (*fre) return cmd_freeness(graph_arg, patterns, json);
    if (*hdc) return cmd_hd(graph_arg, target, budget, json);
    if (*ver) return cmd_verify(path, json);
    if (*sea) return cmd_seagulls(graph_arg, ell, json);
    if (*con) return cmd_construct(graph_arg, method, json);
    if (*chk) return cmd_check(graph_arg, theorem, budget, json);
    if (*hun) return cmd_hunt(path, resume, json);
    if (*cat) return cmd_catalog(name, json);
    if (*enu) return cmd_enumerate(order, triangle_free, all);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchLimitError& e) {
    std::cerr << "search limit: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
