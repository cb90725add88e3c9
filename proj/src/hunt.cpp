#include "dhc/hunt.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "dhc/catalog.hpp"
#include "dhc/enumerate.hpp"
#include "dhc/graph6.hpp"
#include "dhc/pattern.hpp"

namespace dhc {

namespace fs = std::filesystem;

namespace {

Json range_json(const IntRange& r) {
  return Json{{"min", r.min ? Json(*r.min) : Json()}, {"max", r.max ? Json(*r.max) : Json()}};
}

IntRange range_from_json(const Json& j, const std::string& key) {
  if (!j.is_object()) throw HuntError("\"" + key + "\" must be an object with optional min/max");
  IntRange r;
  for (auto& [k, v] : j.items()) {
    if (k != "min" && k != "max") throw HuntError("unknown key \"" + key + "." + k + "\"");
    if (v.is_null()) continue;
    if (!v.is_number_integer()) throw HuntError("\"" + key + "." + k + "\" must be an integer");
    (k == "min" ? r.min : r.max) = v.get<int>();
  }
  return r;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t x) {
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << x;
  return o.str();
}

}  // namespace

Json HuntConfig::semantic_json() const {
  Json free = Json::array();
  for (const auto& h : free_of) free.push_back(h);
  return Json{{"n_min", n_min},
              {"n_max", n_max},
              {"predicate", predicate},
              {"source", ingest_path.empty() ? "generator" : "ingest"},
              {"ingest_complement", ingest_complement},
              {"free_of", free},
              {"omega", range_json(omega)},
              {"delta", range_json(delta)},
              {"kappa", range_json(kappa)},
              {"budget", budget},
              {"chunk", checkpoint_every}};
}

std::uint64_t HuntConfig::hash() const { return fnv1a(semantic_json().dump()); }

HuntConfig hunt_config_from_json(const Json& j) {
  if (!j.is_object()) throw HuntError("hunt config must be a JSON object");
  HuntConfig c;
  bool have_n = false;
  auto need_int = [](const Json& v, const std::string& k) {
    if (!v.is_number_integer()) throw HuntError("\"" + k + "\" must be an integer");
    return v.get<long long>();
  };
  auto need_str = [](const Json& v, const std::string& k) {
    if (!v.is_string()) throw HuntError("\"" + k + "\" must be a string");
    return v.get<std::string>();
  };
  for (auto& [k, v] : j.items()) {
    if (k == "schema") continue;
    if (k == "n_min") c.n_min = static_cast<int>(need_int(v, k)), have_n = true;
    else if (k == "n_max") c.n_max = static_cast<int>(need_int(v, k)), have_n = true;
    else if (k == "predicate") c.predicate = need_str(v, k);
    else if (k == "ingest") c.ingest_path = need_str(v, k);
    else if (k == "ingest_complement") {
      if (!v.is_boolean()) throw HuntError("\"ingest_complement\" must be a boolean");
      c.ingest_complement = v.get<bool>();
    } else if (k == "free_of") {
      if (!v.is_array()) throw HuntError("\"free_of\" must be an array of graph names");
      for (const auto& h : v) c.free_of.push_back(need_str(h, "free_of[]"));
    } else if (k == "omega") c.omega = range_from_json(v, k);
    else if (k == "delta") c.delta = range_from_json(v, k);
    else if (k == "kappa") c.kappa = range_from_json(v, k);
    else if (k == "budget") {
      auto b = need_int(v, k);
      if (b <= 0) throw HuntError("\"budget\" must be positive");
      c.budget = static_cast<std::uint64_t>(b);
    } else if (k == "workers") c.workers = static_cast<int>(need_int(v, k));
    else if (k == "checkpoint") c.checkpoint_path = need_str(v, k);
    else if (k == "checkpoint_every") c.checkpoint_every = static_cast<int>(need_int(v, k));
    else if (k == "output") c.output_path = need_str(v, k);
    else if (k == "retry") c.retry_path = need_str(v, k);
    else throw HuntError("unknown config key \"" + k + "\"");
  }
  if (!have_n && c.ingest_path.empty()) throw HuntError("config needs n_min/n_max");
  if (!c.ingest_path.empty() && !j.contains("n_max")) c.n_max = kMaxVertices;
  if (c.n_min < 1 || c.n_min > c.n_max) throw HuntError("need 1 <= n_min <= n_max");
  if (c.ingest_path.empty() && c.n_max > kMaxGeneratorOrder)
    throw HuntError("the internal generator stops at n = " + std::to_string(kMaxGeneratorOrder) +
                    "; use \"ingest\" for larger orders");
  if (c.workers < 1) throw HuntError("\"workers\" must be at least 1");
  if (c.checkpoint_every < 1) throw HuntError("\"checkpoint_every\" must be at least 1");
  try {
    check_theorem(Graph::empty(1), c.predicate);
    for (const auto& h : c.free_of) catalog(h);
  } catch (const std::invalid_argument& e) {
    throw HuntError(e.what());
  }
  return c;
}

HuntConfig load_hunt_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HuntError("cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw HuntError("config " + path + ": " + e.what());
  }
  return hunt_config_from_json(j);
}

void write_atomically(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw HuntError("cannot write " + tmp);
    out << data;
    out.flush();
    if (!out) throw HuntError("write to " + tmp + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw HuntError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

namespace {

Json counts_json(int n, const HuntCounts& c) {
  return Json{{"n", n},
              {"enumerated", c.enumerated},
              {"filtered_in", c.filtered_in},
              {"pass", c.pass},
              {"not_applicable", c.not_applicable},
              {"budget_exhausted", c.budget_exhausted},
              {"fail", c.fail}};
}

Json per_n_json(const std::map<int, HuntCounts>& per_n) {
  Json a = Json::array();
  for (const auto& [n, c] : per_n) a.push_back(counts_json(n, c));
  return a;
}

std::map<int, HuntCounts> per_n_from_json(const Json& a) {
  std::map<int, HuntCounts> out;
  for (const auto& e : a) {
    HuntCounts c;
    c.enumerated = e.at("enumerated").get<std::uint64_t>();
    c.filtered_in = e.at("filtered_in").get<std::uint64_t>();
    c.pass = e.at("pass").get<std::uint64_t>();
    c.not_applicable = e.at("not_applicable").get<std::uint64_t>();
    c.budget_exhausted = e.at("budget_exhausted").get<std::uint64_t>();
    c.fail = e.at("fail").get<std::uint64_t>();
    out[e.at("n").get<int>()] = c;
  }
  return out;
}

Json checkpoint_json(const HuntReport& r, const HuntCursor& cursor) {
  return Json{{"schema", "dhc.hunt-checkpoint/1"},
              {"config_hash", hex(r.config_hash)},
              {"cursor", {{"n", cursor.n}, {"index", cursor.index}}},
              {"per_n", per_n_json(r.per_n)},
              {"violations", r.violations},
              {"retry", r.retry},
              {"timing", {{"wall_seconds", r.wall_seconds}, {"cpu_seconds", r.cpu_seconds}}}};
}

void check_writable(const std::string& path, const char* what) {
  if (path.empty()) return;
  fs::path parent = fs::path(path).parent_path();
  if (parent.empty()) parent = ".";
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) throw HuntError(std::string(what) + " directory " + parent.string() + " does not exist");
}

struct Outcome {
  bool filtered_in = false;
  VerdictStatus status = VerdictStatus::not_applicable;
  Json verdict;
};

Outcome evaluate(const HuntConfig& c, const std::vector<Graph>& patterns, const Graph& g) {
  Outcome o;
  if (c.omega.min || c.omega.max)
    if (!c.omega.admits(clique_number(g).value)) return o;
  if (!c.delta.admits(g.min_degree())) return o;
  if (c.kappa.min || c.kappa.max)
    if (!c.kappa.admits(vertex_connectivity(g))) return o;
  for (const auto& h : patterns)
    if (contains_induced(g, h)) return o;
  o.filtered_in = true;
  Verdict v = check_theorem(g, c.predicate, c.budget);
  o.status = v.status;
  if (v.status == VerdictStatus::fail) o.verdict = verdict_json(g, v);
  return o;
}

int worker_count(const HuntConfig& c) {
  if (const char* env = std::getenv("DHC_WORKERS")) {
    char* end = nullptr;
    long w = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || w < 1) throw HuntError("DHC_WORKERS must be a positive integer");
    return static_cast<int>(w);
  }
  return c.workers;
}

class Campaign {
 public:
  Campaign(const HuntConfig& c, const HuntControl& control) : c_(c), control_(control), workers_(worker_count(c)) {
    for (const auto& h : c.free_of) patterns_.push_back(catalog(h));
    report_.config_hash = c.hash();
    report_.config = c.semantic_json();
    report_.config["hash"] = hex(report_.config_hash);
  }

  HuntReport run() {
    check_writable(c_.checkpoint_path, "checkpoint");
    check_writable(c_.output_path, "output");
    check_writable(c_.retry_path, "retry");
    HuntCursor start{c_.n_min, 0};
    if (control_.resume && !c_.checkpoint_path.empty() && fs::exists(c_.checkpoint_path)) start = restore();
    const auto wall0 = std::chrono::steady_clock::now();
    const std::clock_t cpu0 = std::clock();
    const double wall_before = report_.wall_seconds, cpu_before = report_.cpu_seconds;
    auto stamp = [&] {
      report_.wall_seconds =
          wall_before + std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
      report_.cpu_seconds = cpu_before + double(std::clock() - cpu0) / CLOCKS_PER_SEC;
    };
    if (!c_.ingest_path.empty()) load_ingest();

    for (int n = start.n; n <= c_.n_max && !stopped_; ++n) {
      cursor_ = {n, n == start.n ? start.index : 0};
      report_.per_n[n];
      std::uint64_t idx = 0;
      std::vector<Graph> chunk;
      auto take = [&](const Graph& g) {
        if (idx++ < cursor_.index) return true;
        chunk.push_back(g);
        if (chunk.size() == static_cast<std::size_t>(c_.checkpoint_every)) {
          process(n, chunk, stamp);
          chunk.clear();
        }
        return !stopped_;
      };
      if (c_.ingest_path.empty()) {
        for_each_alpha2(n, take);
      } else {
        for (const auto& g : ingested_[n])
          if (!take(g)) break;
      }
      if (!stopped_ && !chunk.empty()) process(n, chunk, stamp);
      if (!stopped_) cursor_ = {n + 1, 0};
    }
    for (auto it = report_.per_n.begin(); it != report_.per_n.end();)
      it = (!c_.ingest_path.empty() && it->second.enumerated == 0) ? report_.per_n.erase(it) : std::next(it);

    stamp();
    report_.complete = !stopped_;
    if (stopped_) report_.resume_cursor = cursor_;
    save_checkpoint();
    if (!c_.output_path.empty()) write_atomically(c_.output_path, report_json(report_).dump(2) + "\n");
    if (!c_.retry_path.empty()) {
      std::string lines;
      for (const auto& r : report_.retry) lines += r.at("graph6").get<std::string>() + "\n";
      write_atomically(c_.retry_path, lines);
    }
    return report_;
  }

 private:
  HuntCursor restore() {
    std::ifstream in(c_.checkpoint_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw HuntError("checkpoint " + c_.checkpoint_path + " is unreadable: " + e.what());
    }
    if (j.value("config_hash", "") != hex(report_.config_hash))
      throw HuntError("checkpoint " + c_.checkpoint_path + " was written for a different config (hash " +
                      j.value("config_hash", "?") + ", expected " + hex(report_.config_hash) + ")");
    report_.per_n = per_n_from_json(j.at("per_n"));
    report_.violations = j.at("violations");
    report_.retry = j.at("retry");
    report_.wall_seconds = j.at("timing").at("wall_seconds").get<double>();
    report_.cpu_seconds = j.at("timing").at("cpu_seconds").get<double>();
    return {j.at("cursor").at("n").get<int>(), j.at("cursor").at("index").get<std::uint64_t>()};
  }

  void load_ingest() {
    auto r = ingest(c_.ingest_path, {.require_alpha2 = true, .complement = c_.ingest_complement});
    report_.config["ingest_rejected"] = r.rejected;
    for (auto& g : r.graphs)
      if (g.order() >= c_.n_min && g.order() <= c_.n_max) ingested_[g.order()].push_back(std::move(g));
  }

  template <class Stamp>
  void process(int n, const std::vector<Graph>& chunk, Stamp& stamp) {
    std::vector<Outcome> out(chunk.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
      for (std::size_t i; (i = next++) < chunk.size();) {
        try {
          out[i] = evaluate(c_, patterns_, chunk[i]);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    };
    const int w = std::min<int>(workers_, static_cast<int>(chunk.size()));
    if (w <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < w; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    auto& counts = report_.per_n[n];
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const std::uint64_t index = cursor_.index + i;
      ++counts.enumerated;
      if (!out[i].filtered_in) continue;
      ++counts.filtered_in;
      switch (out[i].status) {
        case VerdictStatus::pass: ++counts.pass; break;
        case VerdictStatus::not_applicable: ++counts.not_applicable; break;
        case VerdictStatus::budget_exhausted:
          ++counts.budget_exhausted;
          report_.retry.push_back({{"n", n}, {"index", index}, {"graph6", to_graph6(chunk[i])}});
          break;
        case VerdictStatus::fail:
          ++counts.fail;
          report_.violations.push_back({{"n", n}, {"index", index}, {"verdict", out[i].verdict}});
          break;
      }
    }
    cursor_.index += chunk.size();
    ++chunks_;
    stamp();
    save_checkpoint();
    if (control_.stop_after_chunks && chunks_ >= *control_.stop_after_chunks) stopped_ = true;
  }

  void save_checkpoint() {
    if (c_.checkpoint_path.empty()) return;
    write_atomically(c_.checkpoint_path, checkpoint_json(report_, cursor_).dump(2) + "\n");
  }

  const HuntConfig& c_;
  HuntControl control_;
  int workers_;
  std::vector<Graph> patterns_;
  std::map<int, std::vector<Graph>> ingested_;
  HuntReport report_;
  HuntCursor cursor_;
  int chunks_ = 0;
  bool stopped_ = false;
};

}  // namespace

Json report_json(const HuntReport& r, bool with_timing) {
  HuntCounts total;
  for (const auto& [n, c] : r.per_n) {
    total.enumerated += c.enumerated;
    total.filtered_in += c.filtered_in;
    total.pass += c.pass;
    total.not_applicable += c.not_applicable;
    total.budget_exhausted += c.budget_exhausted;
    total.fail += c.fail;
  }
  Json totals = counts_json(0, total);
  totals.erase("n");
  Json j{{"schema", "dhc.hunt-report/1"},
         {"config", r.config},
         {"complete", r.complete},
         {"per_n", per_n_json(r.per_n)},
         {"totals", totals},
         {"violations", r.violations},
         {"retry", r.retry},
         {"resume_cursor",
          r.resume_cursor ? Json{{"n", r.resume_cursor->n}, {"index", r.resume_cursor->index}} : Json()}};
  if (with_timing) j["timing"] = {{"wall_seconds", r.wall_seconds}, {"cpu_seconds", r.cpu_seconds}};
  return j;
}

HuntReport run_hunt(const HuntConfig& config, const HuntControl& control) {
  return Campaign(config, control).run();
}

}  // namespace dhc
