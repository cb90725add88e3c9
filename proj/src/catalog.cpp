#include "dhc/catalog.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace dhc {

namespace {

Graph cycle(int k) {
  if (k < 3) throw UnknownGraphName("C_k needs k >= 3");
  GraphBuilder b(k);
  for (int v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
  return b.build();
}

Graph path(int k) {
  GraphBuilder b(k);
  for (int v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph wheel(int k, int missing_spokes) {
  if (k < 3) throw UnknownGraphName("W_k needs k >= 3");
  GraphBuilder b(k + 1);
  for (int i = 0; i < k; ++i) b.add_edge(1 + i, 1 + (i + 1) % k);
  for (int i = missing_spokes; i < k; ++i) b.add_edge(0, 1 + i);
  return b.build();
}

Graph from_list(int n, std::initializer_list<Edge> es) { return Graph::from_edges(n, es); }

// v1..v8 of the drawing map to 0..7.
Graph fig2(int extra) {
  std::vector<Edge> es = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {2, 5}, {0, 6}, {1, 6},
                          {3, 6}, {4, 6}, {1, 7}, {2, 7}, {4, 7}, {5, 7}, {0, 2}, {3, 5}};
  if (extra >= 1) es.emplace_back(2, 3);
  if (extra >= 2) es.emplace_back(0, 5);
  return Graph::from_edges(8, es);
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

std::optional<int> parse_index(std::string_view s) {
  int k = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (ec != std::errc() || p != s.data() + s.size() || k < 0 || k > kMaxVertices) return std::nullopt;
  return k;
}

Graph atom(std::string_view name) {
  if (name == "hammer") return from_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
  if (name == "kite") return from_list(5, {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {3, 1}, {2, 3}});
  if (name == "fig2_a") return fig2(0);
  if (name == "fig2_b") return fig2(1);
  if (name == "fig2_c") return fig2(2);
  if (name == "petersen") return petersen();

  if (name.size() >= 3 && name[1] == '_') {
    char family = name[0];
    std::string_view rest = name.substr(2);
    std::string_view suffix;
    if (auto us = rest.find('_'); us != std::string_view::npos) {
      suffix = rest.substr(us + 1);
      rest = rest.substr(0, us);
    }
    auto k = parse_index(rest);
    if (!k) throw UnknownGraphName("bad size in graph name '" + std::string(name) + "'");
    int drop = suffix.empty() ? 0 : suffix == "minus" ? 1 : suffix == "less" ? 2 : -1;
    if (drop < 0) throw UnknownGraphName("unknown modifier in '" + std::string(name) + "'");
    switch (family) {
      case 'K': {
        if (drop > 0 && *k < drop + 1) throw UnknownGraphName("K_k modifier needs larger k");
        GraphBuilder b(*k);
        for (int u = 0; u < *k; ++u)
          for (int v = u + 1; v < *k; ++v) b.add_edge(u, v);
        if (drop >= 1) b.remove_edge(0, 1);
        if (drop >= 2) b.remove_edge(0, 2);
        return b.build();
      }
      case 'W':
        if (*k + 1 > kMaxVertices) throw UnknownGraphName("wheel too large");
        return wheel(*k, drop);
      case 'C':
        if (drop == 0) return cycle(*k);
        break;
      case 'P':
        if (drop == 0) return path(*k);
        break;
      default:
        break;
    }
  }
  throw UnknownGraphName("unknown graph name '" + std::string(name) + "'");
}

class NameParser {
 public:
  explicit NameParser(std::string_view s) : s_(s) {}

  Graph parse() {
    Graph g = expr();
    if (pos_ != s_.size()) fail("unexpected input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UnknownGraphName("cannot parse graph name '" + std::string(s_) + "' at " +
                           std::to_string(pos_) + ": " + why);
  }

  enum class Op { none, join, unite };

  Op peek_op() {
    if (pos_ >= s_.size()) return Op::none;
    if (s_[pos_] == '+') return Op::join;
    if (s_[pos_] == 'U' || s_[pos_] == '|') return Op::unite;
    if (s_.substr(pos_, 3) == "∪") return Op::unite;
    return Op::none;
  }

  void skip_op() { pos_ += s_.substr(pos_, 3) == "∪" ? 3 : 1; }

  Graph expr() {
    Graph g = term();
    for (Op op = peek_op(); op != Op::none; op = peek_op()) {
      skip_op();
      Graph rhs = term();
      g = op == Op::join ? join(g, rhs) : disjoint_union(g, rhs);
    }
    return g;
  }

  Graph term() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int count = 1;
    if (pos_ > start) {
      auto k = parse_index(s_.substr(start, pos_ - start));
      if (!k) fail("bad copy count");
      count = *k;
    }
    Graph g;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      g = expr();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      std::size_t a = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') &&
             !(pos_ > a && s_[pos_] == 'U' && s_[pos_ - 1] != '_'))
        ++pos_;
      if (pos_ == a) fail("expected a graph");
      g = atom(s_.substr(a, pos_ - a));
    }
    return count == 1 ? g : copies(count, g);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph catalog(std::string_view name) {
  try {
    return NameParser(name).parse().with_label(std::string(name));
  } catch (const GraphSizeError& e) {
    throw UnknownGraphName(std::string(name) + ": " + e.what());
  }
}

const std::vector<std::string>& main_theorem_patterns() {
  static const std::vector<std::string> names = {
      "W_4_minus", "W_4",       "2K_1+P_4", "K_2+2K_2", "K_2+(K_1∪K_3)", "W_5_less",
      "W_5_minus", "W_5",       "K_7_less", "K_7_minus", "K_7",              "K_1+(K_1∪K_5)"};
  return names;
}

const std::vector<std::string>& census_names(int n) {
  static const std::vector<std::string> four = {
      "2K_2", "K_1∪K_3", "P_4", "K_1+(K_1∪K_2)", "C_4", "K_4_minus", "K_4"};
  static const std::vector<std::string> five = {
      "K_1∪K_4", "K_2∪K_3", "K_1+(K_1∪K_3)", "hammer",   "kite",
      "C_5",          "K_1+2K_2",     "K_1+P_4",            "W_4_less", "W_4_minus",
      "W_4",          "K_5_less",     "K_5_minus",          "K_5"};
  if (n == 4) return four;
  if (n == 5) return five;
  throw std::invalid_argument("no named census for n = " + std::to_string(n));
}

std::vector<std::string> manifest_names() {
  std::vector<std::string> out = {"hammer", "kite", "fig2_a", "fig2_b", "fig2_c", "petersen"};
  for (const auto& s : main_theorem_patterns()) out.push_back(s);
  for (int n : {4, 5})
    for (const auto& s : census_names(n)) out.push_back(s);
  return out;
}

}  // namespace dhc
