#include "dhc/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "dhc/graph6.hpp"

namespace dhc {

namespace {

using Colors = std::vector<int>;
using Code = std::vector<std::uint64_t>;

// Equitable refinement. Colours are ranks 0..k-1; the relative order of the
// input colours is preserved and new splits are ordered by neighbour counts,
// so the result depends only on the isomorphism type of (graph, colouring).
void refine(const Graph& g, Colors& color) {
  const int n = g.order();
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  int classes = -1;
  for (;;) {
    int k = *std::max_element(color.begin(), color.end()) + 1;
    if (k == classes || k == n) return;
    std::vector<std::uint64_t> cell(k, 0);
    for (int v = 0; v < n; ++v) cell[color[v]] |= std::uint64_t{1} << v;
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.resize(k + 1);
      s[0] = color[v];
      std::uint64_t nb = g.neighbors(v).bits();
      for (int c = 0; c < k; ++c) s[c + 1] = std::popcount(nb & cell[c]);
      sig[v].second = v;
    }
    std::sort(sig.begin(), sig.end());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      color[sig[i].second] = rank;
    }
    classes = k;
  }
}

Colors normalize(const Colors& raw) {
  Colors sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), raw[v]) - sorted.begin());
  return out;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.graph = Graph::empty(0);
      return out;
    }
    Colors start(n_, 0);
    search(start, 0);
    out.labeling = best_perm_;
    out.graph = g_.permuted(best_perm_).with_label("");
    out.automorphisms = std::move(generators_);
    return out;
  }

 private:
  static constexpr int kContinue = -1;

  Code code_of(const Colors& perm) const {
    Code code(n_, 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (int w : g_.neighbors(v)) row |= std::uint64_t{1} << perm[w];
      code[perm[v]] = row;
    }
    return code;
  }

  static std::vector<int> inverse(const Colors& p) {
    std::vector<int> inv(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) inv[p[v]] = static_cast<int>(v);
    return inv;
  }

  void add_automorphism(const Colors& reference, const Colors& perm) {
    auto inv = inverse(reference);
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv[perm[v]];
      identity &= gamma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int leaf(const Colors& perm, int depth) {
    Code code = code_of(perm);
    if (first_code_.empty()) {
      first_code_ = best_code_ = code;
      first_perm_ = best_perm_ = perm;
      first_path_ = path_;
      return kContinue;
    }
    if (code == first_code_) {
      add_automorphism(first_perm_, perm);
      int d = 0;
      while (d < depth && path_[d] == first_path_[d]) ++d;
      return d;
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_perm_ = perm;
    } else if (code == best_code_) {
      add_automorphism(best_perm_, perm);
    }
    return kContinue;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise.
  UnionFind stabilizer_orbits() const {
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  int search(Colors color, int depth) {
    refine(g_, color);
    int k = *std::max_element(color.begin(), color.end()) + 1;
    if (k == n_) return leaf(color, depth);

    std::vector<int> size(k, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> explored;
    std::size_t seen_generators = 0;
    std::optional<UnionFind> orbits;
    for (int w = 0; w < n_; ++w) {
      if (color[w] != target) continue;
      if (!orbits || seen_generators != generators_.size()) {
        orbits = stabilizer_orbits();
        seen_generators = generators_.size();
      }
      int rw = orbits->find(w);
      if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbits->find(e) == rw; }))
        continue;
      Colors child(n_);
      for (int v = 0; v < n_; ++v) child[v] = 2 * color[v] + 1;
      child[w] = 2 * color[w];
      path_.push_back(w);
      int r = search(normalize(child), depth + 1);
      path_.pop_back();
      explored.push_back(w);
      if (r != kContinue && r < depth) return r;
    }
    return kContinue;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_, first_path_;
  Colors first_perm_, best_perm_;
  Code first_code_, best_code_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g).graph); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace dhc
