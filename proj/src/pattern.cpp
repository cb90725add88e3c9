#include "dhc/pattern.hpp"

#include <algorithm>

#include "dhc/catalog.hpp"

namespace dhc {

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pattern)
      : host_(host), pat_(pattern), k_(pattern.order()), mapping_(k_, -1) {
    order_.resize(k_);
    for (int u = 0; u < k_; ++u) order_[u] = u;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pat_.degree(a) > pat_.degree(b); });
  }

  bool run() { return place(0, VertexSet{}); }
  const std::vector<int>& mapping() const { return mapping_; }

 private:
  bool place(int i, VertexSet used) {
    if (i == k_) return true;
    const int u = order_[i];
    const int need_deg = pat_.degree(u);
    const int need_non = k_ - 1 - need_deg;
    VertexSet cand = host_.vertices() - used;
    for (int j = 0; j < i; ++j) {
      int w = order_[j];
      VertexSet nb = host_.neighbors(mapping_[w]);
      cand &= pat_.has_edge(u, w) ? nb : nb.complement(host_.order());
    }
    for (int v : cand) {
      int d = host_.degree(v);
      if (d < need_deg || host_.order() - 1 - d < need_non) continue;
      mapping_[u] = v;
      VertexSet next = used;
      next.insert(v);
      if (place(i + 1, next)) return true;
    }
    mapping_[u] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  int k_;
  std::vector<int> order_;
  std::vector<int> mapping_;
};

}  // namespace

std::optional<InducedWitness> find_induced(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  InducedSearch s(host, pattern);
  if (!s.run()) return std::nullopt;
  return InducedWitness{s.mapping()};
}

bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(host, pattern).has_value();
}

bool is_induced_witness(const Graph& host, const Graph& pattern, const InducedWitness& w) {
  if (static_cast<int>(w.mapping.size()) != pattern.order()) return false;
  VertexSet image;
  for (int v : w.mapping) {
    if (v < 0 || v >= host.order() || image.contains(v)) return false;
    image.insert(v);
  }
  for (int a = 0; a < pattern.order(); ++a)
    for (int b = a + 1; b < pattern.order(); ++b)
      if (pattern.has_edge(a, b) != host.has_edge(w.mapping[a], w.mapping[b])) return false;
  return true;
}

std::map<std::string, bool> is_free(const Graph& host, const std::vector<std::string>& names) {
  std::map<std::string, bool> out;
  for (const auto& name : names) out[name] = !contains_induced(host, catalog(name));
  return out;
}

}  // namespace dhc
