#include "dhc/graph6.hpp"

namespace dhc {

Graph6Error::Graph6Error(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
  using K = Graph6Error::Kind;
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  if (pos >= text.size()) throw Graph6Error(K::malformed_header, pos, "missing order byte");
  const std::size_t order_at = pos;
  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw Graph6Error(K::out_of_range, pos, "order needs 36-bit encoding, limit is 64");
    if (pos + 4 > text.size()) throw Graph6Error(K::malformed_header, pos, "truncated 18-bit order");
    for (int i = 1; i <= 3; ++i) {
      char c = text[pos + i];
      if (!printable(c)) throw Graph6Error(K::malformed_header, pos + i, "invalid order byte");
      n = (n << 6) | (c - 63);
    }
    if (n < 63) throw Graph6Error(K::malformed_header, pos, "non-minimal 18-bit order");
    pos += 4;
  } else {
    if (!printable(text[pos])) throw Graph6Error(K::malformed_header, pos, "invalid order byte");
    n = text[pos] - 63;
    pos += 1;
  }
  if (n > kMaxVertices)
    throw Graph6Error(K::out_of_range, order_at,
                      "order " + std::to_string(n) + " exceeds 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + need)
    throw Graph6Error(K::truncated, text.size(), "expected " + std::to_string(need) + " data bytes");

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      char c = text[at];
      if (!printable(c)) throw Graph6Error(K::bad_byte, at, "byte outside [63, 126]");
      if (((c - 63) >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  std::size_t end = pos + need;
  if (need > 0) {
    char last = text[end - 1];
    if (!printable(last)) throw Graph6Error(K::bad_byte, end - 1, "byte outside [63, 126]");
    int pad = static_cast<int>(need * 6 - bits);
    if (((last - 63) & ((1 << pad) - 1)) != 0)
      throw Graph6Error(K::bad_byte, end - 1, "nonzero padding bits");
  }
  if (end != text.size()) throw Graph6Error(K::trailing_garbage, end, "trailing bytes after record");
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

}  // namespace dhc
