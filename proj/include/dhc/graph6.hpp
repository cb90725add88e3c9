#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dhc/graph.hpp"

namespace dhc {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { malformed_header, out_of_range, bad_byte, truncated, trailing_garbage };
  Graph6Error(Kind kind, std::size_t offset, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

// Decodes one graph6 record. An optional ">>graph6<<" prefix and a trailing
// newline are accepted; anything else after the record is an error.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace dhc
