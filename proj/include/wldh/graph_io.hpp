#pragma once

#include <string>
#include <string_view>

#include "wldh/graph.hpp"

namespace wldh {

// graph6 interchange format (bit-exact per the format description shipped
// with nauty). Supports the 1-byte and 4-byte order encodings, i.e. graphs
// with up to 258047 vertices. An optional ">>graph6<<" header is accepted on
// input and never emitted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain edge-list text: "n m" header line, then one "u v" pair per line,
// 0-based vertex ids.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

} // namespace wldh
