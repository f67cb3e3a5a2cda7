#pragma once

#include <string>
#include <string_view>

#include "tutte/graph.hpp"

namespace tutte {

// graph6 text form: optional ">>graph6<<" header, N(n) length field,
// then the upper triangle in column-major order packed 6 bits per byte.
// Rejects anything outside printable 63..126 range, with the byte offset.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace tutte
