#pragma once

#include <string>
#include <string_view>

#include "wmax/graph.hpp"

namespace wmax {

// graph6 interchange format, short form only (n <= 62, single size byte,
// no ">>graph6<<" header). One graph per line, LF terminated on output.
std::string graph6_encode(const Graph& g);

// Throws std::runtime_error on malformed input (bad characters, wrong
// length, nonzero padding bits, size out of range).
Graph graph6_decode(std::string_view text);

}  // namespace wmax
