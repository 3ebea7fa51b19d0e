#pragma once

#include <optional>
#include <vector>

#include "wmax/graph.hpp"

namespace wmax {

// One link of a composition chain. The exit vertex of part i is identified
// with the entry vertex of part i+1. The first part has no entry and the
// last no exit; a part may be a single vertex (trivial part).
struct CompositePart {
  Graph graph;
  std::optional<int> entry;
  std::optional<int> exit;
};

struct CompositeSpec {
  std::vector<CompositePart> parts;
};

// Union of g1 and g2 with v2 identified onto v1. g1 keeps its labels, g2 is
// shifted above them. Both parts must be connected.
Graph amalgam(const Graph& g1, int v1, const Graph& g2, int v2);

// W of the amalgam, computed from part invariants without building it:
// W(g1) + W(g2) + w_{g1}(v1)*(n2-1) + w_{g2}(v2)*(n1-1).
long long wiener_pair(const Graph& g1, int v1, const Graph& g2, int v2);

// W of the materialized chain, computed from per-part transmissions and
// entry-to-exit distances. Cross-part distances are sums of the through
// distances of the parts in between; trivial parts contribute nothing.
long long wiener_chain(const CompositeSpec& spec);

// The graph obtained by successive amalgamation along the chain.
Graph materialize(const CompositeSpec& spec);

}  // namespace wmax
