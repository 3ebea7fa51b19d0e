#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmax/graph.hpp"

namespace wmax {

// Canonical forms for small graphs via branch-and-bound over vertex
// orderings: the canonical labeling maximizes the upper-triangle adjacency
// bit string read in column order. Exact and deterministic; intended for
// n <= 16 (the enumeration range plus slack), not for large graphs.

// perm[position] = original vertex. Throws for n > 16.
std::vector<int> canonical_labeling(const Graph& g);

// Relabeled copy: result.has_edge(i, j) == g.has_edge(perm[i], perm[j]).
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

// Upper-triangle bits of the adjacency matrix in column order, packed into
// one word; requires n <= 11 so the C(n,2) bits fit.
std::uint64_t adjacency_code(const Graph& g);
std::uint64_t canonical_code(const Graph& g);
// Allocation-free variant for the enumerator: adjacency as n bitmask rows.
std::uint64_t canonical_code(int n, const std::uint64_t* rows);
Graph graph_from_code(int n, std::uint64_t code);

bool isomorphic(const Graph& a, const Graph& b);  // n <= 16

}  // namespace wmax
