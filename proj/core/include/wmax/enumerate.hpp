#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wmax/graph.hpp"

namespace wmax {

// Isomorph-free exhaustive enumeration of connected graphs, 1 <= n <= 10.
// Built level by level: every connected graph on k+1 vertices arises from a
// connected graph on k vertices by attaching one new vertex to a nonempty
// neighbor set (delete a non-cut vertex to see this), so expanding each
// class representative over all neighbor subsets and deduplicating by
// canonical code visits every class exactly once.

// Sorted canonical codes of all classes on n vertices. Levels are cached for
// the lifetime of the process. jobs = 0 picks the hardware thread count.
const std::vector<std::uint64_t>& connected_codes(int n, int jobs = 0);

// Calls fn once per isomorphism class, in ascending canonical-code order.
void for_each_connected(int n, const std::function<void(const Graph&)>& fn,
                        int jobs = 0);

// Materialized variant; fine for n <= 9, avoid for n = 10.
std::vector<Graph> enumerate_connected(int n, int jobs = 0);

}  // namespace wmax
