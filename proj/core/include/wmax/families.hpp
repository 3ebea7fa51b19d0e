#pragma once

#include <vector>

#include "wmax/compose.hpp"
#include "wmax/graph.hpp"

namespace wmax {

// Standard constructions, labeled canonically: cycles in circular order,
// paths in line order. cycle(2) is K_2 (an edge counts as a degenerate cycle).
Graph cycle(int n);     // n >= 2
Graph path(int n);      // n >= 1
Graph complete(int n);  // n >= 1

// k paths on t edges each, sharing one identified endvertex (center = 0).
// n = t*k + 1 vertices, homeomorphic to the star K_{1,k}.
Graph spider(int k, int t);  // k >= 3, t >= 1

// Two hub vertices joined by three internally disjoint paths of lengths
// a, b, c. Arguments are sorted; after sorting, at most one length-1 path is
// allowed (two would create a multi-edge). a+b+c-1 vertices, 2-connected.
Graph theta(int a, int b, int c);

// Parameters of the two-cycles-with-a-path family: cycle sizes a, b >= 2
// (an end of size 2 degenerates to an edge) joined by a path with p-1
// vertices, giving p blocks on n = a+b+p-3 vertices. Normalized to a <= b.
struct FamilyParams {
  int a, b, p;
  FamilyParams(int a_in, int b_in, int p_in);
  int n() const { return a + b + p - 3; }
};

// Chain spec [cycle(a), path(p-1), cycle(b)] attached at the path's
// endvertices; for p = 2 the middle part is a single vertex.
CompositeSpec two_cycles_path_spec(const FamilyParams& params);
Graph two_cycles_path(const FamilyParams& params);
Graph two_cycles_path(int a, int b, int p);

// Closed forms; every value is an exact integer.
long long closed_wiener_cycle(int n);             // n >= 2; n^3/8 or (n^3-n)/8
long long closed_wiener_path(int n);              // n >= 1; C(n+1,3)
long long closed_transmission_cycle(int n);       // n >= 2; n^2/4 or (n^2-1)/4
long long closed_transmission_path_end(int n);    // n >= 1; C(n,2)

// The distance vector shared by every vertex of the n-cycle: all twos, with
// a trailing one when n is even.
struct TwoNVector {
  int n = 0;
  std::vector<int> entries;
  long long weighted_sum() const;
};

TwoNVector two_n(int n);  // n >= 2

}  // namespace wmax
