#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wmax {

// graph6 short form addresses at most 62 vertices; everything here sticks to
// that range so an adjacency row always fits one 64-bit word.
inline constexpr int kMaxVertices = 62;
inline constexpr int kUnreachable = -1;

// Simple undirected graph on vertices 0..n-1.
// One neighbor bitmask per vertex; no loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return n_; }
  std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Builds a graph from an edge list. Duplicate edges are collapsed.
// Throws std::invalid_argument on out-of-range vertices or loop edges.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Unweighted shortest-path distances from v, kUnreachable where no path.
std::vector<int> bfs_distances(const Graph& g, int v);

bool is_connected(const Graph& g);

// Counts of vertices at each distance 1..e(root) from the root.
struct DistanceVector {
  int root = 0;
  std::vector<int> counts;  // counts[i] = #vertices at distance i+1

  int eccentricity() const { return static_cast<int>(counts.size()); }
  long long weighted_sum() const;  // sum of (i+1) * counts[i]
};

// The following all require a connected graph and throw otherwise.
DistanceVector distance_vector(const Graph& g, int v);
long long transmission(const Graph& g, int v);  // sum of distances from v
long long wiener(const Graph& g);               // sum over unordered pairs
int eccentricity(const Graph& g, int v);

}  // namespace wmax
