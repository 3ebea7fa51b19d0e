#include "wmax/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace wmax {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [1, " +
                                std::to_string(kMaxVertices) + "], got " +
                                std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) +
                                ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  adj_[static_cast<size_t>(u)] |= bit(v);
  adj_[static_cast<size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<size_t>(u)] &= ~bit(v);
  adj_[static_cast<size_t>(v)] &= ~bit(u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
  const int n = g.size();
  if (v < 0 || v >= n) throw std::invalid_argument("bfs root out of range");
  std::vector<int> dist(static_cast<size_t>(n), kUnreachable);
  dist[static_cast<size_t>(v)] = 0;
  std::uint64_t visited = bit(v), frontier = bit(v);
  int d = 0;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      next |= g.neighbors(std::countr_zero(f));
      f &= f - 1;
    }
    next &= ~visited;
    ++d;
    std::uint64_t m = next;
    while (m) {
      dist[static_cast<size_t>(std::countr_zero(m))] = d;
      m &= m - 1;
    }
    visited |= next;
    frontier = next;
  }
  return dist;
}

namespace {

// BFS that only accumulates level sizes. Returns false if g is disconnected.
// levels[d-1] receives the number of vertices at distance d from v.
bool bfs_levels(const Graph& g, int v, std::vector<int>& levels) {
  levels.clear();
  std::uint64_t visited = bit(v), frontier = bit(v);
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      next |= g.neighbors(std::countr_zero(f));
      f &= f - 1;
    }
    next &= ~visited;
    if (next) levels.push_back(std::popcount(next));
    visited |= next;
    frontier = next;
  }
  return visited == full_mask(g.size());
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g))
    throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<int> levels;
  return bfs_levels(g, 0, levels);
}

long long DistanceVector::weighted_sum() const {
  long long sum = 0;
  for (size_t i = 0; i < counts.size(); ++i)
    sum += static_cast<long long>(i + 1) * counts[i];
  return sum;
}

DistanceVector distance_vector(const Graph& g, int v) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument("distance_vector: vertex out of range");
  DistanceVector dv;
  dv.root = v;
  if (!bfs_levels(g, v, dv.counts))
    throw std::invalid_argument("distance_vector: graph is disconnected");
  return dv;
}

long long transmission(const Graph& g, int v) {
  return distance_vector(g, v).weighted_sum();
}

long long wiener(const Graph& g) {
  require_connected(g, "wiener");
  long long total = 0;
  std::vector<int> levels;
  for (int v = 0; v < g.size(); ++v) {
    bfs_levels(g, v, levels);
    for (size_t i = 0; i < levels.size(); ++i)
      total += static_cast<long long>(i + 1) * levels[i];
  }
  return total / 2;
}

int eccentricity(const Graph& g, int v) {
  return distance_vector(g, v).eccentricity();
}

}  // namespace wmax
