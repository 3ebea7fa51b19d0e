#pragma once

#include <utility>
#include <vector>

#include "wmax/graph.hpp"

namespace wmax {

// A block: maximal nonseparable subgraph (2-connected, or a single edge).
struct Block {
  std::vector<int> vertices;              // sorted
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographic
};

// Blocks and cut-vertices of a connected graph. Blocks are ordered by
// (smallest vertex, size, vertex list) so the decomposition is deterministic.
struct BlockDecomposition {
  int n = 0;
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;               // sorted
  std::vector<std::vector<int>> vertex_blocks;  // block ids containing v

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_cut_vertex(int v) const;
  // Vertices of the block that have a neighbor outside it.
  std::vector<int> attachments(int block_id) const;
};

// Throws std::invalid_argument if g is disconnected.
BlockDecomposition block_decomposition(const Graph& g);

// Number of blocks of a connected graph (p = n-1 iff tree, p = 1 iff
// nonseparable, p = 0 for a single vertex).
int block_count(const Graph& g);

// Bipartite incidence tree on blocks and cut-vertices.
struct BlocksTree {
  int block_nodes = 0;
  std::vector<int> cut_nodes;                  // cut vertices, sorted
  std::vector<std::pair<int, int>> edges;      // (block id, cut vertex)
};

BlocksTree blocks_tree(const BlockDecomposition& dec);

enum class SubgraphKind { terminal, traversal, internal };

struct SubgraphClass {
  SubgraphKind kind = SubgraphKind::internal;
  std::vector<int> attachment_vertices;  // sorted
};

// Classifies the union of the given blocks: terminal (one attachment),
// traversal (two), internal otherwise. The union must be connected.
SubgraphClass classify(const BlockDecomposition& dec,
                       const std::vector<int>& block_ids);

bool is_biconnected(const Graph& g);   // 2-connected: n >= 3, no cut-vertices
bool is_nonseparable(const Graph& g);  // 2-connected or K_2

}  // namespace wmax
