#include "wmax/blocks.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace wmax {

namespace {

// Hopcroft-Tarjan lowlink DFS with an edge stack; pops one block each time a
// child subtree cannot reach above the current vertex.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<Block> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph),
        disc(static_cast<size_t>(graph.size()), 0),
        low(static_cast<size_t>(graph.size()), 0) {}

  void pop_block(std::pair<int, int> top_edge) {
    Block b;
    std::set<int> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e.first > e.second) std::swap(e.first, e.second);
      b.edges.push_back(e);
      if ((e.first == std::min(top_edge.first, top_edge.second)) &&
          (e.second == std::max(top_edge.first, top_edge.second)))
        break;
    }
    b.vertices.assign(verts.begin(), verts.end());
    std::sort(b.edges.begin(), b.edges.end());
    blocks.push_back(std::move(b));
  }

  void dfs(int u, int parent) {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = ++timer;
    std::uint64_t nbrs = g.neighbors(u);
    while (nbrs) {
      const int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (v == parent) continue;
      if (disc[static_cast<size_t>(v)] == 0) {
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)])
          pop_block({u, v});
      } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
        edge_stack.emplace_back(u, v);
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
      }
    }
  }
};

}  // namespace

bool BlockDecomposition::is_cut_vertex(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::attachments(int block_id) const {
  std::vector<int> out;
  for (int v : blocks[static_cast<size_t>(block_id)].vertices)
    if (is_cut_vertex(v)) out.push_back(v);
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("block_decomposition: graph is disconnected");
  BlockFinder finder(g);
  finder.dfs(0, -1);

  BlockDecomposition dec;
  dec.n = g.size();
  dec.blocks = std::move(finder.blocks);
  std::sort(dec.blocks.begin(), dec.blocks.end(),
            [](const Block& a, const Block& b) {
              const int ma = a.vertices.front(), mb = b.vertices.front();
              if (ma != mb) return ma < mb;
              if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() < b.vertices.size();
              return a.vertices < b.vertices;
            });

  dec.vertex_blocks.assign(static_cast<size_t>(g.size()), {});
  for (size_t i = 0; i < dec.blocks.size(); ++i)
    for (int v : dec.blocks[i].vertices)
      dec.vertex_blocks[static_cast<size_t>(v)].push_back(static_cast<int>(i));
  // a vertex is a cut-vertex iff it lies in at least two blocks
  for (int v = 0; v < g.size(); ++v)
    if (dec.vertex_blocks[static_cast<size_t>(v)].size() >= 2)
      dec.cut_vertices.push_back(v);
  return dec;
}

int block_count(const Graph& g) {
  return block_decomposition(g).block_count();
}

BlocksTree blocks_tree(const BlockDecomposition& dec) {
  BlocksTree tree;
  tree.block_nodes = dec.block_count();
  tree.cut_nodes = dec.cut_vertices;
  for (int b = 0; b < dec.block_count(); ++b)
    for (int v : dec.blocks[static_cast<size_t>(b)].vertices)
      if (dec.is_cut_vertex(v)) tree.edges.emplace_back(b, v);
  return tree;
}

SubgraphClass classify(const BlockDecomposition& dec,
                       const std::vector<int>& block_ids) {
  if (block_ids.empty())
    throw std::invalid_argument("classify: empty block selection");
  std::vector<char> selected(static_cast<size_t>(dec.block_count()), 0);
  for (int id : block_ids) {
    if (id < 0 || id >= dec.block_count())
      throw std::invalid_argument("classify: block id out of range");
    selected[static_cast<size_t>(id)] = 1;
  }

  // connectivity of the union, walked through shared cut-vertices
  std::vector<char> seen(static_cast<size_t>(dec.block_count()), 0);
  std::vector<int> stack{block_ids.front()};
  seen[static_cast<size_t>(block_ids.front())] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    for (int v : dec.blocks[static_cast<size_t>(b)].vertices)
      for (int b2 : dec.vertex_blocks[static_cast<size_t>(v)])
        if (selected[static_cast<size_t>(b2)] && !seen[static_cast<size_t>(b2)]) {
          seen[static_cast<size_t>(b2)] = 1;
          ++reached;
          stack.push_back(b2);
        }
  }
  int total = 0;
  for (char s : selected) total += s;
  if (reached != total)
    throw std::invalid_argument("classify: block union is disconnected");

  SubgraphClass result;
  std::set<int> attach;
  for (int b = 0; b < dec.block_count(); ++b) {
    if (!selected[static_cast<size_t>(b)]) continue;
    for (int v : dec.blocks[static_cast<size_t>(b)].vertices)
      for (int b2 : dec.vertex_blocks[static_cast<size_t>(v)])
        if (!selected[static_cast<size_t>(b2)]) attach.insert(v);
  }
  result.attachment_vertices.assign(attach.begin(), attach.end());
  switch (result.attachment_vertices.size()) {
    case 1: result.kind = SubgraphKind::terminal; break;
    case 2: result.kind = SubgraphKind::traversal; break;
    default: result.kind = SubgraphKind::internal; break;
  }
  return result;
}

bool is_biconnected(const Graph& g) {
  if (g.size() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

bool is_nonseparable(const Graph& g) {
  if (g.size() == 2) return g.has_edge(0, 1);
  return is_biconnected(g);
}

}  // namespace wmax
