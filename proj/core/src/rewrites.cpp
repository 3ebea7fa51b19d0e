#include "wmax/rewrites.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include "wmax/canonical.hpp"
#include "wmax/compose.hpp"
#include "wmax/families.hpp"
#include "wmax/graph6.hpp"

namespace wmax {

const char* rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::cyclize_terminal: return "cyclize_terminal";
    case RewriteRule::cyclize_traversal: return "cyclize_traversal";
    case RewriteRule::merge_cycle_pair: return "merge_cycle_pair";
    case RewriteRule::reattach_terminal_pair: return "reattach_terminal_pair";
  }
  return "?";
}

namespace {

int block_size(const Block& b) { return static_cast<int>(b.vertices.size()); }

bool is_cycle_block(const Block& b) {
  if (block_size(b) == 2) return true;  // C_2 = K_2 by convention
  return b.edges.size() == b.vertices.size();  // 2-connected with |E| == |V|
}

// distances within the block's edge set only
std::vector<int> block_distances(const Graph& g, const Block& b, int from) {
  std::vector<int> dist(static_cast<size_t>(g.size()), kUnreachable);
  dist[static_cast<size_t>(from)] = 0;
  std::vector<int> queue{from};
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (auto [x, y] : b.edges) {
      const int w = (x == u) ? y : (y == u) ? x : -1;
      if (w >= 0 && dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int block_distance(const Graph& g, const Block& b, int from, int to) {
  return block_distances(g, b, from)[static_cast<size_t>(to)];
}

// vertex of a cycle (or K_2) block at maximum distance from v; odd cycles
// have two antipodal candidates, resolved to the smaller label
int antipodal_in_block(const Graph& g, const Block& b, int v) {
  const auto dist = block_distances(g, b, v);
  const int target = block_size(b) / 2;
  for (int w : b.vertices)
    if (dist[static_cast<size_t>(w)] == target) return w;
  throw std::logic_error("antipodal_in_block: no vertex at target distance");
}

Graph replace_block_edges(const Graph& g, const Block& b,
                          const std::vector<std::pair<int, int>>& new_edges) {
  Graph out = g;
  for (auto [u, v] : b.edges) out.remove_edge(u, v);
  for (auto [u, v] : new_edges) out.add_edge(u, v);
  return out;
}

std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& order) {
  std::vector<std::pair<int, int>> edges;
  const size_t m = order.size();
  for (size_t i = 0; i < m; ++i) {
    const int u = order[i], v = order[(i + 1) % m];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (m == 2) edges.pop_back();  // two vertices, one edge
  return edges;
}

const Block& checked_block(const BlockDecomposition& dec, int id,
                           const char* op) {
  if (id < 0 || id >= dec.block_count())
    throw std::invalid_argument(std::string(op) + ": block id out of range");
  return dec.blocks[static_cast<size_t>(id)];
}

RewriteResult identity_result(const Graph& g, RewriteRule rule) {
  return RewriteResult{g, g, 0, rule, false};
}

RewriteResult finish(const Graph& g, Graph after, RewriteRule rule,
                     bool strict) {
  const long long dw = wiener(after) - wiener(g);
  return RewriteResult{g, std::move(after), dw, rule, strict};
}

}  // namespace

RewriteResult cyclize_terminal(const Graph& g, int block_id) {
  const BlockDecomposition dec = block_decomposition(g);
  const Block& b = checked_block(dec, block_id, "cyclize_terminal");
  if (dec.attachments(block_id).size() != 1)
    throw std::invalid_argument("cyclize_terminal: block is not terminal");
  if (block_size(b) < 3)
    throw std::invalid_argument(
        "cyclize_terminal: block has fewer than 3 vertices");
  if (is_cycle_block(b))
    return identity_result(g, RewriteRule::cyclize_terminal);
  return finish(g, replace_block_edges(g, b, cycle_edges(b.vertices)),
                RewriteRule::cyclize_terminal, true);
}

RewriteResult cyclize_traversal(const Graph& g, int block_id) {
  const BlockDecomposition dec = block_decomposition(g);
  const Block& b = checked_block(dec, block_id, "cyclize_traversal");
  const auto attach = dec.attachments(block_id);
  if (attach.size() != 2)
    throw std::invalid_argument("cyclize_traversal: block is not traversal");
  const int m = block_size(b);
  if (m < 3)
    throw std::invalid_argument(
        "cyclize_traversal: block has fewer than 3 vertices");
  const int v1 = attach[0], v2 = attach[1];
  if (is_cycle_block(b) && block_distance(g, b, v1, v2) == m / 2)
    return identity_result(g, RewriteRule::cyclize_traversal);
  // v1 at position 0, v2 at the antipodal position, the rest in sorted order
  std::vector<int> order(static_cast<size_t>(m), -1);
  order[0] = v1;
  order[static_cast<size_t>(m / 2)] = v2;
  size_t pos = 1;
  for (int w : b.vertices) {
    if (w == v1 || w == v2) continue;
    if (pos == static_cast<size_t>(m / 2)) ++pos;
    order[pos++] = w;
  }
  return finish(g, replace_block_edges(g, b, cycle_edges(order)),
                RewriteRule::cyclize_traversal, true);
}

std::pair<RewriteResult, RewriteResult> reattach_terminal_pair(const Graph& g,
                                                               int block1,
                                                               int block2) {
  const BlockDecomposition dec = block_decomposition(g);
  if (dec.block_count() < 3)
    throw std::invalid_argument(
        "reattach_terminal_pair: need at least 3 blocks");
  if (block1 == block2)
    throw std::invalid_argument("reattach_terminal_pair: blocks must differ");
  const Block& b1 = checked_block(dec, block1, "reattach_terminal_pair");
  const Block& b2 = checked_block(dec, block2, "reattach_terminal_pair");
  int v[2], u[2];
  const Block* blk[2] = {&b1, &b2};
  for (int i = 0; i < 2; ++i) {
    const int id = (i == 0) ? block1 : block2;
    const auto attach = dec.attachments(id);
    if (attach.size() != 1)
      throw std::invalid_argument(
          "reattach_terminal_pair: block is not terminal");
    if (!is_cycle_block(*blk[i]))
      throw std::invalid_argument(
          "reattach_terminal_pair: block is not a cycle or K_2");
    v[i] = attach[0];
    u[i] = antipodal_in_block(g, *blk[i], v[i]);
  }

  // rebuild a moved block as a cycle through its vertices with the old
  // attachment replaced by the target vertex
  auto moved = [&](const Block& b, int old_attach, int target) {
    std::vector<int> verts;
    for (int w : b.vertices) verts.push_back(w == old_attach ? target : w);
    std::sort(verts.begin(), verts.end());
    Graph out = g;
    for (auto [x, y] : b.edges) out.remove_edge(x, y);
    for (auto [x, y] : cycle_edges(verts)) out.add_edge(x, y);
    return out;
  };

  Graph after1 = moved(b1, v[0], u[1]);  // block1 reattached at u2
  Graph after2 = moved(b2, v[1], u[0]);  // block2 reattached at u1
  const long long w0 = wiener(g);
  const long long d1 = wiener(after1) - w0;
  const long long d2 = wiener(after2) - w0;
  const int dist = bfs_distances(g, u[0])[static_cast<size_t>(u[1])];
  const bool guaranteed = 2 * dist < g.size() - 1;  // d(u1,u2) < (n-1)/2
  RewriteResult r1{g, std::move(after1), d1,
                   RewriteRule::reattach_terminal_pair, guaranteed && d1 >= d2};
  RewriteResult r2{g, std::move(after2), d2,
                   RewriteRule::reattach_terminal_pair, guaranteed && d2 >= d1};
  return {std::move(r1), std::move(r2)};
}

namespace {

// Chain-position data for merge_cycle_pair: g decomposes as
// side0 -(v1)- cycle1 -(shared)- cycle2 -(v2)- side3, side0 <= side3.
struct ChainSpec {
  int cycle1 = 0, cycle2 = 0;     // block ids
  int shared = 0;                 // cut vertex between the two cycles
  int v1 = 0, v2 = 0;             // outer attachments (or antipodal picks)
  std::vector<int> side0, side3;  // vertex sets including v1 / v2
};

// vertices reachable from v without using the block's edges (v included)
std::vector<int> side_vertices(const Graph& g, const Block& b, int v) {
  std::vector<char> seen(static_cast<size_t>(g.size()), 0);
  std::vector<int> queue{v};
  seen[static_cast<size_t>(v)] = 1;
  auto blocked = [&](int x, int y) {
    const auto [lo, hi] = std::minmax(x, y);
    return std::binary_search(b.edges.begin(), b.edges.end(),
                              std::make_pair(lo, hi));
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    std::uint64_t nbrs = g.neighbors(x);
    while (nbrs) {
      const int y = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (seen[static_cast<size_t>(y)] || blocked(x, y)) continue;
      seen[static_cast<size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::optional<ChainSpec> chain_position(const Graph& g,
                                        const BlockDecomposition& dec,
                                        int id1, int id2, std::string* why) {
  auto fail = [&](const char* msg) -> std::optional<ChainSpec> {
    if (why) *why = msg;
    return std::nullopt;
  };
  const Block& b1 = dec.blocks[static_cast<size_t>(id1)];
  const Block& b2 = dec.blocks[static_cast<size_t>(id2)];
  if (!is_cycle_block(b1) || !is_cycle_block(b2))
    return fail("blocks must be cycles (or K_2)");
  std::vector<int> common;
  std::set_intersection(b1.vertices.begin(), b1.vertices.end(),
                        b2.vertices.begin(), b2.vertices.end(),
                        std::back_inserter(common));
  if (common.size() != 1) return fail("blocks do not share a cut vertex");
  const int shared = common.front();
  if (dec.vertex_blocks[static_cast<size_t>(shared)].size() != 2)
    return fail("other blocks attach at the shared cut vertex");

  ChainSpec spec;
  spec.cycle1 = id1;
  spec.cycle2 = id2;
  spec.shared = shared;
  const Block* blocks[2] = {&b1, &b2};
  int outer[2];
  for (int i = 0; i < 2; ++i) {
    const auto attach = dec.attachments(i == 0 ? id1 : id2);
    if (attach.size() > 2) return fail("cycle has more than two attachments");
    int other = -1;
    for (int a : attach)
      if (a != shared) other = a;
    if (other == -1) {
      outer[i] = antipodal_in_block(g, *blocks[i], shared);  // terminal cycle
    } else {
      const int m = block_size(*blocks[i]);
      if (block_distance(g, *blocks[i], other, shared) != m / 2)
        return fail("attachments are not antipodal in the cycle");
      outer[i] = other;
    }
  }
  spec.v1 = outer[0];
  spec.v2 = outer[1];
  spec.side0 = side_vertices(g, b1, spec.v1);
  spec.side3 = side_vertices(g, b2, spec.v2);
  if (spec.side0.size() > spec.side3.size()) {
    std::swap(spec.cycle1, spec.cycle2);
    std::swap(spec.v1, spec.v2);
    std::swap(spec.side0, spec.side3);
  }
  if (spec.side3.size() < 2) return fail("need at least an edge on one side");
  return spec;
}

Graph induced_sorted(const Graph& g, const std::vector<int>& verts) {
  Graph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

int index_of(const std::vector<int>& verts, int v) {
  return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                          verts.begin());
}

RewriteResult merge_from_spec(const Graph& g, const BlockDecomposition& dec,
                              const ChainSpec& spec) {
  const int n1 = block_size(dec.blocks[static_cast<size_t>(spec.cycle1)]);
  const int n2 = block_size(dec.blocks[static_cast<size_t>(spec.cycle2)]);
  const int n0 = static_cast<int>(spec.side0.size());
  const int n3 = static_cast<int>(spec.side3.size());

  // replacement chain: side0 - C_{n1+n2-2} - C_2 - side3, the big cycle
  // traversed between antipodal vertices
  const int big = n1 + n2 - 2;
  CompositeSpec chain;
  chain.parts.push_back({induced_sorted(g, spec.side0), std::nullopt,
                         index_of(spec.side0, spec.v1)});
  chain.parts.push_back({cycle(big), 0, big / 2});
  chain.parts.push_back({cycle(2), 0, 1});
  chain.parts.push_back({induced_sorted(g, spec.side3),
                         index_of(spec.side3, spec.v2), std::nullopt});
  Graph after = materialize(chain);

  const bool equality = (n2 == 2) || (n1 == 2 && n0 == n3);
  return finish(g, std::move(after), RewriteRule::merge_cycle_pair, !equality);
}

}  // namespace

RewriteResult merge_cycle_pair(const Graph& g, int block1, int block2) {
  const BlockDecomposition dec = block_decomposition(g);
  checked_block(dec, block1, "merge_cycle_pair");
  checked_block(dec, block2, "merge_cycle_pair");
  if (block1 == block2)
    throw std::invalid_argument("merge_cycle_pair: blocks must differ");
  std::string why;
  auto spec = chain_position(g, dec, block1, block2, &why);
  if (!spec) throw std::invalid_argument("merge_cycle_pair: " + why);
  return merge_from_spec(g, dec, *spec);
}

namespace {

std::string tie_break_key(const Graph& g) {
  return g.size() <= 16 ? canonical_graph6(g) : graph6_encode(g);
}

// keeps the candidate with the largest delta, smallest canonical key on ties
struct BestMove {
  std::optional<RewriteResult> result;
  std::string key;

  void offer(RewriteResult candidate) {
    if (candidate.delta_w <= 0) return;
    if (result && candidate.delta_w < result->delta_w) return;
    std::string ck = tie_break_key(candidate.after);
    if (!result || candidate.delta_w > result->delta_w || ck < key) {
      result = std::move(candidate);
      key = std::move(ck);
    }
  }
};

}  // namespace

ClimbResult hill_climb(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("hill_climb: graph is disconnected");
  ClimbResult out;
  out.fixpoint = g;
  while (true) {
    const Graph& cur = out.fixpoint;
    const BlockDecomposition dec = block_decomposition(cur);
    BestMove best;

    for (int b = 0; b < dec.block_count(); ++b)
      if (block_size(dec.blocks[static_cast<size_t>(b)]) >= 3 &&
          dec.attachments(b).size() == 1)
        best.offer(cyclize_terminal(cur, b));

    if (!best.result) {
      for (int b = 0; b < dec.block_count(); ++b)
        if (block_size(dec.blocks[static_cast<size_t>(b)]) >= 3 &&
            dec.attachments(b).size() == 2)
          best.offer(cyclize_traversal(cur, b));
    }

    if (!best.result) {
      for (int i = 0; i < dec.block_count(); ++i)
        for (int j = i + 1; j < dec.block_count(); ++j)
          if (auto spec = chain_position(cur, dec, i, j, nullptr))
            best.offer(merge_from_spec(cur, dec, *spec));
    }

    if (!best.result && dec.block_count() >= 3) {
      std::vector<int> terminal_cycles;
      for (int b = 0; b < dec.block_count(); ++b)
        if (dec.attachments(b).size() == 1 &&
            is_cycle_block(dec.blocks[static_cast<size_t>(b)]))
          terminal_cycles.push_back(b);
      for (size_t i = 0; i < terminal_cycles.size(); ++i)
        for (size_t j = i + 1; j < terminal_cycles.size(); ++j) {
          auto [r1, r2] = reattach_terminal_pair(cur, terminal_cycles[i],
                                                 terminal_cycles[j]);
          best.offer(r1.delta_w >= r2.delta_w ? std::move(r1) : std::move(r2));
        }
    }

    if (!best.result) break;
    out.fixpoint = best.result->after;
    out.trace.push_back(std::move(*best.result));
  }
  return out;
}

}  // namespace wmax
