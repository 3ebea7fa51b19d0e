#include "wmax/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wmax/graph6.hpp"

namespace wmax {

namespace {

constexpr int kCanonMax = 16;  // C(16,2) = 120 bits, fits unsigned __int128

using Code = unsigned __int128;

// DFS state for the maximum-code search. Positions are filled left to right;
// placing vertex w at position j appends j bits (adjacency of w to the
// already placed vertices, earliest position most significant).
struct Canonicalizer {
  int n;
  std::uint64_t rows[kCanonMax];       // original adjacency
  int placed[kCanonMax];               // placed[pos] = original vertex
  std::uint64_t placed_mask = 0;
  Code best = 0;
  bool have_best = false;
  int best_perm[kCanonMax];
  int bits_up_to[kCanonMax + 1];       // bits consumed after filling j slots

  Canonicalizer(int nverts, const std::uint64_t* adj_rows) : n(nverts) {
    std::copy(adj_rows, adj_rows + n, rows);
    for (int j = 0; j <= n; ++j) bits_up_to[j] = j * (j - 1) / 2;
  }

  int column_bits(int w, int j) const {
    int bits = 0;
    for (int i = 0; i < j; ++i)
      bits = (bits << 1) | static_cast<int>((rows[w] >> placed[i]) & 1);
    return bits;
  }

  void dfs(int j, Code partial) {
    if (have_best) {
      const int shift = bits_up_to[n] - bits_up_to[j];
      if (partial < (best >> shift)) return;  // worse than best prefix
    }
    if (j == n) {
      best = partial;
      have_best = true;
      std::copy(placed, placed + n, best_perm);
      return;
    }
    // candidates in descending (column bits, -vertex) order; twins collapsed
    int cand[kCanonMax], score[kCanonMax], count = 0;
    std::uint64_t m = ~placed_mask & ((std::uint64_t{1} << n) - 1);
    while (m) {
      const int w = std::countr_zero(m);
      m &= m - 1;
      bool twin = false;
      for (int c = 0; c < count; ++c) {
        const std::uint64_t pair =
            (std::uint64_t{1} << w) | (std::uint64_t{1} << cand[c]);
        if ((rows[w] & ~pair) == (rows[cand[c]] & ~pair)) {
          twin = true;  // swapping w with cand[c] is an automorphism
          break;
        }
      }
      if (twin) continue;
      const int s = column_bits(w, j);
      int at = count++;
      while (at > 0 && score[at - 1] < s) {
        score[at] = score[at - 1];
        cand[at] = cand[at - 1];
        --at;
      }
      score[at] = s;
      cand[at] = w;
    }
    for (int c = 0; c < count; ++c) {
      placed[j] = cand[c];
      placed_mask |= std::uint64_t{1} << cand[c];
      dfs(j + 1, (partial << j) | static_cast<Code>(score[c]));
      placed_mask &= ~(std::uint64_t{1} << cand[c]);
    }
  }
};

}  // namespace

namespace {

// Dense graphs are canonicalized through their complement: the search prunes
// far better on the sparse side, and complementation commutes with
// relabeling, so the resulting labeling is still a complete invariant.
void best_labeling(int n, const std::uint64_t* rows, int* perm_out) {
  std::uint64_t work[kCanonMax];
  int edges2 = 0;
  for (int v = 0; v < n; ++v) edges2 += std::popcount(rows[v]);
  if (edges2 > n * (n - 1) / 2) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (int v = 0; v < n; ++v)
      work[v] = ~rows[v] & all & ~(std::uint64_t{1} << v);
  } else {
    std::copy(rows, rows + n, work);
  }
  Canonicalizer canon(n, work);
  canon.dfs(0, 0);
  std::copy(canon.best_perm, canon.best_perm + n, perm_out);
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.size() > kCanonMax)
    throw std::invalid_argument("canonical_labeling: supported only for n <= " +
                                std::to_string(kCanonMax));
  std::uint64_t rows[kCanonMax];
  for (int v = 0; v < g.size(); ++v) rows[v] = g.neighbors(v);
  std::vector<int> perm(static_cast<size_t>(g.size()));
  best_labeling(g.size(), rows, perm.data());
  return perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<int> position(static_cast<size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const int old = perm[static_cast<size_t>(pos)];
    if (old < 0 || old >= n || position[static_cast<size_t>(old)] != -1)
      throw std::invalid_argument("relabel: not a permutation");
    position[static_cast<size_t>(old)] = pos;
  }
  Graph out(n);
  for (auto [u, v] : g.edges())
    out.add_edge(position[static_cast<size_t>(u)],
                 position[static_cast<size_t>(v)]);
  return out;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_graph6(const Graph& g) {
  return graph6_encode(canonical_form(g));
}

std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.size();
  if (n > 11)
    throw std::invalid_argument("adjacency_code: needs n <= 11 to fit 64 bits");
  std::uint64_t code = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      code = (code << 1) | (g.has_edge(row, col) ? 1 : 0);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  return adjacency_code(canonical_form(g));
}

std::uint64_t canonical_code(int n, const std::uint64_t* rows) {
  if (n > 11)
    throw std::invalid_argument("canonical_code: needs n <= 11 to fit 64 bits");
  int perm[kCanonMax];
  best_labeling(n, rows, perm);
  std::uint64_t code = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      code = (code << 1) | ((rows[perm[row]] >> perm[col]) & 1);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  const int nbits = n * (n - 1) / 2;
  int idx = nbits - 1;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, --idx)
      if ((code >> idx) & 1) g.add_edge(row, col);
  return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace wmax
