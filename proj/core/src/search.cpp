#include "wmax/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "wmax/blocks.hpp"
#include "wmax/canonical.hpp"
#include "wmax/compose.hpp"
#include "wmax/enumerate.hpp"
#include "wmax/families.hpp"
#include "wmax/graph6.hpp"

namespace wmax {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int plan_workers(size_t count, int jobs) {
  const size_t by_size = std::max<size_t>(count / 2048, 1);
  return static_cast<int>(
      std::min<size_t>(static_cast<size_t>(resolve_jobs(jobs)), by_size));
}

// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, count),
// one chunk per worker from plan_workers. Per-chunk results can be merged
// in index order, making the combined result independent of scheduling.
template <typename Fn>
void run_chunks(size_t count, int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0, 0, count);
    return;
  }
  const size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const size_t begin = std::min(count, static_cast<size_t>(w) * chunk);
    const size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

// canonical codes of every family member for fixed (n, p), keyed by code
std::map<std::uint64_t, std::pair<int, int>> family_code_table(int n, int p) {
  std::map<std::uint64_t, std::pair<int, int>> table;
  const int ab = n - p + 3;
  for (int a = 2; a <= ab / 2; ++a)
    table[canonical_code(two_cycles_path(a, ab - a, p))] = {a, ab - a};
  return table;
}

}  // namespace

std::vector<ExtremalResult> max_wiener_all(int n, int jobs) {
  if (n < 2 || n > 10)
    throw std::invalid_argument("max_wiener_all: need 2 <= n <= 10");
  const auto& codes = connected_codes(n, jobs);

  struct Partial {
    std::vector<long long> best;              // by p
    std::vector<std::vector<std::uint64_t>> arg;  // codes attaining it
  };
  const int workers = plan_workers(codes.size(), jobs);
  std::vector<Partial> partials(static_cast<size_t>(workers));
  for (auto& p : partials) {
    p.best.assign(static_cast<size_t>(n), -1);
    p.arg.assign(static_cast<size_t>(n), {});
  }
  run_chunks(codes.size(), workers, [&](int chunk, size_t begin, size_t end) {
    Partial& acc = partials[static_cast<size_t>(chunk)];
    for (size_t i = begin; i < end; ++i) {
      const Graph g = graph_from_code(n, codes[i]);
      const int p = block_count(g);
      const long long w = wiener(g);
      if (w > acc.best[static_cast<size_t>(p)]) {
        acc.best[static_cast<size_t>(p)] = w;
        acc.arg[static_cast<size_t>(p)] = {codes[i]};
      } else if (w == acc.best[static_cast<size_t>(p)]) {
        acc.arg[static_cast<size_t>(p)].push_back(codes[i]);
      }
    }
  });

  std::vector<ExtremalResult> out;
  for (int p = 1; p <= n - 1; ++p) {
    ExtremalResult r;
    r.n = n;
    r.p = p;
    std::vector<std::uint64_t> arg;
    long long best = -1;
    for (const Partial& acc : partials) {
      const long long w = acc.best[static_cast<size_t>(p)];
      if (w > best) {
        best = w;
        arg = acc.arg[static_cast<size_t>(p)];
      } else if (w == best && w >= 0) {
        arg.insert(arg.end(), acc.arg[static_cast<size_t>(p)].begin(),
                   acc.arg[static_cast<size_t>(p)].end());
      }
    }
    r.max_w = best;
    std::sort(arg.begin(), arg.end());
    for (std::uint64_t code : arg)
      r.extremal_graphs.push_back(graph6_encode(graph_from_code(n, code)));

    if (p >= 2) {
      const auto table = family_code_table(n, p);
      std::set<std::pair<int, int>> witnesses;
      bool all_in_family = true;
      for (std::uint64_t code : arg) {
        auto it = table.find(code);
        if (it == table.end())
          all_in_family = false;
        else
          witnesses.insert(it->second);
      }
      r.family_match = all_in_family;
      r.witness_params.assign(witnesses.begin(), witnesses.end());
    }
    out.push_back(std::move(r));
  }
  return out;
}

ExtremalResult max_wiener_blocks(int n, int p, int jobs) {
  if (p < 1)
    throw std::invalid_argument("max_wiener_blocks: need p >= 1");
  if (p >= n)
    throw std::invalid_argument(
        "max_wiener_blocks: no connected graph has p >= n blocks");
  if (n > 10)
    throw std::invalid_argument("max_wiener_blocks: exhaustive mode needs n <= 10");
  return max_wiener_all(n, jobs)[static_cast<size_t>(p - 1)];
}

FamilyOptimum family_optimum(int n, int p) {
  if (p < 2 || p >= n)
    throw std::invalid_argument("family_optimum: need n > p >= 2");
  FamilyOptimum opt;
  opt.n = n;
  opt.p = p;
  opt.best_w = -1;
  const int ab = n - p + 3;
  for (int a = 2; a <= ab / 2; ++a) {
    const long long w = wiener_chain(two_cycles_path_spec(FamilyParams(a, ab - a, p)));
    if (w > opt.best_w) {
      opt.best_w = w;
      opt.best_pairs = {{a, ab - a}};
    } else if (w == opt.best_w) {
      opt.best_pairs.emplace_back(a, ab - a);
    }
  }
  return opt;
}

std::vector<MainCheck> verify_main(int n, int jobs) {
  if (n < 3 || n > 10)
    throw std::invalid_argument("verify_main: need 3 <= n <= 10");
  const auto all = max_wiener_all(n, jobs);
  std::vector<MainCheck> checks;
  for (int p = 2; p <= n - 1; ++p) {
    const ExtremalResult& ext = all[static_cast<size_t>(p - 1)];
    const FamilyOptimum fam = family_optimum(n, p);
    MainCheck check;
    check.n = n;
    check.p = p;
    check.exhaustive_max = ext.max_w;
    check.family_best = fam.best_w;
    check.extremal_graphs = ext.extremal_graphs;
    check.witness_params = ext.witness_params;
    if (!ext.family_match) {
      const auto table = family_code_table(n, p);
      for (const std::string& g6 : ext.extremal_graphs)
        if (!table.count(adjacency_code(graph6_decode(g6))))
          check.outside_family.push_back(g6);
    }
    check.pass = (ext.max_w == fam.best_w) && check.outside_family.empty();
    checks.push_back(std::move(check));
  }
  return checks;
}

TwoCycleCheck verify_two_cycle_family(int n) {
  if (n < 5 || n > 40)
    throw std::invalid_argument("verify_two_cycle_family: need 5 <= n <= 40");
  TwoCycleCheck check;
  check.n = n;
  long long best = -1;
  for (int r = 3; n + 1 - r >= r; ++r) {  // r and n+1-r give the same graph
    const long long w = wiener_pair(cycle(n - r + 1), 0, cycle(r), 0);
    check.family_w.emplace_back(r, w);
    best = std::max(best, w);
  }
  for (auto [r, w] : check.family_w)
    if (w == best) check.argmax_r.push_back(r);

  if (n == 7 || n == 9)
    check.argmax_ok = (check.argmax_r == std::vector<int>{4});
  else
    check.argmax_ok = (check.argmax_r == std::vector<int>{3});

  auto value_of = [&](int r) {
    for (auto [rr, w] : check.family_w)
      if (rr == r) return w;
    return -1LL;
  };
  if (n == 7)
    check.ordering_ok = value_of(4) > value_of(3);
  else if (n == 9)
    check.ordering_ok = value_of(4) > value_of(3) && value_of(3) > value_of(5);
  else
    check.ordering_ok = true;

  check.edge_case_w = wiener_pair(cycle(n - 1), 0, cycle(2), 0);
  check.edge_beats_family = check.edge_case_w > best;
  check.pass = check.argmax_ok && check.ordering_ok && check.edge_beats_family;
  return check;
}

KdistCheck verify_kdist(int n, int k, int jobs) {
  if (k < 3 || k >= n || n > 8)
    throw std::invalid_argument("verify_kdist: need 3 <= k < n <= 8");
  KdistCheck check;
  check.n = n;
  check.k = k;

  std::uint64_t spider_code = 0;
  const bool divides = ((2 * n - 2) % k) == 0;
  if (n % k == 1) spider_code = canonical_code(spider(k, (n - 1) / k));

  const auto& codes = connected_codes(n, jobs);
  struct Partial {
    bool bound_ok = true;
    long long equality_count = 0;
    bool equality_cases_ok = true;
  };
  const int workers = plan_workers(codes.size(), jobs);
  std::vector<Partial> partials(static_cast<size_t>(workers));

  run_chunks(codes.size(), workers, [&](int chunk, size_t begin, size_t end) {
    Partial& acc = partials[static_cast<size_t>(chunk)];
    int dist[8][8];
    for (size_t i = begin; i < end; ++i) {
      const Graph g = graph_from_code(n, codes[i]);
      for (int v = 0; v < n; ++v) {
        const auto row = bfs_distances(g, v);
        for (int u = 0; u < n; ++u) dist[v][u] = row[static_cast<size_t>(u)];
      }
      std::uint64_t tip_mask = 0;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) tip_mask |= std::uint64_t{1} << v;

      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t sub = (std::uint64_t{1} << k) - 1; sub < limit;) {
        int mind = n + 1;
        std::uint64_t rest = sub;
        while (rest) {
          const int a = std::countr_zero(rest);
          rest &= rest - 1;
          std::uint64_t rest2 = rest;
          while (rest2) {
            const int b = std::countr_zero(rest2);
            rest2 &= rest2 - 1;
            mind = std::min(mind, dist[a][b]);
          }
        }
        if (mind * k > 2 * n - 2) acc.bound_ok = false;
        if (divides && mind * k == 2 * n - 2) {
          ++acc.equality_count;
          const bool valid = (n % k == 1) && codes[i] == spider_code &&
                             sub == tip_mask;
          if (!valid) acc.equality_cases_ok = false;
        }
        // Gosper's hack: next subset of the same popcount
        const std::uint64_t c = sub & -sub, r = sub + c;
        sub = (((r ^ sub) >> 2) / c) | r;
      }
    }
  });

  check.bound_ok = true;
  check.equality_cases_ok = true;
  for (const Partial& acc : partials) {
    check.bound_ok = check.bound_ok && acc.bound_ok;
    check.equality_count += acc.equality_count;
    check.equality_cases_ok = check.equality_cases_ok && acc.equality_cases_ok;
  }
  if (n % k == 1) {
    const Graph sp = spider(k, (n - 1) / k);
    const int t = (n - 1) / k;
    long long mind = n + 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        mind = std::min<long long>(
            mind, bfs_distances(sp, (i + 1) * t)[static_cast<size_t>((j + 1) * t)]);
    check.witness_found = (mind * k == 2 * n - 2);
  }
  check.pass = check.bound_ok && check.equality_cases_ok;
  return check;
}

ThetaCheck verify_theta(int n, int jobs) {
  if (n < 4 || n > 9)
    throw std::invalid_argument("verify_theta: need 4 <= n <= 9");
  ThetaCheck check;
  check.n = n;

  // even-length thetas on n vertices (a <= b <= c, all even, a+b+c-1 = n)
  std::set<std::uint64_t> even_theta_codes;
  for (int a = 2; a <= n; a += 2)
    for (int b = a; a + b <= n + 1; b += 2) {
      const int c = n + 1 - a - b;
      if (c >= b && c % 2 == 0) even_theta_codes.insert(canonical_code(theta(a, b, c)));
    }

  const auto& codes = connected_codes(n, jobs);
  struct Partial {
    bool bound_ok = true;
    long long checked = 0;
    std::vector<std::uint64_t> witnesses;
  };
  const int workers = plan_workers(codes.size(), jobs);
  std::vector<Partial> partials(static_cast<size_t>(workers));

  run_chunks(codes.size(), workers, [&](int chunk, size_t begin, size_t end) {
    Partial& acc = partials[static_cast<size_t>(chunk)];
    int dist[9][9];
    for (size_t i = begin; i < end; ++i) {
      const Graph g = graph_from_code(n, codes[i]);
      bool degree_ok = true;
      for (int v = 0; v < n; ++v) degree_ok = degree_ok && g.degree(v) >= 2;
      if (!degree_ok || !is_biconnected(g)) continue;
      ++acc.checked;
      for (int v = 0; v < n; ++v) {
        const auto row = bfs_distances(g, v);
        for (int u = 0; u < n; ++u) dist[v][u] = row[static_cast<size_t>(u)];
      }
      int max_d = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            max_d = std::max(max_d, dist[a][b] + dist[a][c] + dist[b][c]);
      if (max_d > n + 1) acc.bound_ok = false;
      if (max_d == n + 1) acc.witnesses.push_back(codes[i]);
    }
  });

  check.bound_ok = true;
  std::vector<std::uint64_t> witness_codes;
  for (const Partial& acc : partials) {
    check.bound_ok = check.bound_ok && acc.bound_ok;
    check.classes_checked += acc.checked;
    witness_codes.insert(witness_codes.end(), acc.witnesses.begin(),
                         acc.witnesses.end());
  }
  std::sort(witness_codes.begin(), witness_codes.end());
  for (std::uint64_t code : witness_codes) {
    const std::string g6 = graph6_encode(graph_from_code(n, code));
    check.witnesses.push_back(g6);
    if (!even_theta_codes.count(code)) check.non_theta_witnesses.push_back(g6);
  }
  check.even_strict_ok = (n % 2 == 1) || check.witnesses.empty();
  check.pass = check.bound_ok && check.even_strict_ok &&
               check.non_theta_witnesses.empty();
  return check;
}

}  // namespace wmax
