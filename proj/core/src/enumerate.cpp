#include "wmax/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "wmax/canonical.hpp"

namespace wmax {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Insert-only open-addressing set of nonzero codes (0 marks an empty slot;
// connected graphs on >= 2 vertices always have at least one edge).
class FlatCodeSet {
 public:
  explicit FlatCodeSet(size_t expected) {
    size_t cap = 64;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, 0);
  }

  bool insert(std::uint64_t key) {
    if (count_ * 10 >= slots_.size() * 7) grow();
    return insert_nogrow(slots_, key) ? (++count_, true) : false;
  }

  size_t size() const { return count_; }

  void append_to(std::vector<std::uint64_t>& out) const {
    for (std::uint64_t s : slots_)
      if (s) out.push_back(s);
  }

 private:
  static bool insert_nogrow(std::vector<std::uint64_t>& slots,
                            std::uint64_t key) {
    const size_t mask = slots.size() - 1;
    size_t i = splitmix64(key) & mask;
    while (slots[i] != 0) {
      if (slots[i] == key) return false;
      i = (i + 1) & mask;
    }
    slots[i] = key;
    return true;
  }

  void grow() {
    std::vector<std::uint64_t> bigger(slots_.size() * 2, 0);
    for (std::uint64_t s : slots_)
      if (s) insert_nogrow(bigger, s);
    slots_.swap(bigger);
  }

  std::vector<std::uint64_t> slots_;
  size_t count_ = 0;
};

// Hash-sharded set with striped locks so workers can insert concurrently.
class ShardedCodeSet {
 public:
  explicit ShardedCodeSet(size_t expected) {
    for (auto& s : shards_) s.set.emplace(expected / kShards + 16);
  }

  void insert(std::uint64_t key) {
    Shard& s = shards_[splitmix64(key ^ 0x5bf03635ULL) % kShards];
    std::lock_guard<std::mutex> lock(s.mu);
    s.set->insert(key);
  }

  std::vector<std::uint64_t> sorted_codes() const {
    std::vector<std::uint64_t> out;
    size_t total = 0;
    for (const auto& s : shards_) total += s.set->size();
    out.reserve(total);
    for (const auto& s : shards_) s.set->append_to(out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr size_t kShards = 64;
  struct Shard {
    std::mutex mu;
    std::optional<FlatCodeSet> set;
  };
  Shard shards_[kShards];
};

// known connected-class counts, used only as allocation hints
constexpr size_t kCountHint[11] = {0,      1,      1,      2,     6,       21,
                                   112,    853,    11117,  261080, 11716571};

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// children on k+1 vertices from the class representatives on k vertices
std::vector<std::uint64_t> expand_level(int k,
                                        const std::vector<std::uint64_t>& parents,
                                        int jobs) {
  ShardedCodeSet children(kCountHint[k + 1]);
  const int by_size = static_cast<int>(std::max<size_t>(parents.size() / 64, 1));
  const int workers = std::min(resolve_jobs(jobs), by_size);

  auto work = [&](size_t begin, size_t end) {
    std::uint64_t rows[12];
    for (size_t idx = begin; idx < end; ++idx) {
      // decode the parent straight into bitmask rows
      for (int v = 0; v <= k; ++v) rows[v] = 0;
      const std::uint64_t code = parents[idx];
      int bit = k * (k - 1) / 2;
      for (int col = 1; col < k; ++col)
        for (int row = 0; row < col; ++row) {
          --bit;
          if ((code >> bit) & 1) {
            rows[row] |= std::uint64_t{1} << col;
            rows[col] |= std::uint64_t{1} << row;
          }
        }
      const std::uint64_t all = (std::uint64_t{1} << k) - 1;
      for (std::uint64_t nbrs = 1; nbrs <= all; ++nbrs) {
        std::uint64_t child[12];
        std::uint64_t m = nbrs;
        for (int v = 0; v < k; ++v) child[v] = rows[v];
        while (m) {
          const int v = std::countr_zero(m);
          m &= m - 1;
          child[v] |= std::uint64_t{1} << k;
        }
        child[k] = nbrs;
        children.insert(canonical_code(k + 1, child));
      }
    }
  };

  if (workers <= 1) {
    work(0, parents.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (parents.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const size_t begin = std::min(parents.size(), static_cast<size_t>(w) * chunk);
      const size_t end = std::min(parents.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return children.sorted_codes();
}

}  // namespace

const std::vector<std::uint64_t>& connected_codes(int n, int jobs) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("connected_codes: need 1 <= n <= 10");
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache[1] = {0};  // K_1
  int have = cache.rbegin()->first;
  while (have < n) {
    cache[have + 1] = expand_level(have, cache[have], jobs);
    ++have;
  }
  return cache[n];
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn,
                        int jobs) {
  for (std::uint64_t code : connected_codes(n, jobs))
    fn(graph_from_code(n, code));
}

std::vector<Graph> enumerate_connected(int n, int jobs) {
  std::vector<Graph> out;
  const auto& codes = connected_codes(n, jobs);
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace wmax
