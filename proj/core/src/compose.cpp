#include "wmax/compose.hpp"

#include <stdexcept>
#include <string>

namespace wmax {

namespace {

void check_part(const Graph& g, int v, const char* which) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument(std::string(which) +
                                " attachment vertex out of range");
  if (!is_connected(g))
    throw std::invalid_argument(std::string(which) + " part is disconnected");
}

struct PartStats {
  int n = 1;
  long long w_total = 0;    // W of the part
  long long w_entry = 0;    // transmission of the entry vertex
  long long w_exit = 0;     // transmission of the exit vertex
  long long through = 0;    // d(entry, exit) within the part
};

void validate(const CompositeSpec& spec) {
  const size_t count = spec.parts.size();
  if (count == 0) throw std::invalid_argument("composite spec has no parts");
  for (size_t i = 0; i < count; ++i) {
    const CompositePart& part = spec.parts[i];
    if (!is_connected(part.graph))
      throw std::invalid_argument("part " + std::to_string(i) +
                                  " is disconnected");
    const bool first = (i == 0), last = (i + 1 == count);
    if (first != !part.entry.has_value())
      throw std::invalid_argument(
          "entry attachment must be absent exactly on the first part");
    if (last != !part.exit.has_value())
      throw std::invalid_argument(
          "exit attachment must be absent exactly on the last part");
    for (std::optional<int> v : {part.entry, part.exit})
      if (v && (*v < 0 || *v >= part.graph.size()))
        throw std::invalid_argument("attachment vertex of part " +
                                    std::to_string(i) + " out of range");
  }
}

PartStats stats_of(const CompositePart& part) {
  PartStats s;
  s.n = part.graph.size();
  s.w_total = wiener(part.graph);
  if (part.entry) s.w_entry = transmission(part.graph, *part.entry);
  if (part.exit) s.w_exit = transmission(part.graph, *part.exit);
  if (part.entry && part.exit)
    s.through = bfs_distances(part.graph, *part.entry)[static_cast<size_t>(
        *part.exit)];
  return s;
}

}  // namespace

Graph amalgam(const Graph& g1, int v1, const Graph& g2, int v2) {
  check_part(g1, v1, "first");
  check_part(g2, v2, "second");
  const int n = g1.size() + g2.size() - 1;
  if (n > kMaxVertices)
    throw std::invalid_argument("amalgam exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  Graph out(n);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  auto map2 = [&](int w) {
    if (w == v2) return v1;
    return g1.size() + (w < v2 ? w : w - 1);
  };
  for (auto [u, v] : g2.edges()) out.add_edge(map2(u), map2(v));
  return out;
}

long long wiener_pair(const Graph& g1, int v1, const Graph& g2, int v2) {
  check_part(g1, v1, "first");
  check_part(g2, v2, "second");
  const long long n1 = g1.size(), n2 = g2.size();
  return wiener(g1) + wiener(g2) + transmission(g1, v1) * (n2 - 1) +
         transmission(g2, v2) * (n1 - 1);
}

long long wiener_chain(const CompositeSpec& spec) {
  validate(spec);
  const size_t count = spec.parts.size();
  std::vector<PartStats> parts;
  parts.reserve(count);
  for (const CompositePart& p : spec.parts) parts.push_back(stats_of(p));

  long long total = 0;
  for (const PartStats& s : parts) total += s.w_total;

  // prefix[i] = distance from the exit of part 0 to the entry of part i,
  // walking through the identified attachment vertices
  std::vector<long long> prefix(count, 0);
  for (size_t i = 1; i + 1 < count; ++i)
    prefix[i + 1] = prefix[i] + parts[i].through;

  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      const long long cross = prefix[j] - prefix[i + 1];
      total += parts[i].w_exit * (parts[j].n - 1) +
               parts[j].w_entry * (parts[i].n - 1) +
               cross * (parts[i].n - 1) * (parts[j].n - 1);
    }
  }
  return total;
}

Graph materialize(const CompositeSpec& spec) {
  validate(spec);
  Graph acc = spec.parts.front().graph;
  int exit_label =
      spec.parts.front().exit ? *spec.parts.front().exit : 0;
  for (size_t i = 1; i < spec.parts.size(); ++i) {
    const CompositePart& part = spec.parts[i];
    const int entry = *part.entry;
    const int base = acc.size();
    acc = amalgam(acc, exit_label, part.graph, entry);
    if (part.exit) {
      const int e = *part.exit;
      exit_label = (e == entry) ? exit_label : base + (e < entry ? e : e - 1);
    }
  }
  return acc;
}

}  // namespace wmax
