#include "wmax/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wmax {

Graph cycle(int n) {
  if (n < 2)
    throw std::invalid_argument("cycle: need n >= 2, got " + std::to_string(n));
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);  // C_2 = K_2
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  if (n < 1)
    throw std::invalid_argument("path: need n >= 1, got " + std::to_string(n));
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  if (n < 1)
    throw std::invalid_argument("complete: need n >= 1, got " +
                                std::to_string(n));
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph spider(int k, int t) {
  if (k < 3 || t < 1)
    throw std::invalid_argument("spider: need k >= 3 and t >= 1");
  const int n = t * k + 1;
  Graph g(n);  // throws if n exceeds the vertex cap
  for (int leg = 0; leg < k; ++leg) {
    int prev = 0;
    for (int step = 0; step < t; ++step) {
      const int v = 1 + leg * t + step;
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

Graph theta(int a, int b, int c) {
  int len[3] = {a, b, c};
  std::sort(len, len + 3);
  if (len[0] < 1 || len[1] < 2)
    throw std::invalid_argument(
        "theta: path lengths must be >= 1 with at most one length-1 path");
  const int n = len[0] + len[1] + len[2] - 1;
  Graph g(n);
  const int hub_a = 0, hub_b = len[0];
  // path of length len[0]: 0, 1, ..., len[0]-1, hub_b
  for (int i = 0; i + 1 < len[0]; ++i) g.add_edge(i, i + 1);
  g.add_edge(len[0] - 1, hub_b);
  int next = hub_b + 1;
  for (int which = 1; which < 3; ++which) {
    int prev = hub_a;
    for (int i = 0; i + 1 < len[which]; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, hub_b);
  }
  return g;
}

FamilyParams::FamilyParams(int a_in, int b_in, int p_in)
    : a(std::min(a_in, b_in)), b(std::max(a_in, b_in)), p(p_in) {
  if (a < 2 || p < 2)
    throw std::invalid_argument("family params: need a, b >= 2 and p >= 2");
  if (n() > kMaxVertices)
    throw std::invalid_argument("family params: graph exceeds vertex cap");
}

CompositeSpec two_cycles_path_spec(const FamilyParams& params) {
  CompositeSpec spec;
  spec.parts.push_back({cycle(params.a), std::nullopt, 0});
  Graph middle = path(params.p - 1);
  spec.parts.push_back({std::move(middle), 0, params.p - 2});
  spec.parts.push_back({cycle(params.b), 0, std::nullopt});
  return spec;
}

Graph two_cycles_path(const FamilyParams& params) {
  return materialize(two_cycles_path_spec(params));
}

Graph two_cycles_path(int a, int b, int p) {
  return two_cycles_path(FamilyParams(a, b, p));
}

namespace {

void check_min(int n, int min, const char* what) {
  if (n < min)
    throw std::invalid_argument(std::string(what) + ": need n >= " +
                                std::to_string(min) + ", got " +
                                std::to_string(n));
}

}  // namespace

long long closed_wiener_cycle(int n) {
  check_min(n, 2, "closed_wiener_cycle");
  const long long m = n;
  return (n % 2 == 0) ? m * m * m / 8 : (m * m * m - m) / 8;
}

long long closed_wiener_path(int n) {
  check_min(n, 1, "closed_wiener_path");
  const long long m = n;
  return (m + 1) * m * (m - 1) / 6;  // C(n+1, 3)
}

long long closed_transmission_cycle(int n) {
  check_min(n, 2, "closed_transmission_cycle");
  const long long m = n;
  return (n % 2 == 0) ? m * m / 4 : (m * m - 1) / 4;
}

long long closed_transmission_path_end(int n) {
  check_min(n, 1, "closed_transmission_path_end");
  const long long m = n;
  return m * (m - 1) / 2;  // C(n, 2)
}

long long TwoNVector::weighted_sum() const {
  long long sum = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    sum += static_cast<long long>(i + 1) * entries[i];
  return sum;
}

TwoNVector two_n(int n) {
  check_min(n, 2, "two_n");
  TwoNVector v;
  v.n = n;
  if (n % 2 == 0) {
    v.entries.assign(static_cast<size_t>(n / 2), 2);
    v.entries.back() = 1;
  } else {
    v.entries.assign(static_cast<size_t>((n - 1) / 2), 2);
  }
  return v;
}

}  // namespace wmax
