#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wmax/blocks.hpp"
#include "wmax/canonical.hpp"
#include "wmax/enumerate.hpp"
#include "wmax/families.hpp"
#include "wmax/graph.hpp"
#include "wmax/graph6.hpp"

using namespace wmax;

TEST_CASE("make_graph constructs and validates") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.edge_count() == 3);
  CHECK(tri.has_edge(0, 2));

  const Graph k2 = make_graph(2, {{0, 1}});
  CHECK(k2.edge_count() == 1);

  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(63), std::invalid_argument);

  // duplicate edges collapse
  const Graph dup = make_graph(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(path(3), 0) == std::vector<int>{0, 1, 2});

  std::multiset<int> c5;
  for (int d : bfs_distances(cycle(5), 2)) c5.insert(d);
  CHECK(c5 == std::multiset<int>{0, 1, 1, 2, 2});

  const Graph two_edges = make_graph(4, {{0, 1}, {2, 3}});
  const auto d = bfs_distances(two_edges, 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreachable);
  CHECK(d[3] == kUnreachable);
}

TEST_CASE("distance vectors") {
  for (int v = 0; v < 7; ++v)
    CHECK(distance_vector(cycle(7), v).counts == std::vector<int>{2, 2, 2});
  for (int v = 0; v < 6; ++v)
    CHECK(distance_vector(cycle(6), v).counts == std::vector<int>{2, 2, 1});
  CHECK(distance_vector(path(4), 0).counts == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(distance_vector(make_graph(4, {{0, 1}, {2, 3}}), 0),
                  std::invalid_argument);
}

TEST_CASE("transmission closed-form values") {
  CHECK(transmission(cycle(6), 0) == 9);
  CHECK(transmission(cycle(7), 3) == 12);
  CHECK(transmission(path(5), 0) == 10);
}

TEST_CASE("wiener closed-form values") {
  CHECK(wiener(cycle(6)) == 27);
  CHECK(wiener(path(4)) == 10);
  CHECK(wiener(make_graph(2, {{0, 1}})) == 1);
  CHECK(wiener(Graph(1)) == 0);
  CHECK_THROWS_AS(wiener(Graph(2)), std::invalid_argument);
}

TEST_CASE("eccentricity") {
  CHECK(eccentricity(cycle(6), 1) == 3);
  CHECK(eccentricity(make_graph(2, {{0, 1}}), 0) == 1);
  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(eccentricity(star, 0) == 1);
  CHECK(eccentricity(star, 1) == 2);
}

TEST_CASE("graph6 decode matches the reference encoding") {
  const Graph c4 = graph6_decode("Cl");
  CHECK(c4.size() == 4);
  CHECK(c4.edges() == std::vector<std::pair<int, int>>{
                          {0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(graph6_encode(make_graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 encode agrees with reference strings") {
  // reference strings produced by standard graph6 tooling
  CHECK(graph6_encode(cycle(4)) == "Cl");
  CHECK(graph6_encode(path(4)) == "Ch");
  CHECK(graph6_encode(cycle(5)) == "Dhc");
  CHECK(graph6_encode(cycle(6)) == "EhEG");
  CHECK(graph6_encode(cycle(7)) == "FhCKG");
  CHECK(graph6_encode(complete(4)) == "C~");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}})) == "C{");
  CHECK(graph6_encode(make_graph(
            5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {3, 4}})) == "D{c");
  CHECK(graph6_encode(spider(3, 2)) == "FkE?G");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), std::runtime_error);
  CHECK_THROWS_AS(graph6_decode(">>graph6<<Cl"), std::runtime_error);
  CHECK_THROWS_AS(graph6_decode("?"), std::runtime_error);   // n = 0
  CHECK_THROWS_AS(graph6_decode("Cl "), std::runtime_error);  // bad length
  CHECK_THROWS_AS(graph6_decode("C"), std::runtime_error);    // missing bits
  CHECK_THROWS_AS(graph6_decode("A\x1f"), std::runtime_error);  // bad char
  // nonzero padding: K_2 with stray low bits set
  CHECK_THROWS_AS(graph6_decode("A~"), std::runtime_error);
}

TEST_CASE("graph6 round-trip on random graphs") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> size(1, kMaxVertices);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = size(rng);
    Graph g(n);
    const double p = coin(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("weighted distance vector equals transmission") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_connected(rng, 2 + iter % 12);
    for (int v = 0; v < g.size(); ++v) {
      CHECK(distance_vector(g, v).weighted_sum() == transmission(g, v));
      CHECK(transmission(g, v) == oracle::transmission(g, v));
    }
  }
}

TEST_CASE("wiener equals half the transmission sum and the oracle") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_connected(rng, 2 + iter % 14);
    long long total = 0;
    for (int v = 0; v < g.size(); ++v) total += transmission(g, v);
    CHECK(2 * wiener(g) == total);
    CHECK(wiener(g) == oracle::wiener(g));
  }
}

TEST_CASE("2-connected distance vectors stay at least 2 before the end") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_biconnected(g)) continue;
      for (int v = 0; v < n; ++v) {
        const auto dv = distance_vector(g, v);
        for (int i = 0; i + 1 < dv.eccentricity(); ++i)
          CHECK(dv.counts[static_cast<size_t>(i)] >= 2);
        CHECK(dv.eccentricity() <= n / 2);
      }
    }
}

TEST_CASE("cycle transmission bound over 2-connected graphs") {
  for (int n = 3; n <= 7; ++n) {
    const long long bound = two_n(n).weighted_sum();
    const std::uint64_t cycle_code = canonical_code(cycle(n));
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_biconnected(g)) continue;
      bool all_equal = true;
      for (int v = 0; v < n; ++v) {
        CHECK(transmission(g, v) <= bound);
        all_equal = all_equal && transmission(g, v) == bound;
      }
      CHECK(all_equal == (canonical_code(g) == cycle_code));
    }
  }
}
