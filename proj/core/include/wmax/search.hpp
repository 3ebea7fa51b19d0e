#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wmax/graph.hpp"

namespace wmax {

// Exhaustive maximum of W over connected graphs with n vertices and exactly
// p blocks, plus the comparison against the two-cycles-with-a-path family.
struct ExtremalResult {
  int n = 0, p = 0;
  long long max_w = 0;
  std::vector<std::string> extremal_graphs;  // canonical graph6, sorted
  bool family_match = false;  // every extremal graph lies in the family
  std::vector<std::pair<int, int>> witness_params;  // realized (a, b), a <= b
};

// Requires n > p >= 1 and n <= 10.
ExtremalResult max_wiener_blocks(int n, int p, int jobs = 0);

// All of p = 1..n-1 from a single enumeration sweep.
std::vector<ExtremalResult> max_wiener_all(int n, int jobs = 0);

// argmax of W over the family C_a - path - C_b with a+b = n-p+3, a <= b.
struct FamilyOptimum {
  int n = 0, p = 0;
  std::vector<std::pair<int, int>> best_pairs;
  long long best_w = 0;
};

FamilyOptimum family_optimum(int n, int p);  // n > p >= 2

// Exhaustive check that the family attains the maximum for one (n, p).
struct MainCheck {
  int n = 0, p = 0;
  long long exhaustive_max = 0;
  long long family_best = 0;
  std::vector<std::string> extremal_graphs;          // canonical graph6
  std::vector<std::string> outside_family;           // extremal but not in family
  std::vector<std::pair<int, int>> witness_params;
  bool pass = false;  // maxima agree and outside_family is empty
};

std::vector<MainCheck> verify_main(int n, int jobs = 0);  // 3 <= n <= 10

// The two-cycle family on n vertices: W(C_{n-r+1} o C_r) over r, the argmax
// pattern (r = 3 except n = 7 and n = 9), the exceptional orderings, and the
// edge case C_{n-1} o C_2 beating every r >= 3 member.
struct TwoCycleCheck {
  int n = 0;
  std::vector<std::pair<int, long long>> family_w;  // (r, W), 3 <= r <= (n+1)/2
  std::vector<int> argmax_r;
  long long edge_case_w = 0;  // W(C_{n-1} o C_2)
  bool argmax_ok = false;
  bool ordering_ok = false;   // the n = 7 / n = 9 chains, vacuous otherwise
  bool edge_beats_family = false;
  bool pass = false;
};

TwoCycleCheck verify_two_cycle_family(int n);  // 5 <= n <= 40

// Minimum pairwise distance of any k-subset is at most (2n-2)/k; equality
// forces n = 1 (mod k), the spider graph, and its leaf tips as the subset.
struct KdistCheck {
  int n = 0, k = 0;
  bool bound_ok = false;
  long long equality_count = 0;      // (graph, subset) pairs at the bound
  bool equality_cases_ok = false;    // all of them are spider tips
  bool witness_found = false;        // the spider realizes the bound
  bool pass = false;
};

KdistCheck verify_kdist(int n, int k, int jobs = 0);  // 3 <= k < n <= 8

// Over 2-connected graphs: the maximum over vertex triples of the pairwise
// distance sum is at most n+1; strict for even n. Graphs attaining n+1 are
// reported, with those that are not even-length theta graphs singled out.
struct ThetaCheck {
  int n = 0;
  long long classes_checked = 0;
  bool bound_ok = false;
  std::vector<std::string> witnesses;         // canonical graph6 with D = n+1
  std::vector<std::string> non_theta_witnesses;
  bool even_strict_ok = false;  // for even n: no witness exists
  bool pass = false;            // bound_ok && even_strict_ok && no non-theta
};

ThetaCheck verify_theta(int n, int jobs = 0);  // 4 <= n <= 9

}  // namespace wmax
