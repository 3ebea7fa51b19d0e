#pragma once

#include <utility>
#include <vector>

#include "wmax/blocks.hpp"
#include "wmax/graph.hpp"

namespace wmax {

enum class RewriteRule {
  cyclize_terminal,
  cyclize_traversal,
  merge_cycle_pair,
  reattach_terminal_pair,
};

const char* rule_name(RewriteRule rule);

// One applied (or evaluated) move. Every move preserves both the vertex
// count and the block count. strict records whether the move's inequality
// guarantees delta_w > 0 for this input; delta_w itself is always exact.
struct RewriteResult {
  Graph before;
  Graph after;
  long long delta_w = 0;
  RewriteRule rule = RewriteRule::cyclize_terminal;
  bool strict = false;
};

// Replaces a terminal block (>= 3 vertices) by a cycle on the same vertex
// set. Strict increase unless the block already is a cycle, in which case
// after == before and delta_w == 0.
RewriteResult cyclize_terminal(const Graph& g, int block_id);

// Replaces a traversal block (>= 3 vertices) by a cycle on the same vertex
// set with the two attachment vertices antipodal. Strict increase unless the
// block already is such a cycle.
RewriteResult cyclize_traversal(const Graph& g, int block_id);

// For two terminal cycle (or K_2) blocks with attachments v1, v2 and
// in-block antipodal vertices u1, u2: the first result moves block1 onto u2,
// the second moves block2 onto u1. When d(u1, u2) < (n-1)/2 the larger of
// the two is a strict improvement; strict is set accordingly on the result(s)
// achieving the larger delta.
std::pair<RewriteResult, RewriteResult> reattach_terminal_pair(const Graph& g,
                                                               int block1,
                                                               int block2);

// For two adjacent cycle blocks sitting in chain position
// (side0 - block1 - block2 - side3 with antipodal attachments), replaces the
// pair by [cycle on n1+n2-2 vertices] - [edge], the larger cycle on the
// smaller side. delta_w >= 0, with equality exactly when n2 == 2 already, or
// n1 == 2 with equally sized sides (sizes after orienting side0 <= side3).
RewriteResult merge_cycle_pair(const Graph& g, int block1, int block2);

struct ClimbResult {
  Graph fixpoint;
  std::vector<RewriteResult> trace;
};

// Steepest-ascent application of the moves above, in the priority order
// cyclize_terminal, cyclize_traversal, merge_cycle_pair, reattach (better of
// the pair), while any move strictly increases W. Ties broken by the
// canonical form of the resulting graph. At the fixpoint every terminal
// block is a cycle or K_2 and every traversal block is a cycle with
// antipodal attachments or K_2.
ClimbResult hill_climb(const Graph& g);

}  // namespace wmax
