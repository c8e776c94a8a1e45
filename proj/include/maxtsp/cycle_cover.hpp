#pragma once

#include "maxtsp/matching.hpp"
#include "maxtsp/tour.hpp"

namespace maxtsp {

/// Node layout of the 2-factor gadget for an n-vertex instance.
///
/// Vertex v owns two copy nodes 2v and 2v+1. The k-th unordered pair {u,v}
/// (u < v, lexicographic) owns nodes 2n+2k (the u side) and 2n+2k+1 (the v
/// side), joined by a zero-weight internal edge. Each side connects to both
/// copies of its vertex with weight dist(u,v): the true per-side weight is
/// dist(u,v)/2, stored doubled so no halving happens inside the matcher.
struct GadgetLayout {
  int n = 0;

  int copy_node(Vertex v, int which) const { return 2 * v + which; }
  int pair_index(Vertex u, Vertex v) const;  // u < v
  int side_node(int pair, int side) const { return 2 * n + 2 * pair + side; }
  int num_nodes() const { return 2 * n + n * (n - 1); }
};

WeightedGraph build_gadget(const Instance& inst);

/// Edge {u,v} is in the 2-factor iff its internal gadget edge is unmatched.
/// Returns the cycles and sets the cover weight from the instance.
CycleCover decode_gadget_matching(const Instance& inst, const Matching& matching);

/// Maximum-weight 2-factor of the complete graph on the instance.
CycleCover max_weight_cycle_cover(const Instance& inst);

/// Exhaustive reference; n <= 9.
CycleCover cycle_cover_brute_force(const Instance& inst);

}  // namespace maxtsp
