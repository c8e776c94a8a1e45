#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace maxtsp {

struct WeightedEdge {
  int u;
  int v;
  double w;
};

/// Undirected simple graph. Checked on entry to the matching routines:
/// endpoints in range, no loops, no duplicate pairs, finite weights.
struct WeightedGraph {
  int num_vertices = 0;
  std::vector<WeightedEdge> edges;

  void add_edge(int u, int v, double w) { edges.push_back({u, v, w}); }
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // each pair stored with first < second
  double weight = 0.0;
};

void validate_graph(const WeightedGraph& g);

/// Maximum-weight perfect matching on a general graph.
///
/// Primal-dual blossom method (Edmonds, in Galil's formulation) run in
/// maximum-cardinality mode, so negative weights are fine. Weights are mapped
/// onto a 64-bit integer grid with a power-of-two scale (2^40 steps across the
/// largest |w|); the optimum is exact whenever the weights lie on that grid,
/// which covers integers and short binary fractions.
///
/// `dual_hint`, when non-empty, gives one starting dual per vertex (ideally
/// y_u + y_v >= w for every edge). It is repaired if infeasible and only
/// affects running time.
///
/// Throws InvalidArgument for odd vertex counts and NoPerfectMatching when the
/// graph has none.
Matching max_weight_perfect_matching(const WeightedGraph& g,
                                     std::span<const double> dual_hint = {});

/// Exhaustive search over all perfect matchings; num_vertices <= 12.
Matching matching_brute_force(const WeightedGraph& g);

/// True iff `m` pairs every vertex exactly once using edges of `g`.
bool is_perfect_matching(const WeightedGraph& g, const Matching& m);

}  // namespace maxtsp
