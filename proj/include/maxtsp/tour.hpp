#pragma once

#include <compare>
#include <vector>

#include "maxtsp/instance.hpp"

namespace maxtsp {

/// Undirected edge with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge of(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Cyclic vertex sequence; consecutive entries and (back, front) are edges.
using Cycle = std::vector<Vertex>;

double cycle_weight(const Instance& inst, const Cycle& cycle);

/// Edges of a cycle in traversal order, (c[i], c[i+1]) with wrap-around.
std::vector<Edge> cycle_edges(const Cycle& cycle);

struct CycleCover {
  std::vector<Cycle> cycles;
  double weight = 0.0;

  std::size_t size() const { return cycles.size(); }
};

/// Recomputes the total weight from the cycles.
CycleCover make_cover(const Instance& inst, std::vector<Cycle> cycles);

/// Cycles partition {0..n-1}, each cycle has >= 3 vertices, and the stored
/// weight matches the recomputed one within `rel_tol`.
bool is_valid_cover(const Instance& inst, const CycleCover& cover,
                    double rel_tol = 1e-9);

struct Tour {
  Cycle order;
  double weight = 0.0;
};

Tour make_tour(const Instance& inst, Cycle order);

bool is_valid_tour(const Instance& inst, const Tour& tour, double rel_tol = 1e-9);

/// Rotation starting at vertex 0, in the direction whose second vertex is the
/// smaller one.
Cycle canonical_cycle(const Cycle& cycle);

}  // namespace maxtsp
