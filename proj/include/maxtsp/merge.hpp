#pragma once

#include <utility>

#include "maxtsp/certificate.hpp"
#include "maxtsp/gluing.hpp"
#include "maxtsp/tour.hpp"

namespace maxtsp {

/// Best single-edge-pair patch joining two vertex-disjoint cycles.
struct Patch {
  Cycle merged;
  double loss = 0.0;  // removed weight minus added weight
};

/// Exhaustive search over (edge of a) x (edge of b) x both reconnections.
Patch best_patch(const Instance& inst, const Cycle& a, const Cycle& b);

/// Patches the cover into one Hamiltonian cycle.
///
/// Cycles are ordered by (length, smallest vertex). Each step applies the
/// cheapest patch over every pair of remaining cycles; the cycle with the
/// smallest mean edge weight alone admits a patch losing at most W/n, so the
/// result weighs at least (1 - 1/n)^(k-1) of the cover.
Tour serdyukov_combine(const Instance& inst, const CycleCover& cover);

/// 5/6-approximation: max-weight cover, drop each cycle's lightest edge, then
/// chain the paths (ordered by smallest vertex) choosing every path's
/// orientation to maximise the connecting edges.
std::pair<Tour, Certificate> kostochka_serdyukov_56(const Instance& inst);

/// Same, starting from a precomputed maximum-weight cover.
std::pair<Tour, Certificate> kostochka_serdyukov_56(const Instance& inst,
                                                    const CycleCover& cover);

}  // namespace maxtsp
