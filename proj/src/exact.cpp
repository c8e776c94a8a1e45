#include "maxtsp/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "maxtsp/error.hpp"

namespace maxtsp {

Tour held_karp_max(const Instance& inst, std::size_t cap) {
  require_solvable(inst);
  cap = std::min<std::size_t>(cap, 22);
  const std::size_t n = inst.size();
  if (n > cap) {
    throw SizeLimitExceeded("exact DP is capped at n = " + std::to_string(cap) +
                            ", got " + std::to_string(n));
  }

  // Vertex 0 is the fixed start; masks range over vertices 1..n-1 (bit v-1).
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  std::vector<double> best((full + 1) * m, kNone);
  std::vector<std::uint8_t> parent((full + 1) * m, 0);
  auto at = [m](std::size_t mask, std::size_t last) { return mask * m + last; };

  for (std::size_t v = 0; v < m; ++v) {
    best[at(std::size_t{1} << v, v)] = inst(0, static_cast<Vertex>(v + 1));
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < m; ++last) {
      if (!(mask & (std::size_t{1} << last))) continue;
      const double here = best[at(mask, last)];
      if (here == kNone) continue;
      for (std::size_t next = 0; next < m; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t grown = mask | (std::size_t{1} << next);
        const double cand =
            here + inst(static_cast<Vertex>(last + 1), static_cast<Vertex>(next + 1));
        if (cand > best[at(grown, next)]) {
          best[at(grown, next)] = cand;
          parent[at(grown, next)] = static_cast<std::uint8_t>(last);
        }
      }
    }
  }

  std::size_t last = 0;
  double top = kNone;
  for (std::size_t v = 0; v < m; ++v) {
    const double total = best[at(full, v)] + inst(static_cast<Vertex>(v + 1), 0);
    if (total > top) {
      top = total;
      last = v;
    }
  }

  Cycle order;
  order.reserve(n);
  std::size_t mask = full;
  while (mask) {
    order.push_back(static_cast<Vertex>(last + 1));
    const std::size_t prev = parent[at(mask, last)];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return make_tour(inst, canonical_cycle(order));
}

Tour brute_force_tour(const Instance& inst) {
  require_solvable(inst);
  if (inst.size() > 10) throw SizeLimitExceeded("brute-force tour is capped at n = 10");
  Cycle perm(inst.size());
  std::iota(perm.begin(), perm.end(), 0);
  Tour best{{}, -std::numeric_limits<double>::infinity()};
  do {
    if (perm[1] > perm.back()) continue;  // each tour once
    const double w = cycle_weight(inst, perm);
    if (w > best.weight) best = {perm, w};
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

Instance minmax_transform(const Instance& inst) {
  const std::size_t n = inst.size();
  const double top = inst.max_distance();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out[i * n + j] = top - inst.matrix()[i * n + j];
    }
  }
  return Instance(n, std::move(out));
}

}  // namespace maxtsp
