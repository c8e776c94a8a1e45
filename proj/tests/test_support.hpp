#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maxtsp/instance.hpp"
#include "maxtsp/matching.hpp"

namespace maxtsp::testing {

inline Instance equilateral(std::size_t n) {
  std::vector<double> d(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  return Instance(n, std::move(d));
}

inline Instance random_metric(std::size_t n, std::uint64_t seed) {
  return generate({Family::random_metric, n, 1, seed, 1.0});
}

inline Instance line(std::size_t n, std::uint64_t seed) {
  return generate({Family::line, n, 1, seed, 1.0});
}

/// Random simple graph with integer weights in [lo, hi].
inline WeightedGraph random_graph(int nv, double density, int lo, int hi,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> weight(lo, hi);
  WeightedGraph g;
  g.num_vertices = nv;
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      if (keep(rng)) g.add_edge(u, v, weight(rng));
    }
  }
  return g;
}

}  // namespace maxtsp::testing
