#include "maxtsp/merge.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "maxtsp/cycle_cover.hpp"
#include "maxtsp/error.hpp"

namespace maxtsp {

namespace {

// `cycle` rotated to begin at index `start`, optionally walked backwards.
Cycle rotated(const Cycle& cycle, std::size_t start, bool backwards) {
  const auto len = cycle.size();
  Cycle out;
  out.reserve(len);
  for (std::size_t step = 0; step < len; ++step) {
    out.push_back(backwards ? cycle[(start + len - step) % len]
                            : cycle[(start + step) % len]);
  }
  return out;
}

}  // namespace

Patch best_patch(const Instance& inst, const Cycle& a, const Cycle& b) {
  const auto la = a.size();
  const auto lb = b.size();
  double best_loss = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  bool best_cross = false;

  for (std::size_t i = 0; i < la; ++i) {
    const Vertex ai = a[i];
    const Vertex ai1 = a[(i + 1) % la];
    const double wa = inst(ai, ai1);
    for (std::size_t j = 0; j < lb; ++j) {
      const Vertex bj = b[j];
      const Vertex bj1 = b[(j + 1) % lb];
      const double removed = wa + inst(bj, bj1);
      const double parallel = removed - (inst(ai, bj) + inst(ai1, bj1));
      const double cross = removed - (inst(ai, bj1) + inst(ai1, bj));
      if (parallel < best_loss) {
        best_loss = parallel;
        best_i = i;
        best_j = j;
        best_cross = false;
      }
      if (cross < best_loss) {
        best_loss = cross;
        best_i = i;
        best_j = j;
        best_cross = true;
      }
    }
  }

  // a[i+1] .. a[i], then into b and back to a[i+1].
  Patch patch;
  patch.loss = best_loss;
  patch.merged = rotated(a, (best_i + 1) % la, false);
  const Cycle tail = best_cross ? rotated(b, (best_j + 1) % lb, false)
                                : rotated(b, best_j, true);
  patch.merged.insert(patch.merged.end(), tail.begin(), tail.end());
  return patch;
}

Tour serdyukov_combine(const Instance& inst, const CycleCover& cover) {
  if (!is_valid_cover(inst, cover, 1e-6)) throw InvalidArgument("invalid cycle cover");
  std::vector<Cycle> cycles = cover.cycles;
  if (cycles.size() == 1) return make_tour(inst, cycles.front());

  std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& x, const Cycle& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });

  while (cycles.size() > 1) {
    std::size_t best_p = 0;
    std::size_t best_q = 1;
    Patch best{{}, std::numeric_limits<double>::infinity()};
    for (std::size_t p = 0; p < cycles.size(); ++p) {
      for (std::size_t q = p + 1; q < cycles.size(); ++q) {
        Patch candidate = best_patch(inst, cycles[p], cycles[q]);
        if (candidate.loss < best.loss) {
          best = std::move(candidate);
          best_p = p;
          best_q = q;
        }
      }
    }
    cycles[best_p] = std::move(best.merged);
    cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(best_q));
  }
  return make_tour(inst, std::move(cycles.front()));
}

std::pair<Tour, Certificate> kostochka_serdyukov_56(const Instance& inst) {
  require_solvable(inst);
  return kostochka_serdyukov_56(inst, max_weight_cycle_cover(inst));
}

std::pair<Tour, Certificate> kostochka_serdyukov_56(const Instance& inst,
                                                    const CycleCover& cover) {
  Certificate cert;
  cert.branch = Branch::five_sixths;
  cert.n = inst.size();
  cert.k_initial = cover.size();
  cert.weight_cover = cover.weight;
  cert.claimed_bound = 5.0 / 6.0;

  if (cover.size() == 1) {
    Tour tour = make_tour(inst, cover.cycles.front());
    cert.weight_tour = tour.weight;
    return {std::move(tour), cert};
  }

  // Each path runs from one end of its dropped edge to the other.
  std::vector<Cycle> paths;
  for (const auto& cycle : cover.cycles) {
    const auto edges = cycle_edges(cycle);
    const Edge drop = lightest_edge(inst, edges);
    const auto len = cycle.size();
    std::size_t pos = 0;
    while (Edge::of(cycle[pos], cycle[(pos + 1) % len]) != drop) ++pos;
    paths.push_back(rotated(cycle, (pos + 1) % len, false));
  }
  std::sort(paths.begin(), paths.end(), [](const Cycle& x, const Cycle& y) {
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });

  const std::size_t k = paths.size();
  auto entry = [&](std::size_t i, int o) { return o == 0 ? paths[i].front() : paths[i].back(); };
  auto exit = [&](std::size_t i, int o) { return o == 0 ? paths[i].back() : paths[i].front(); };

  // Orientation DP around the ring of paths; path 0's orientation is fixed
  // per outer iteration so the closing edge is known.
  double best_total = -std::numeric_limits<double>::infinity();
  std::vector<int> best_orient(k, 0);
  for (int first = 0; first < 2; ++first) {
    std::vector<std::array<double, 2>> score(k);
    std::vector<std::array<int, 2>> from(k, {0, 0});
    score[0] = {first == 0 ? 0.0 : -std::numeric_limits<double>::infinity(),
                first == 1 ? 0.0 : -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 1; i < k; ++i) {
      for (int o = 0; o < 2; ++o) {
        score[i][o] = -std::numeric_limits<double>::infinity();
        for (int prev = 0; prev < 2; ++prev) {
          const double s = score[i - 1][prev] + inst(exit(i - 1, prev), entry(i, o));
          if (s > score[i][o]) {
            score[i][o] = s;
            from[i][o] = prev;
          }
        }
      }
    }
    for (int o = 0; o < 2; ++o) {
      const double total = score[k - 1][o] + inst(exit(k - 1, o), entry(0, first));
      if (total > best_total) {
        best_total = total;
        best_orient[k - 1] = o;
        for (std::size_t i = k - 1; i > 0; --i) best_orient[i - 1] = from[i][best_orient[i]];
      }
    }
  }

  Cycle order;
  order.reserve(inst.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (best_orient[i] == 0) {
      order.insert(order.end(), paths[i].begin(), paths[i].end());
    } else {
      order.insert(order.end(), paths[i].rbegin(), paths[i].rend());
    }
  }
  Tour tour = make_tour(inst, std::move(order));
  cert.weight_tour = tour.weight;
  return {std::move(tour), cert};
}

}  // namespace maxtsp
