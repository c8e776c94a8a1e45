#include "maxtsp/tour.hpp"

#include <algorithm>
#include <cmath>

namespace maxtsp {

double cycle_weight(const Instance& inst, const Cycle& cycle) {
  if (cycle.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    total += inst(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return total;
}

std::vector<Edge> cycle_edges(const Cycle& cycle) {
  std::vector<Edge> edges;
  edges.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.push_back(Edge::of(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return edges;
}

CycleCover make_cover(const Instance& inst, std::vector<Cycle> cycles) {
  CycleCover cover{std::move(cycles), 0.0};
  for (const auto& c : cover.cycles) cover.weight += cycle_weight(inst, c);
  return cover;
}

namespace {
bool close(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

bool is_valid_cover(const Instance& inst, const CycleCover& cover,
                    double rel_tol) {
  std::vector<int> seen(inst.size(), 0);
  double total = 0.0;
  for (const auto& c : cover.cycles) {
    if (c.size() < 3) return false;
    for (Vertex v : c) {
      if (v < 0 || static_cast<std::size_t>(v) >= inst.size() || seen[v]++) {
        return false;
      }
    }
    total += cycle_weight(inst, c);
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }) &&
         close(total, cover.weight, rel_tol);
}

Tour make_tour(const Instance& inst, Cycle order) {
  Tour tour{std::move(order), 0.0};
  tour.weight = cycle_weight(inst, tour.order);
  return tour;
}

bool is_valid_tour(const Instance& inst, const Tour& tour, double rel_tol) {
  if (tour.order.size() != inst.size()) return false;
  return is_valid_cover(inst, CycleCover{{tour.order}, tour.weight}, rel_tol);
}

Cycle canonical_cycle(const Cycle& cycle) {
  if (cycle.empty()) return cycle;
  Cycle out(cycle);
  auto start = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), start, out.end());
  if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

}  // namespace maxtsp
