#include "maxtsp/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "maxtsp/error.hpp"
#include "maxtsp/merge.hpp"

namespace maxtsp {

namespace {

double weight_of(const Instance& inst, Edge e) { return inst(e.a, e.b); }

bool lighter(const Instance& inst, Edge x, Edge y) {
  const double wx = weight_of(inst, x);
  const double wy = weight_of(inst, y);
  return wx < wy || (wx == wy && x < y);
}

// Vertices of `cycle` from `from` to its neighbour `to`, skipping the edge
// between them.
Cycle walk_around(const Cycle& cycle, Vertex from, Vertex to) {
  const auto len = cycle.size();
  const auto pos = static_cast<std::size_t>(
      std::find(cycle.begin(), cycle.end(), from) - cycle.begin());
  const bool forward_hits_to = cycle[(pos + 1) % len] == to;
  Cycle out;
  out.reserve(len);
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t idx =
        forward_hits_to ? (pos + len - step) % len : (pos + step) % len;
    out.push_back(cycle[idx]);
  }
  return out;
}

bool has_edge(const Cycle& cycle, Edge e) {
  const auto len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (Edge::of(cycle[i], cycle[(i + 1) % len]) == e) return true;
  }
  return false;
}

}  // namespace

Edge lightest_edge(const Instance& inst, std::span<const Edge> edges) {
  return *std::min_element(edges.begin(), edges.end(), [&](Edge x, Edge y) {
    return lighter(inst, x, y);
  });
}

EdgeSets select_e0(const Instance& inst, const CycleCover& cover) {
  EdgeSets out;
  out.reserve(cover.cycles.size());
  for (const auto& cycle : cover.cycles) {
    auto edges = cycle_edges(cycle);
    std::sort(edges.begin(), edges.end(),
              [&](Edge x, Edge y) { return lighter(inst, x, y); });
    edges.resize(std::min<std::size_t>(2, edges.size()));
    out.push_back(std::move(edges));
  }
  return out;
}

double gluing_tolerance(const Instance& inst) { return 1e-12 * inst.max_distance(); }

std::optional<Gluing> try_delta_gluing(const Instance& inst, const Cycle& c1,
                                       const Cycle& c2, Edge e1, Edge e2,
                                       double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0,1)");
  if (!has_edge(c1, e1) || !has_edge(c2, e2)) {
    throw InvalidArgument("gluing edge does not belong to its cycle");
  }
  for (Vertex v : c1) {
    if (std::find(c2.begin(), c2.end(), v) != c2.end()) {
      throw InvalidArgument("cycles share vertex " + std::to_string(v));
    }
  }

  const auto [a1, b1] = e1;
  const auto [a2, b2] = e2;
  const double removed = inst(a1, b1) + inst(a2, b2);
  const double cross = inst(a1, b2) + inst(a2, b1);
  const double parallel = inst(a1, a2) + inst(b1, b2);
  const bool use_cross = cross >= parallel;
  const double added = use_cross ? cross : parallel;
  if (added < (1.0 - delta) * removed - gluing_tolerance(inst)) return std::nullopt;

  Gluing g;
  g.pattern = use_cross ? Reconnection::cross : Reconnection::parallel;
  g.removed_weight = removed;
  g.added_weight = added;
  // b1 .. a1 then across to the second cycle and back to b1.
  g.merged = walk_around(c1, b1, a1);
  const Cycle tail = use_cross ? walk_around(c2, b2, a2) : walk_around(c2, a2, b2);
  g.merged.insert(g.merged.end(), tail.begin(), tail.end());
  if (use_cross) {
    g.added_first = Edge::of(a1, b2);
    g.added_second = Edge::of(a2, b1);
  } else {
    g.added_first = Edge::of(a1, a2);
    g.added_second = Edge::of(b1, b2);
  }
  return g;
}

// ---------------------------------------------------------------------------

GluingState::GluingState(const Instance& inst, const CycleCover& cover,
                         EdgeSets e0, double delta)
    : inst_(&inst), cycles_(cover.cycles), e0_(std::move(e0)), delta_(delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0,1)");
  if (e0_.size() != cycles_.size()) {
    throw InvalidArgument("E0 must hold one edge list per cycle");
  }
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (e0_[i].empty()) throw InvalidArgument("cycle without E0 edges");
    for (Edge e : e0_[i]) {
      if (!has_edge(cycles_[i], e)) {
        throw InvalidArgument("E0 edge is not an edge of its cycle");
      }
    }
  }
  for (const auto& c : cycles_) weight_ += cycle_weight(inst, c);
}

std::vector<Edge> GluingState::selected_edges() const {
  std::vector<Edge> out;
  out.reserve(e0_.size());
  for (const auto& edges : e0_) out.push_back(lightest_edge(*inst_, edges));
  return out;
}

bool GluingState::step() {
  const auto selected = selected_edges();
  const auto k = cycles_.size();
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      auto g = try_delta_gluing(*inst_, cycles_[p], cycles_[q], selected[p],
                                selected[q], delta_);
      if (!g) continue;

      log_.push_back({p, q, selected[p], selected[q], g->added_first,
                      g->added_second, g->removed_weight, g->added_weight});
      weight_ += g->added_weight - g->removed_weight;
      cycles_[p] = std::move(g->merged);
      cycles_.erase(cycles_.begin() + static_cast<std::ptrdiff_t>(q));

      auto& merged_e0 = e0_[p];
      std::erase(merged_e0, selected[p]);
      for (Edge e : e0_[q]) {
        if (e != selected[q]) merged_e0.push_back(e);
      }
      e0_.erase(e0_.begin() + static_cast<std::ptrdiff_t>(q));
      return true;
    }
  }
  return false;
}

void GluingState::run() {
  while (step()) {
  }
}

CycleCover GluingState::cover() const { return make_cover(*inst_, cycles_); }

CycleCover gluing_loop(const Instance& inst, const CycleCover& cover,
                       const EdgeSets& e0, double delta) {
  GluingState state(inst, cover, e0, delta);
  state.run();
  return state.cover();
}

RTau r_tau(const Instance& inst, std::span<const Edge> selected) {
  if (selected.empty()) throw InvalidArgument("r_tau needs at least one edge");
  RTau out;
  out.tau = 0;
  for (std::size_t i = 1; i < selected.size(); ++i) {
    if (weight_of(inst, selected[i]) < weight_of(inst, selected[out.tau])) out.tau = i;
  }
  const Edge pivot = selected[out.tau];
  out.t = weight_of(inst, pivot);
  for (Edge e : selected) {
    for (Vertex v : {e.a, e.b}) {
      out.value = std::max(out.value, std::min(inst(pivot.a, v), inst(pivot.b, v)));
    }
  }
  return out;
}

double posterior_ratio_bound(double delta, std::size_t k, std::size_t n) {
  return 1.0 - (2.0 / 3.0) * delta - static_cast<double>(k) / static_cast<double>(n);
}

double cycle_count_bound(double delta, double dim) {
  return std::pow(2.0 / delta, 2.0 * dim) / 2.0;
}

double closed_form_ratio_bound(double delta, double dim, std::size_t n) {
  return 1.0 - (2.0 / 3.0) * delta -
         cycle_count_bound(delta, dim) / static_cast<double>(n);
}

AlgorithmAResult algorithm_a(const Instance& inst, double delta,
                             std::optional<double> dim) {
  require_solvable(inst);
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0,1)");
  if (!dim) dim = inst.dim_hint();

  AlgorithmAResult result;
  result.initial_cover = max_weight_cycle_cover(inst);
  result.e0 = select_e0(inst, result.initial_cover);

  GluingState state(inst, result.initial_cover, result.e0, delta);
  state.run();
  result.glued_cover = state.cover();
  result.log = state.log();
  result.final_selection = state.selected_edges();
  result.tour = serdyukov_combine(inst, result.glued_cover);

  const auto n = inst.size();
  const auto k_final = result.glued_cover.size();
  const RTau radius = r_tau(inst, result.final_selection);

  auto& cert = result.certificate;
  cert.branch = Branch::algorithm_a;
  cert.delta = delta;
  cert.dim = dim;
  cert.n = n;
  cert.k_initial = result.initial_cover.size();
  cert.k_after_gluing = k_final;
  cert.gluings = result.log.size();
  cert.weight_cover = result.initial_cover.weight;
  cert.weight_after_gluing = result.glued_cover.weight;
  cert.weight_tour = result.tour.weight;
  cert.posterior_bound = posterior_ratio_bound(delta, k_final, n);
  if (dim) cert.closed_form_bound = closed_form_ratio_bound(delta, *dim, n);
  cert.claimed_bound = *cert.posterior_bound;
  cert.r_tau = radius.value;
  cert.t_min = radius.t;
  cert.certified = true;
  return result;
}

}  // namespace maxtsp
