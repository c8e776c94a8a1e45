#pragma once

#include <optional>
#include <span>
#include <vector>

#include "maxtsp/certificate.hpp"
#include "maxtsp/cycle_cover.hpp"
#include "maxtsp/tour.hpp"

namespace maxtsp {

/// Per-cycle edge lists, indexed like CycleCover::cycles.
using EdgeSets = std::vector<std::vector<Edge>>;

/// The two lightest edges of every cycle, ties broken by (a, b). Their total
/// weight is at most 2/3 of the cover weight since every cycle has >= 3 edges.
EdgeSets select_e0(const Instance& inst, const CycleCover& cover);

/// Lightest edge of `edges`, ties broken by (a, b). `edges` must be non-empty.
Edge lightest_edge(const Instance& inst, std::span<const Edge> edges);

/// Slack granted to every gluing threshold comparison: 1e-12 * max distance.
double gluing_tolerance(const Instance& inst);

enum class Reconnection {
  cross,     // {a1,b2} + {a2,b1}
  parallel,  // {a1,a2} + {b1,b2}
};

struct Gluing {
  Cycle merged;
  Reconnection pattern = Reconnection::cross;
  Edge added_first;
  Edge added_second;
  double removed_weight = 0.0;
  double added_weight = 0.0;
};

/// Attempts a delta-gluing of vertex-disjoint cycles c1, c2 on edges e1 (of
/// c1) and e2 (of c2). Takes the heavier replacement pair (cross on ties) and
/// succeeds iff its weight is at least (1 - delta)(w(e1) + w(e2)), up to
/// gluing_tolerance(). Throws InvalidArgument when the preconditions fail.
std::optional<Gluing> try_delta_gluing(const Instance& inst, const Cycle& c1,
                                       const Cycle& c2, Edge e1, Edge e2,
                                       double delta);

struct GluingRecord {
  std::size_t p = 0;  // surviving index; q is erased
  std::size_t q = 0;
  Edge removed_first;
  Edge removed_second;
  Edge added_first;
  Edge added_second;
  double removed_weight = 0.0;
  double added_weight = 0.0;
};

/// Working state of the cycle-reduction loop.
///
/// Each round picks the lightest surviving E0 edge of every cycle, scans
/// cycle pairs (p, q) in lexicographic order and performs the first feasible
/// delta-gluing. Removed edges are always E0 edges and replacing edges always
/// join different initial cycles, so a removed edge never comes back.
class GluingState {
 public:
  GluingState(const Instance& inst, const CycleCover& cover, EdgeSets e0,
              double delta);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  const EdgeSets& surviving_e0() const { return e0_; }
  const std::vector<GluingRecord>& log() const { return log_; }
  double delta() const { return delta_; }
  double weight() const { return weight_; }
  std::size_t size() const { return cycles_.size(); }

  /// Current per-cycle choice: the lightest surviving E0 edge.
  std::vector<Edge> selected_edges() const;

  /// Performs one gluing; false when no pair admits one.
  bool step();
  void run();

  CycleCover cover() const;

 private:
  const Instance* inst_;
  std::vector<Cycle> cycles_;
  EdgeSets e0_;
  double delta_;
  double weight_ = 0.0;
  std::vector<GluingRecord> log_;
};

/// Runs the loop to completion and returns the reduced cover.
CycleCover gluing_loop(const Instance& inst, const CycleCover& cover,
                       const EdgeSets& e0, double delta);

/// Radius of the selected endpoints around the shortest selected edge.
struct RTau {
  double value = 0.0;
  std::size_t tau = 0;  // index of the shortest selected edge
  double t = 0.0;       // its weight
};

/// dist({a,b}, v) = min(dist(a,v), dist(b,v)); the result is the max over
/// all selected endpoints v of dist({a_tau,b_tau}, v). Ties on the shortest
/// edge go to the lowest index.
RTau r_tau(const Instance& inst, std::span<const Edge> selected);

struct AlgorithmAResult {
  Tour tour;
  Certificate certificate;
  CycleCover initial_cover;
  CycleCover glued_cover;
  EdgeSets e0;
  std::vector<GluingRecord> log;
  std::vector<Edge> final_selection;
};

/// Max-weight cycle cover, E0 selection, gluing loop, then cycle patching.
/// `dim` (defaulting to the instance hint) only feeds the closed-form bound
/// recorded in the certificate.
AlgorithmAResult algorithm_a(const Instance& inst, double delta,
                             std::optional<double> dim = std::nullopt);

/// (1 - 2/3 delta - k/n).
double posterior_ratio_bound(double delta, std::size_t k, std::size_t n);
/// 1 - 2/3 delta - (2/delta)^(2 dim) / (2n).
double closed_form_ratio_bound(double delta, double dim, std::size_t n);
/// (2/delta)^(2 dim) / 2.
double cycle_count_bound(double delta, double dim);

}  // namespace maxtsp
