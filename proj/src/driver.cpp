#include "maxtsp/driver.hpp"

#include <cmath>
#include <string>

#include "maxtsp/cycle_cover.hpp"
#include "maxtsp/error.hpp"
#include "maxtsp/gluing.hpp"
#include "maxtsp/merge.hpp"

namespace maxtsp {

namespace {

void check_dim(double dim) {
  if (!(dim >= 0.0) || !std::isfinite(dim)) {
    throw InvalidArgument("dim must be a finite non-negative number");
  }
}

// n^(1/p), snapped to the integer root when one exists.
double root(std::size_t n, double p) {
  const double r = std::pow(static_cast<double>(n), 1.0 / p);
  const double snapped = std::round(r);
  if (std::pow(snapped, p) == static_cast<double>(n)) return snapped;
  return r;
}

}  // namespace

EptasPlan plan_eptas(std::size_t n, double epsilon, double dim) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0,1)");
  }
  check_dim(dim);
  EptasPlan plan;
  if (epsilon >= 1.0 / 6.0) {
    plan.branch = Branch::five_sixths;
    return plan;
  }
  plan.delta = (12.0 / 11.0) * epsilon;
  plan.n_threshold = std::pow((11.0 / 6.0) / epsilon, 2.0 * dim + 1.0);
  plan.branch = static_cast<double>(n) <= *plan.n_threshold ? Branch::exact_dp
                                                            : Branch::algorithm_a;
  return plan;
}

SolveResult eptas(const Instance& inst, double epsilon, double dim,
                  std::size_t dp_cap) {
  require_solvable(inst);
  const EptasPlan plan = plan_eptas(inst.size(), epsilon, dim);

  SolveResult out;
  switch (plan.branch) {
    case Branch::five_sixths:
      out = five_sixths(inst);
      break;
    case Branch::exact_dp:
      if (inst.size() <= dp_cap) {
        out = exact(inst, dp_cap);
      } else {
        out = algorithm_a_solve(inst, *plan.delta, dim);
        out.certificate.certified = false;
        out.certificate.note = "n exceeds the exact-DP cap of " +
                               std::to_string(dp_cap) +
                               "; ran algorithm-A without the (1-epsilon) guarantee";
      }
      break;
    case Branch::algorithm_a:
      out = algorithm_a_solve(inst, *plan.delta, dim);
      out.certificate.claimed_bound = 1.0 - epsilon;
      break;
  }
  auto& cert = out.certificate;
  cert.epsilon = epsilon;
  cert.dim = dim;
  cert.delta = plan.delta;
  cert.n_threshold = plan.n_threshold;
  return out;
}

AsymptoticPlan plan_asymptotic(std::size_t n, double dim) {
  check_dim(dim);
  const double p = 2.0 * dim + 1.0;  // q + 1
  AsymptoticPlan plan;
  const double r = root(n, p);
  plan.error_bound = (11.0 / 6.0) / r;
  if (static_cast<double>(n) <= std::pow(2.0, p)) {
    plan.branch = Branch::five_sixths;
  } else {
    plan.branch = Branch::algorithm_a;
    plan.delta = 2.0 / r;
  }
  return plan;
}

SolveResult asymptotic(const Instance& inst, double dim) {
  require_solvable(inst);
  const AsymptoticPlan plan = plan_asymptotic(inst.size(), dim);
  SolveResult out = plan.branch == Branch::five_sixths
                        ? five_sixths(inst)
                        : algorithm_a_solve(inst, *plan.delta, dim);
  auto& cert = out.certificate;
  cert.dim = dim;
  cert.claimed_error = plan.error_bound;
  if (plan.branch == Branch::algorithm_a) cert.claimed_bound = 1.0 - plan.error_bound;
  return out;
}

SolveResult exact(const Instance& inst, std::size_t dp_cap) {
  require_solvable(inst);
  SolveResult out;
  out.tour = held_karp_max(inst, dp_cap);
  const CycleCover cover = max_weight_cycle_cover(inst);
  auto& cert = out.certificate;
  cert.branch = Branch::exact_dp;
  cert.n = inst.size();
  cert.k_initial = cover.size();
  cert.weight_cover = cover.weight;
  cert.weight_tour = out.tour.weight;
  cert.claimed_bound = 1.0;
  return out;
}

SolveResult five_sixths(const Instance& inst) {
  auto [tour, cert] = kostochka_serdyukov_56(inst);
  return {std::move(tour), std::move(cert)};
}

SolveResult algorithm_a_solve(const Instance& inst, double delta,
                              std::optional<double> dim) {
  auto result = algorithm_a(inst, delta, dim);
  return {std::move(result.tour), std::move(result.certificate)};
}

}  // namespace maxtsp
