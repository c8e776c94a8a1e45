#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "maxtsp/certificate.hpp"
#include "maxtsp/exact.hpp"
#include "maxtsp/tour.hpp"

namespace maxtsp {

struct SolveResult {
  Tour tour;
  Certificate certificate;
};

/// Branch prescribed by the (1 - epsilon) scheme for an n-vertex instance.
struct EptasPlan {
  Branch branch = Branch::five_sixths;
  std::optional<double> delta;        // (12/11) epsilon when epsilon < 1/6
  std::optional<double> n_threshold;  // ((11/6)/epsilon)^(2 dim + 1)
};

/// Pure case analysis: epsilon >= 1/6 -> five-sixths; otherwise exact-dp when
/// n <= n(epsilon) and algorithm-A when n > n(epsilon).
EptasPlan plan_eptas(std::size_t n, double epsilon, double dim);

/// (1 - epsilon)-approximation, conditional on `dim` bounding the doubling
/// dimension. When the plan calls for the exact DP but n exceeds `dp_cap`,
/// Algorithm A runs instead and the certificate is marked uncertified.
SolveResult eptas(const Instance& inst, double epsilon, double dim,
                  std::size_t dp_cap = kHeldKarpCap);

struct AsymptoticPlan {
  Branch branch = Branch::five_sixths;
  std::optional<double> delta;  // 2 / n^(1/(2 dim + 1))
  double error_bound = 0.0;     // (11/6) / n^(1/(2 dim + 1))
};

/// n <= 2^(2 dim + 1) -> five-sixths, else algorithm-A.
AsymptoticPlan plan_asymptotic(std::size_t n, double dim);

/// Algorithm with relative error at most (11/6)/n^(1/(2 dim + 1)).
SolveResult asymptotic(const Instance& inst, double dim);

/// Exact optimum via the subset DP, with the max-weight cover recorded.
SolveResult exact(const Instance& inst, std::size_t dp_cap = kHeldKarpCap);

SolveResult five_sixths(const Instance& inst);

SolveResult algorithm_a_solve(const Instance& inst, double delta,
                              std::optional<double> dim = std::nullopt);

}  // namespace maxtsp
