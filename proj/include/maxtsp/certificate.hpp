#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace maxtsp {

enum class Branch { five_sixths, exact_dp, algorithm_a };

std::string_view to_string(Branch branch);

/// What a solver run did and what ratio it guarantees.
///
/// `claimed_bound` is the ratio to the optimum guaranteed for the branch taken;
/// guarantees that depend on the doubling dimension hold only if `dim` is a
/// true upper bound. `certified` is false whenever a size cap forced a branch
/// other than the prescribed one.
struct Certificate {
  Branch branch = Branch::algorithm_a;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> dim;
  std::optional<double> n_threshold;
  std::size_t n = 0;
  std::size_t k_initial = 0;
  std::optional<std::size_t> k_after_gluing;
  std::size_t gluings = 0;
  double weight_cover = 0.0;
  std::optional<double> weight_after_gluing;
  double weight_tour = 0.0;
  double claimed_bound = 1.0;
  /// Relative error promised by the asymptotic scheme.
  std::optional<double> claimed_error;
  /// (1 - 2/3 delta - k_final/n): holds for every metric input.
  std::optional<double> posterior_bound;
  /// 1 - 2/3 delta - (2/delta)^(2 dim) / (2n): needs a true dim.
  std::optional<double> closed_form_bound;
  std::optional<double> r_tau;
  std::optional<double> t_min;
  bool certified = true;
  std::string note;

  /// weight_tour / weight_cover (1 when the cover weighs nothing).
  double observed_ratio() const;

  /// One `key = value` per line; absent optionals are omitted.
  std::string to_text() const;
};

}  // namespace maxtsp
