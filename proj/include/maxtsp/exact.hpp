#pragma once

#include "maxtsp/tour.hpp"

namespace maxtsp {

inline constexpr std::size_t kHeldKarpCap = 20;

/// Maximum-weight Hamiltonian cycle by subset DP over (visited set, last
/// vertex), O(2^n n^2) time and O(2^n n) memory. Throws SizeLimitExceeded
/// above `cap` (itself limited to 22).
Tour held_karp_max(const Instance& inst, std::size_t cap = kHeldKarpCap);

/// Enumerates the (n-1)!/2 distinct tours; n <= 10.
Tour brute_force_tour(const Instance& inst);

/// w(e) -> w_max - w(e) on every off-diagonal entry. The result is generally
/// not a metric. For every tour T: w(T) + w'(T) = n * w_max, so maximum tours
/// of the input are exactly the minimum tours of the transform.
Instance minmax_transform(const Instance& inst);

}  // namespace maxtsp
