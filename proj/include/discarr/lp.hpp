#pragma once

#include <optional>
#include <vector>

#include "discarr/matrix.hpp"

namespace discarr {

/// sign * (normal . y) > 0, with sign = +1 or -1.
struct StrictConstraint {
  RatVector normal;
  int sign = 1;
};

/// A point y with every strict constraint satisfied and normal . y = 0 for
/// every tight normal, or nullopt if none exists.
///
/// Solved exactly by maximizing eps subject to sign * (normal . y) >= eps and
/// eps <= 1 over the null space of the tight rows, with a dense rational
/// tableau and Bland's pivoting rule. The witness is checked by substitution
/// before it is returned.
std::optional<RatVector> lp_strict_witness(const std::vector<StrictConstraint>& strict,
                                           const std::vector<RatVector>& tight, std::size_t dim);

inline bool lp_strict_feasible(const std::vector<StrictConstraint>& strict,
                               const std::vector<RatVector>& tight, std::size_t dim) {
  return lp_strict_witness(strict, tight, dim).has_value();
}

/// maximize c . x subject to A x <= b, x >= 0, for b >= 0 (the origin is a
/// feasible basis). Returns the optimal x, or nullopt if unbounded.
std::optional<RatVector> simplex_max(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace discarr
