#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

namespace discarr {

/// n affine hyperplanes a_i . x = b_i in R^m. Hyperplane indices are 1-based
/// in every public result; row i-1 of `coeffs` is hyperplane i.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws PreconditionError on n = 0, m = 0, a length mismatch or a zero row.
  Arrangement(RatMatrix coeffs, RatVector constants);

  std::size_t n() const { return coeffs_.rows(); }
  std::size_t m() const { return coeffs_.cols(); }
  const RatMatrix& coeffs() const { return coeffs_; }
  const RatVector& constants() const { return constants_; }

  /// Same normals, different constants.
  Arrangement with_constants(RatVector constants) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  RatMatrix coeffs_;
  RatVector constants_;
};

/// Every set of at most m rows is linearly independent.
bool normals_generic(const RatMatrix& coeffs);
inline bool normals_generic(const Arrangement& h) { return normals_generic(h.coeffs()); }

/// Any r <= m hyperplanes meet in dimension m - r and any r > m have empty
/// intersection.
bool is_generic(const Arrangement& h);

/// Points lying on more than m hyperplanes, each with the maximal index set
/// through it. Sets are reported in dictionary order.
struct ConcurrencyReport {
  SubsetFamily sets;
  std::vector<RatVector> points;
};

/// Requires normals_generic(h); throws PreconditionError otherwise.
ConcurrencyReport concurrency_report(const Arrangement& h);

/// Intersection point of the m hyperplanes with the given 1-based indices,
/// or nullopt when their normals are dependent.
std::optional<RatVector> intersection_point(const Arrangement& h, const Subset& which);

}  // namespace discarr
