#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "discarr/matrix.hpp"

namespace discarr {

// Exact linear algebra over Q. Determinant and rank clear denominators row by
// row and then run fraction-free (Bareiss) elimination over the integers.

/// Determinant of a square matrix. Throws DimensionError if not square or empty.
Rational det(const RatMatrix& m);

/// Rank over Q; 0 for a matrix with no rows or no columns.
std::size_t rank(const RatMatrix& m);

/// Determinant of the submatrix on the given 1-based, strictly increasing
/// row and column indices.
Rational minor(const RatMatrix& m, std::span<const std::size_t> rows_1based,
               std::span<const std::size_t> cols_1based);

/// Reduced row echelon form, with the pivot column of each nonzero row.
struct Echelon {
  RatMatrix rref;                   // only the nonzero rows
  std::vector<std::size_t> pivots;  // pivot column per row, increasing
};
Echelon rref(const RatMatrix& m);

/// Basis of {x : m x = 0} as the columns of the result (m.cols() rows).
RatMatrix nullspace(const RatMatrix& m);

/// Inverse of a square matrix. Throws SingularMatrixError when det = 0.
RatMatrix inverse(const RatMatrix& m);

/// One solution of m x = rhs, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> rhs);

/// Cayley transform (I - S)(I + S)^{-1} of a skew-symmetric S: an exact
/// rational special orthogonal matrix. Throws PreconditionError if S is not
/// skew-symmetric and SingularMatrixError if I + S is singular.
RatMatrix cayley_orthogonal(const RatMatrix& skew);

/// Incremental row-echelon basis over Q. `add` reduces a vector against the
/// rows inserted so far and keeps it when it is independent of them.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if v increased the rank.
  bool add(std::span<const Rational> v);
  /// True iff v lies in the current span.
  bool contains(std::span<const Rational> v) const;
  void pop() { rows_.pop_back(); pivots_.pop_back(); }

 private:
  RatVector reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;  // each row has 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace discarr
