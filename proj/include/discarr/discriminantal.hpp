#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

namespace discarr {

/// One hyperplane M_S of the discriminantal arrangement, through the origin of R^n.
struct DiscRow {
  Subset subset;     // size m + 1
  RatVector normal;  // length n, coefficients of y_1..y_n
};

/// The binom(n, m+1) hyperplanes M_S, rows in dictionary order of S.
class DiscArrangement {
 public:
  DiscArrangement() = default;
  DiscArrangement(std::size_t n, std::size_t m, std::vector<DiscRow> rows)
      : n_(n), m_(m), rows_(std::move(rows)) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<DiscRow>& rows() const { return rows_; }
  const DiscRow& operator[](std::size_t i) const { return rows_[i]; }

  /// 0-based row position of subset s, or nullopt.
  std::optional<std::size_t> index_of(const Subset& s) const;
  /// The normals stacked as a binom(n, m+1) x n matrix.
  RatMatrix matrix() const;
  std::vector<RatVector> normals() const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<DiscRow> rows_;
};

/// Normal of M_S: the coefficients of y obtained by expanding
///   det [ A_S | y_S ]
/// along its last column, so y_{i_t} gets (-1)^{m+1+t} times the m x m
/// minor of A on S without i_t. Requires |S| = m + 1.
RatVector disc_row(const RatMatrix& a, const Subset& s);

/// All rows, dictionary order. Throws PreconditionError unless n > m >= 1.
DiscArrangement build_disc(const RatMatrix& a);

/// Scales a nonzero vector to a primitive integer vector whose first nonzero
/// entry is positive. Two normals define the same hyperplane iff their
/// canonical forms agree.
RatVector canonicalize_normal(const RatVector& v);

}  // namespace discarr
