#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "discarr/matrix.hpp"

namespace discarr {

using RowSet = std::uint64_t;

struct Flat {
  RowSet elements = 0;
  std::size_t rank = 0;
};

/// Matroid of a list of vectors in Q^d (at most 64), with flats as row sets.
class VectorMatroid {
 public:
  /// Throws PreconditionError on more than 64 vectors or ragged lengths.
  explicit VectorMatroid(std::vector<RatVector> vectors);

  std::size_t size() const { return vectors_.size(); }
  std::size_t dim() const { return dim_; }
  const RatVector& vector(std::size_t i) const { return vectors_[i]; }

  std::size_t rank(RowSet s) const;
  /// Every element whose vector lies in the span of s.
  RowSet closure(RowSet s) const;

  /// All flats, sorted by rank and then by row set; the first is closure(0).
  std::vector<Flat> flats() const;

 private:
  std::vector<RatVector> vectors_;
  std::size_t dim_ = 0;
};

/// mu(bottom, F) for every flat, where flats come from VectorMatroid::flats().
std::vector<long long> mobius_from_bottom(const std::vector<Flat>& flats);

}  // namespace discarr
