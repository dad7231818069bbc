#include "discarr/flats.hpp"

#include <algorithm>
#include <set>

#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

VectorMatroid::VectorMatroid(std::vector<RatVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.size() > 64) throw PreconditionError("vector matroid limited to 64 elements");
  dim_ = vectors_.empty() ? 0 : vectors_.front().size();
  for (const auto& v : vectors_)
    if (v.size() != dim_) throw DimensionError("vectors of different lengths");
}

std::size_t VectorMatroid::rank(RowSet s) const {
  IncrementalBasis b(dim_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (s >> i & 1u) b.add(vectors_[i]);
  return b.rank();
}

RowSet VectorMatroid::closure(RowSet s) const {
  IncrementalBasis b(dim_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (s >> i & 1u) b.add(vectors_[i]);
  RowSet out = s;
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (!(s >> i & 1u) && b.contains(vectors_[i])) out |= RowSet{1} << i;
  return out;
}

std::vector<Flat> VectorMatroid::flats() const {
  std::vector<Flat> out;
  std::set<RowSet> level{closure(0)};
  std::size_t r = 0;
  while (!level.empty()) {
    for (auto f : level) out.push_back({f, r});
    std::set<RowSet> next;
    for (auto f : level) {
      for (std::size_t j = 0; j < vectors_.size(); ++j) {
        if (f >> j & 1u) continue;
        const RowSet g = closure(f | RowSet{1} << j);
        next.insert(g);
      }
    }
    level = std::move(next);
    ++r;
  }
  return out;
}

std::vector<long long> mobius_from_bottom(const std::vector<Flat>& flats) {
  std::vector<long long> mu(flats.size(), 0);
  if (flats.empty()) return mu;
  mu[0] = 1;
  for (std::size_t g = 1; g < flats.size(); ++g) {
    long long s = 0;
    for (std::size_t f = 0; f < g; ++f) {
      if (flats[f].rank < flats[g].rank && (flats[f].elements & ~flats[g].elements) == 0) s += mu[f];
    }
    mu[g] = -s;
  }
  return mu;
}

}  // namespace discarr
