#include "discarr/arrangement.hpp"

#include <map>

#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

Arrangement::Arrangement(RatMatrix coeffs, RatVector constants)
    : coeffs_(std::move(coeffs)), constants_(std::move(constants)) {
  if (coeffs_.rows() == 0) throw PreconditionError("arrangement needs at least one hyperplane");
  if (coeffs_.cols() == 0) throw PreconditionError("arrangement needs ambient dimension >= 1");
  if (constants_.size() != coeffs_.rows()) throw PreconditionError("one constant per hyperplane required");
  for (std::size_t i = 0; i < coeffs_.rows(); ++i) {
    bool zero = true;
    for (const auto& x : coeffs_.row(i)) zero = zero && x.is_zero();
    if (zero) throw PreconditionError("hyperplane " + std::to_string(i + 1) + " has a zero normal");
  }
}

Arrangement Arrangement::with_constants(RatVector constants) const {
  return Arrangement(coeffs_, std::move(constants));
}

bool normals_generic(const RatMatrix& coeffs) {
  const std::size_t n = coeffs.rows(), m = coeffs.cols();
  if (n <= m) return rank(coeffs) == n;
  for (const auto& s : k_subsets(n, m)) {
    std::vector<std::size_t> idx;
    for (auto e : s) idx.push_back(e - 1);
    if (det(coeffs.select_rows(idx)).is_zero()) return false;
  }
  return true;
}

bool is_generic(const Arrangement& h) {
  if (!normals_generic(h.coeffs())) return false;
  const std::size_t n = h.n(), m = h.m();
  if (n <= m) return true;
  // Rows of A are independent on every m-subset, so an (m+1)-subset has an
  // empty intersection iff the bordered matrix [A_S | b_S] is nonsingular.
  RatMatrix bordered(m + 1, m + 1);
  for (const auto& s : k_subsets(n, m + 1)) {
    for (std::size_t r = 0; r <= m; ++r) {
      for (std::size_t j = 0; j < m; ++j) bordered(r, j) = h.coeffs()(s[r] - 1, j);
      bordered(r, m) = h.constants()[s[r] - 1];
    }
    if (det(bordered).is_zero()) return false;
  }
  return true;
}

std::optional<RatVector> intersection_point(const Arrangement& h, const Subset& which) {
  std::vector<std::size_t> idx;
  RatVector rhs;
  for (auto e : which) {
    if (e < 1 || e > h.n()) throw DimensionError("hyperplane index out of range");
    idx.push_back(e - 1);
    rhs.push_back(h.constants()[e - 1]);
  }
  const RatMatrix a = h.coeffs().select_rows(idx);
  if (rank(a) < h.m()) return std::nullopt;
  return solve(a, rhs);
}

ConcurrencyReport concurrency_report(const Arrangement& h) {
  if (!normals_generic(h.coeffs())) throw PreconditionError("concurrency report needs generic normals");
  const std::size_t n = h.n(), m = h.m();
  ConcurrencyReport report{{n, m, {}}, {}};
  if (n <= m) return report;

  std::map<RatVector, Subset> through;
  for (const auto& s : k_subsets(n, m)) {
    auto p = intersection_point(h, s);
    if (!p || through.contains(*p)) continue;
    Subset on;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(h.coeffs().row(i), *p) == h.constants()[i]) on.push_back(i + 1);
    through.emplace(std::move(*p), std::move(on));
  }

  std::map<Subset, RatVector> by_set;
  for (auto& [p, on] : through)
    if (on.size() > m) by_set.emplace(on, p);
  for (auto& [s, p] : by_set) {
    report.sets.members.push_back(s);
    report.points.push_back(p);
  }
  return report;
}

}  // namespace discarr
