#include "discarr/linalg.hpp"

#include <utility>

#include "discarr/errors.hpp"

namespace discarr {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. `scale` receives the
// product of those multipliers, so det(m) = det(result) / scale.
IntMatrix clear_denominators(const RatMatrix& m, mpz_class* scale = nullptr) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).value();
      mpz_class v = q.get_num() * (l / q.get_den());
      out[i][j] = std::move(v);
    }
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free forward elimination; returns the rank and leaves the
// determinant of the leading pivot block in the last pivot.
std::size_t bareiss(IntMatrix& a, std::size_t cols, int* sign, mpz_class* last_pivot) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class t;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  return r;
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (idx[t] < 1 || idx[t] > bound) throw DimensionError(std::string(what) + " index out of range");
    if (t > 0 && idx[t] <= idx[t - 1]) throw DimensionError(std::string(what) + " indices not strictly increasing");
  }
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionError("det requires a non-empty square matrix");
  mpz_class scale;
  IntMatrix a = clear_denominators(m, &scale);
  int sign = 1;
  mpz_class last;
  const std::size_t r = bareiss(a, m.cols(), &sign, &last);
  if (r < m.rows()) return Rational(0);
  return Rational(mpz_class(sign * last), scale);
}

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = clear_denominators(m);
  return bareiss(a, m.cols(), nullptr, nullptr);
}

Rational minor(const RatMatrix& m, std::span<const std::size_t> rows_1based,
               std::span<const std::size_t> cols_1based) {
  if (rows_1based.size() != cols_1based.size() || rows_1based.empty()) {
    throw DimensionError("minor needs equally many (>= 1) row and column indices");
  }
  check_indices(rows_1based, m.rows(), "row");
  check_indices(cols_1based, m.cols(), "column");
  const std::size_t l = rows_1based.size();
  RatMatrix sub(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) sub(i, j) = m(rows_1based[i] - 1, cols_1based[j] - 1);
  return det(sub);
}

Echelon rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return {std::move(out), std::move(pivots)};
}

RatMatrix nullspace(const RatMatrix& m) {
  const auto [e, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis(n, n - pivots.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], col) = -e(i, f);
    ++col;
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse requires a square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto [e, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const auto [e, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = e(i, n);
  return x;
}

RatMatrix cayley_orthogonal(const RatMatrix& skew) {
  if (skew.rows() != skew.cols()) throw DimensionError("Cayley transform needs a square matrix");
  for (std::size_t i = 0; i < skew.rows(); ++i)
    for (std::size_t j = 0; j < skew.cols(); ++j)
      if (skew(i, j) != -skew(j, i)) throw PreconditionError("Cayley transform input is not skew-symmetric");
  const RatMatrix id = RatMatrix::identity(skew.rows());
  return (id - skew) * inverse(id + skew);
}

RatVector IncrementalBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw DimensionError("vector length does not match basis dimension");
  RatVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (w[p].is_zero()) continue;
    const Rational f = w[p];
    const RatVector& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) w[j] -= f * row[j];
    }
  }
  return w;
}

bool IncrementalBasis::add(std::span<const Rational> v) {
  RatVector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool IncrementalBasis::contains(std::span<const Rational> v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace discarr
