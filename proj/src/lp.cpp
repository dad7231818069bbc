#include "discarr/lp.hpp"

#include <stdexcept>

#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

std::optional<RatVector> simplex_max(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t rows = a.rows(), vars = a.cols();
  if (b.size() != rows || c.size() != vars) throw DimensionError("simplex_max: shape mismatch");
  for (const auto& v : b)
    if (v.sign() < 0) throw PreconditionError("simplex_max: right-hand side must be nonnegative");

  // Columns: structural variables, then one slack per row, then the rhs.
  const std::size_t width = vars + rows + 1;
  RatMatrix t(rows, width);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t(i, j) = a(i, j);
    t(i, vars + i) = 1;
    t(i, width - 1) = b[i];
    basis[i] = vars + i;
  }
  // Reduced costs c_j - z_j; the origin basis has z = 0.
  RatVector reduced(width - 1);
  for (std::size_t j = 0; j < vars; ++j) reduced[j] = c[j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced[j].sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      const Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) return std::nullopt;

    const Rational piv = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) = t(leave, j) / piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) t(i, j) = t(i, j) - f * t(leave, j);
    }
    const Rational f = reduced[enter];
    for (std::size_t j = 0; j + 1 < width; ++j) reduced[j] = reduced[j] - f * t(leave, j);
    basis[leave] = enter;
  }

  RatVector x(vars);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < vars) x[basis[i]] = t(i, width - 1);
  return x;
}

std::optional<RatVector> lp_strict_witness(const std::vector<StrictConstraint>& strict,
                                           const std::vector<RatVector>& tight, std::size_t dim) {
  for (const auto& s : strict) {
    if (s.normal.size() != dim) throw DimensionError("strict constraint has the wrong length");
    if (s.sign != 1 && s.sign != -1) throw PreconditionError("constraint sign must be +1 or -1");
  }
  for (const auto& v : tight)
    if (v.size() != dim) throw DimensionError("tight constraint has the wrong length");

  // y = N z with the columns of N spanning the null space of the tight rows.
  const RatMatrix basis =
      tight.empty() ? RatMatrix::identity(dim) : nullspace(RatMatrix::from_rows(tight, dim));
  const std::size_t d = basis.cols();
  if (d == 0) {
    if (!strict.empty()) return std::nullopt;
    return RatVector(dim);
  }

  // Variables z+ (d), z- (d), eps. Rows: eps - sign*(a N)(z+ - z-) <= 0, eps <= 1.
  const std::size_t vars = 2 * d + 1;
  RatMatrix a(strict.size() + 1, vars);
  RatVector b(strict.size() + 1);
  for (std::size_t i = 0; i < strict.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational g;
      for (std::size_t r = 0; r < dim; ++r) g += strict[i].normal[r] * basis(r, j);
      if (strict[i].sign < 0) g = -g;
      a(i, j) = -g;
      a(i, d + j) = g;
    }
    a(i, vars - 1) = 1;
  }
  a(strict.size(), vars - 1) = 1;
  b[strict.size()] = 1;
  RatVector c(vars);
  c[vars - 1] = 1;

  const auto x = simplex_max(a, b, c);
  if (!x) throw std::logic_error("strict feasibility program is bounded by construction");
  if ((*x)[vars - 1].sign() <= 0) return std::nullopt;

  RatVector y(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t j = 0; j < d; ++j) y[r] += basis(r, j) * ((*x)[j] - (*x)[d + j]);
  for (const auto& s : strict)
    if (dot(s.normal, y).sign() != s.sign) throw std::logic_error("LP witness violates a strict constraint");
  for (const auto& v : tight)
    if (!dot(v, y).is_zero()) throw std::logic_error("LP witness violates a tight constraint");
  return y;
}

}  // namespace discarr
