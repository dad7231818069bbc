#include "discarr/discriminantal.hpp"

#include <algorithm>

#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

std::optional<std::size_t> DiscArrangement::index_of(const Subset& s) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), s,
                             [](const DiscRow& r, const Subset& key) { return r.subset < key; });
  if (it == rows_.end() || it->subset != s) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

RatMatrix DiscArrangement::matrix() const {
  RatMatrix out(rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = rows_[i].normal[j];
  return out;
}

std::vector<RatVector> DiscArrangement::normals() const {
  std::vector<RatVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.normal);
  return out;
}

RatVector disc_row(const RatMatrix& a, const Subset& s) {
  const std::size_t n = a.rows(), m = a.cols();
  if (s.size() != m + 1) throw PreconditionError("discriminantal subset must have m + 1 elements");
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] < 1 || s[t] > n || (t && s[t] <= s[t - 1])) {
      throw PreconditionError("bad discriminantal subset " + format_subset(s));
    }
  }
  RatVector v(n);
  RatMatrix sub(m, m);
  for (std::size_t t = 0; t <= m; ++t) {
    std::size_t r = 0;
    for (std::size_t u = 0; u <= m; ++u) {
      if (u == t) continue;
      for (std::size_t j = 0; j < m; ++j) sub(r, j) = a(s[u] - 1, j);
      ++r;
    }
    // 1-based position t+1 in an (m+1)-row determinant, last column m+1.
    const bool negative = ((m + 1) + (t + 1)) % 2 == 1;
    Rational d = det(sub);
    v[s[t] - 1] = negative ? -d : d;
  }
  return v;
}

DiscArrangement build_disc(const RatMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  if (m < 1 || n <= m) throw PreconditionError("discriminantal arrangement needs n > m >= 1");
  std::vector<DiscRow> rows;
  for (auto& s : k_subsets(n, m + 1)) {
    RatVector v = disc_row(a, s);
    rows.push_back({std::move(s), std::move(v)});
  }
  return DiscArrangement(n, m, std::move(rows));
}

RatVector canonicalize_normal(const RatVector& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    ints.push_back(x.value().get_num() * (l / x.value().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) throw PreconditionError("cannot canonicalize the zero vector");
  int lead = 0;
  for (const auto& x : ints)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  RatVector out;
  for (auto& x : ints) out.emplace_back(mpz_class(x / g));
  return out;
}

}  // namespace discarr
