#include <doctest.h>

#include "convert.hpp"
#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"
#include "discarr/rational.hpp"

using namespace discarr;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK_THROWS_AS(Rational::parse("3/-6"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 3) < Rational(1, 5));
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto m = oracle::random_int_matrix(rng, n, n, 6);
    if (trial % 5 == 0) m[n - 1] = m[0];  // force some singular cases
    for (auto& row : m) row[0] /= 3;
    CHECK(det(from_oracle(m)).value() == oracle::det_leibniz(m));
  }
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("rank agrees with the minor oracle and with the transpose") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    auto m = oracle::random_int_matrix(rng, r, c, 2);
    if (r > 2 && trial % 2) {
      for (std::size_t j = 0; j < c; ++j) m[2][j] = m[0][j] * 2 - m[1][j];
    }
    const RatMatrix a = from_oracle(m);
    CHECK(rank(a) == oracle::rank_by_minors(m));
    CHECK(rank(a) == rank(a.transpose()));
  }
  CHECK(rank(RatMatrix(0, 3)) == 0);
}

TEST_CASE("minor uses 1-based indices and validates them") {
  const RatMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const std::vector<std::size_t> r{1, 3}, c{2, 3};
  CHECK(minor(a, r, c) == Rational(2 * 10 - 3 * 8));
  const std::vector<std::size_t> bad{1, 4};
  CHECK_THROWS_AS(minor(a, bad, c), DimensionError);
  const std::vector<std::size_t> one{1};
  CHECK_THROWS_AS(minor(a, one, c), DimensionError);
}

TEST_CASE("inverse, solve and null space") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const RatMatrix a = random_matrix(rng, n, n, 5);
    if (det(a).is_zero()) {
      CHECK_THROWS_AS(inverse(a), SingularMatrixError);
      continue;
    }
    CHECK(a * inverse(a) == RatMatrix::identity(n));
    RatVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(static_cast<long>(i) - 1);
    const auto x = solve(a, rhs);
    REQUIRE(x);
    for (std::size_t i = 0; i < n; ++i) CHECK(dot(a.row(i), *x) == rhs[i]);
  }
  const RatMatrix s{{1, 2, 3}, {2, 4, 6}};
  const RatMatrix ns = nullspace(s);
  CHECK(ns.cols() == 2);
  CHECK((s * ns).is_zero());
  const RatMatrix inconsistent{{1, 1}, {1, 1}};
  CHECK_FALSE(solve(inconsistent, RatVector{1, 2}));
}

TEST_CASE("rref is canonical for the row space") {
  const RatMatrix a{{2, 4, 0}, {1, 2, 1}};
  const RatMatrix b{{3, 6, 1}, {1, 2, -1}};
  CHECK(rref(a).rref == rref(b).rref);
  CHECK(rref(a).pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("Cayley transforms are special orthogonal with equal complementary minors") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 5;
    RatMatrix s(n, n);
    std::uniform_int_distribution<int> d(-4, 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = Rational(d(rng), 1 + (trial % 3));
        s(j, i) = -s(i, j);
      }
    const RatMatrix q = cayley_orthogonal(s);
    CHECK(q * q.transpose() == RatMatrix::identity(n));
    CHECK(det(q) == Rational(1));
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<std::size_t> in, out;
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? in : out).push_back(i + 1);
      CHECK(minor(q, in, in) == minor(q, out, out));
    }
  }
  CHECK_THROWS_AS(cayley_orthogonal(RatMatrix{{1, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("incremental basis tracks rank") {
  std::mt19937_64 rng(15);
  const RatMatrix a = random_matrix(rng, 7, 4, 1);
  IncrementalBasis b(4);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool grew = b.add(a.row(i));
    std::vector<std::size_t> idx(i + 1);
    std::iota(idx.begin(), idx.end(), 0);
    CHECK(b.rank() == rank(a.select_rows(idx)));
    CHECK(b.contains(a.row(i)));
    if (grew) {
      b.pop();
      CHECK(b.add(a.row(i)));
    }
  }
}
