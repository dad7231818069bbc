#include <doctest.h>

#include "convert.hpp"
#include "discarr/conegeom.hpp"
#include "discarr/errors.hpp"
#include "discarr/fixtures.hpp"
#include "discarr/lp.hpp"

using namespace discarr;

namespace {

bool realized(const DiscArrangement& d, const SignVector& s, const RatVector& y) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (dot(d[i].normal, y).sign() != s.signs[i]) return false;
  return true;
}

// Strict feasibility in the plane by trying directions between boundary rays.
bool strict_feasible_2d(const std::vector<StrictConstraint>& cs) {
  if (cs.empty()) return true;
  std::vector<RatVector> rays;
  for (const auto& c : cs) {
    rays.push_back({-c.normal[1], c.normal[0]});
    rays.push_back({c.normal[1], -c.normal[0]});
    rays.push_back(c.normal);
    rays.push_back({-c.normal[0], -c.normal[1]});
  }
  std::vector<RatVector> candidates = rays;
  for (const auto& u : rays)
    for (const auto& v : rays) candidates.push_back({u[0] + v[0], u[1] + v[1]});
  for (const auto& y : candidates) {
    bool ok = true;
    for (const auto& c : cs) ok = ok && dot(c.normal, y).sign() == c.sign;
    if (ok) return true;
  }
  return false;
}

std::optional<RatVector> solve2(const RatMatrix& a, const RatVector& b, std::size_t i, std::size_t j) {
  const Rational den = a(i, 0) * a(j, 1) - a(i, 1) * a(j, 0);
  if (den.is_zero()) return std::nullopt;
  return RatVector{(b[i] * a(j, 1) - a(i, 1) * b[j]) / den, (a(i, 0) * b[j] - b[i] * a(j, 0)) / den};
}

// A triple of lines bounds a cell iff the barycenter of its vertices sees
// every other line on the same side as each vertex does.
std::vector<Subset> cells_by_barycenter(const Arrangement& h) {
  std::vector<Subset> out;
  for (const auto& s : k_subsets(h.n(), 3)) {
    const auto v0 = *solve2(h.coeffs(), h.constants(), s[1] - 1, s[2] - 1);
    const auto v1 = *solve2(h.coeffs(), h.constants(), s[0] - 1, s[2] - 1);
    const auto v2 = *solve2(h.coeffs(), h.constants(), s[0] - 1, s[1] - 1);
    const RatVector g{(v0[0] + v1[0] + v2[0]) / Rational(3), (v0[1] + v1[1] + v2[1]) / Rational(3)};
    bool ok = true;
    for (std::size_t j = 0; j < h.n(); ++j) {
      if (std::binary_search(s.begin(), s.end(), j + 1)) continue;
      auto side = [&](const RatVector& p) { return (dot(h.coeffs().row(j), p) - h.constants()[j]).sign(); };
      const int sg = side(g);
      ok = ok && sg != 0 && side(v0) == sg && side(v1) == sg && side(v2) == sg;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

Arrangement random_generic_lines(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    const RatMatrix a = random_matrix(rng, n, 2, 9);
    RatVector b;
    std::uniform_int_distribution<int> d(-20, 20);
    for (std::size_t i = 0; i < n; ++i) b.push_back(d(rng));
    bool nonzero = true;
    for (std::size_t i = 0; i < n; ++i) nonzero = nonzero && !(a(i, 0).is_zero() && a(i, 1).is_zero());
    if (!nonzero) continue;
    Arrangement h(a, b);
    if (is_generic(h)) return h;
  }
}

}  // namespace

TEST_CASE("sign vectors") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  const DiscArrangement d = build_disc(h.coeffs());
  const SignVector s = sign_vector(d, h.constants());
  CHECK(s.size() == 20);
  RatVector neg;
  for (const auto& x : h.constants()) neg.push_back(-x);
  CHECK(sign_vector(d, neg) == -s);
  const RatMatrix three{{1, 0}, {0, 1}, {1, 1}};
  try {
    sign_vector(build_disc(three), {0, 0, 0});
    FAIL("expected an on-hyperplane error");
  } catch (const OnHyperplaneError& e) {
    CHECK(e.which() == "{1,2,3}");
  }
}

TEST_CASE("strict feasibility LP") {
  CHECK(lp_strict_feasible({{{1}, 1}}, {}, 1));
  CHECK_FALSE(lp_strict_feasible({{{1}, 1}, {{1}, -1}}, {}, 1));
  CHECK(lp_strict_feasible({}, {{1, 1}}, 2));
  CHECK_FALSE(lp_strict_feasible({{{1, 0}, 1}}, {{1, 0}}, 2));
  // On y1 + y2 + y3 = 0 the two forms coincide, so opposite signs are infeasible.
  CHECK_FALSE(lp_strict_feasible({{{1, 2, 0}, 1}, {{0, 1, -1}, -1}}, {{1, 1, 1}}, 3));
  const auto w = lp_strict_witness({{{1, 2, 0}, 1}, {{0, 1, -1}, 1}}, {{1, 1, 1}}, 3);
  REQUIRE(w);
  CHECK(dot(RatVector{1, 1, 1}, *w).is_zero());
  CHECK(dot(RatVector{1, 2, 0}, *w).sign() == 1);
}

TEST_CASE("LP agrees with a planar direction search") {
  std::mt19937_64 rng(71);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<StrictConstraint> cs;
    const std::size_t count = 1 + trial % 5;
    const RatMatrix m = random_matrix(rng, count, 2, 4);
    for (std::size_t i = 0; i < count; ++i) {
      if (m(i, 0).is_zero() && m(i, 1).is_zero()) continue;
      cs.push_back({m.row_vector(i), rng() % 2 ? 1 : -1});
    }
    const bool lp = lp_strict_feasible(cs, {}, 2);
    CHECK(lp == strict_feasible_2d(cs));

    feasible += lp;
  }
  CHECK(feasible > 0);
  CHECK(feasible < 300);
}

TEST_CASE("realized sign vectors are feasible") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  const DiscArrangement d = build_disc(h.coeffs());
  const SignVector s = sign_vector(d, h.constants());
  std::vector<StrictConstraint> cs;
  for (std::size_t i = 0; i < d.size(); ++i) cs.push_back({d[i].normal, s.signs[i]});
  const auto w = lp_strict_witness(cs, {}, 6);
  REQUIRE(w);
  CHECK(realized(d, s, *w));
}

TEST_CASE("facets of the prop-6-1 cone") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  const DiscArrangement d = build_disc(h.coeffs());
  const SignVector s = sign_vector(d, h.constants());
  CHECK_FALSE(is_facet(d, s, {1, 2, 5}));
  CHECK_THROWS_AS(is_facet(d, s, {1, 2, 7}), PreconditionError);
  const auto recs = facet_records(d, s);
  std::size_t facets = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    // A row is a facet exactly when crossing it alone reaches another cone.
    SignVector flipped = s;
    flipped.signs[i] = -flipped.signs[i];
    std::vector<StrictConstraint> cs;
    for (std::size_t j = 0; j < d.size(); ++j) cs.push_back({d[j].normal, flipped.signs[j]});
    CHECK(recs[i].facet == lp_strict_feasible(cs, {}, 6));
    if (!recs[i].facet) continue;
    ++facets;
    const RatVector& w = *recs[i].witness;
    CHECK(dot(d[i].normal, w).is_zero());
    // Stepping off the witness along the normal lands in both cones.
    Rational step(1);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == i) continue;
      const Rational slack = dot(d[j].normal, w).abs() / (dot(d[j].normal, d[i].normal).abs() + Rational(1));
      if (slack < step) step = slack;
    }
    step = step / Rational(2);
    RatVector plus = w, minus = w;
    for (std::size_t c = 0; c < 6; ++c) {
      plus[c] += step * d[i].normal[c];
      minus[c] -= step * d[i].normal[c];
    }
    CHECK((realized(d, s, plus) != realized(d, s, minus)));
    CHECK((realized(d, s, plus) || realized(d, flipped, plus)));
  }
  CHECK(facets >= 4);
  unsigned threads = 3;
  const auto again = facet_records(d, s, threads);
  for (std::size_t i = 0; i < recs.size(); ++i) CHECK(again[i].facet == recs[i].facet);
}

TEST_CASE("facet status is invariant under positive scaling") {
  const Arrangement h = load_fixture("example-5-1").arrangement;
  const DiscArrangement d = build_disc(h.coeffs());
  const SignVector s = sign_vector(d, h.constants());
  std::vector<DiscRow> rows = d.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& x : rows[i].normal) x = x * Rational(static_cast<long>(i) + 1, 2);
  const DiscArrangement scaled(d.n(), d.m(), rows);
  RatVector b3;
  for (const auto& x : h.constants()) b3.push_back(x * Rational(3));
  const SignVector s3 = sign_vector(scaled, b3);
  CHECK(s3 == s);
  const auto a = facet_records(d, s), b = facet_records(scaled, s3);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].facet == b[i].facet);
}

TEST_CASE("single discriminantal hyperplane") {
  const RatMatrix three{{1, 0}, {0, 1}, {1, 1}};
  const DiscArrangement d = build_disc(three);
  CHECK(is_facet(d, SignVector{{1}}, {1, 2, 3}));
  CHECK(is_facet(d, SignVector{{-1}}, {1, 2, 3}));
  const Arrangement h(three, {0, 0, 1});
  const auto cells = simplex_cells(h);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].hyperplanes == Subset{1, 2, 3});
  const auto rep = correspondence_report(h);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].cell_present);
  CHECK(rep[0].facet);
}

TEST_CASE("simplex cells of prop-6-1") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  const auto cells = simplex_cells(h);
  const auto it = std::find_if(cells.begin(), cells.end(), [](const SimplexCell& c) { return c.hyperplanes == Subset{1, 2, 5}; });
  REQUIRE(it != cells.end());
  CHECK(it->vertices[0] == RatVector{1, -3});               // C = L2 n L5
  CHECK(it->vertices[1] == RatVector{Rational(2, 5), 0});   // A = L1 n L5
  CHECK(it->vertices[2] == RatVector{7, 0});                // B = L1 n L2
  const auto rep = correspondence_report(h);
  bool found = false;
  for (const auto& r : rep) found = found || (r.subset == Subset{1, 2, 5} && r.cell_present && !r.facet);
  CHECK(found);
  CHECK_THROWS_AS(simplex_cells(load_fixture("triangle-altitudes").arrangement), PreconditionError);
}

TEST_CASE("simplex cells agree with the barycenter test") {
  std::vector<Arrangement> cases{load_fixture("example-5-1").arrangement, load_fixture("example-5-2").arrangement,
                                 load_fixture("prop-6-1").arrangement};
  std::mt19937_64 rng(72);
  for (int i = 0; i < 20; ++i) cases.push_back(random_generic_lines(rng, 3 + i % 5));
  for (const auto& h : cases) {
    std::vector<Subset> got;
    for (const auto& c : simplex_cells(h)) got.push_back(c.hyperplanes);
    CHECK(got == cells_by_barycenter(h));
    if (h.n() == 4) CHECK(got.size() <= 4);
  }
  CHECK(simplex_cells(load_fixture("example-5-1").arrangement).size() == 6);
}

TEST_CASE("SVG drawing") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  const auto cells = simplex_cells(h);
  const std::string svg = render_svg(h, cells);
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t polygons = 0, lines = 0;
  for (std::size_t p = 0; (p = svg.find("<polygon", p)) != std::string::npos; ++p) ++polygons;
  for (std::size_t p = 0; (p = svg.find("<line", p)) != std::string::npos; ++p) ++lines;
  CHECK(polygons == cells.size());
  CHECK(lines == 6);
  CHECK_THROWS_AS(render_svg(Arrangement(RatMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {0, 0, 0, 1}), {}),
                  PreconditionError);
}
