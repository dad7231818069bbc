#include <doctest.h>

#include "convert.hpp"
#include "discarr/arrangement.hpp"
#include "discarr/errors.hpp"
#include "discarr/fixtures.hpp"
#include "discarr/io.hpp"

using namespace discarr;

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(Arrangement(RatMatrix{{1, 0}, {0, 0}}, {1, 2}), PreconditionError);
  CHECK_THROWS_AS(Arrangement(RatMatrix{{1, 0}}, {1, 2}), PreconditionError);
  CHECK_THROWS_AS(Arrangement(RatMatrix(0, 2), {}), PreconditionError);
}

TEST_CASE("genericity") {
  const Arrangement tri(RatMatrix{{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1});
  CHECK(is_generic(tri));
  CHECK_FALSE(is_generic(tri.with_constants({0, 0, 0})));  // concurrent at the origin
  CHECK_FALSE(is_generic(Arrangement(RatMatrix{{1, 0}, {2, 0}, {0, 1}}, {0, 1, 0})));  // parallel pair
  CHECK_FALSE(normals_generic(RatMatrix{{1, 0}, {2, 0}, {0, 1}}));
  for (const auto& name : {"example-5-1", "example-5-2", "prop-6-1"}) CHECK(is_generic(load_fixture(name).arrangement));
  CHECK_FALSE(is_generic(load_fixture("triangle-altitudes").arrangement));
}

TEST_CASE("concurrency report of the triangle with its altitudes") {
  const Arrangement h = load_fixture("triangle-altitudes").arrangement;
  const auto rep = concurrency_report(h);
  CHECK(format_family(rep.sets.members) == "{{1,2,3},{1,5,6},{2,4,6},{3,4,5}}");
  REQUIRE(rep.points.size() == 4);
  // The orthocenter is where lines 2, 4 and 6 meet.
  CHECK(rep.points[2] == RatVector{1, 1});
  for (std::size_t i = 0; i < rep.sets.members.size(); ++i)
    for (auto line : rep.sets.members[i])
      CHECK(dot(h.coeffs().row(line - 1), rep.points[i]) == h.constants()[line - 1]);
  CHECK(concurrency_report(load_fixture("prop-6-1").arrangement).sets.empty());
}

TEST_CASE("intersection points") {
  const Arrangement h = load_fixture("prop-6-1").arrangement;
  CHECK(*intersection_point(h, {2, 5}) == RatVector{1, -3});
  CHECK(*intersection_point(h, {1, 5}) == RatVector{Rational(2, 5), 0});
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_matrix(rng, 3 + trial % 4, 1 + trial % 3, 9);
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, 0) = a(i, 0) + Rational(1, 7) * Rational(static_cast<long>(i) + 1);
    RatVector b;
    for (std::size_t i = 0; i < a.rows(); ++i) b.push_back(Rational(static_cast<long>(i * i) - 3, 4));
    const Arrangement h(a, b);
    const std::string text = io::serialize_arrangement(h);
    CHECK(io::parse_arrangement(text) == h);
    CHECK(io::serialize_arrangement(io::parse_arrangement(text)) == text);
  }
}

TEST_CASE("JSON errors carry a location") {
  auto where = [](const std::string& text) {
    try {
      io::parse_arrangement(text);
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where(R"({"m":2,"hyperplanes":[]})") == "/hyperplanes");
  CHECK(where(R"({"m":2,"hyperplanes":[{"coeffs":["1"],"constant":"0"}]})") == "/hyperplanes/0/coeffs");
  CHECK(where(R"({"m":2,"hyperplanes":[{"coeffs":["1","x"],"constant":"0"}]})") == "/hyperplanes/0/coeffs/1");
  CHECK(where(R"({"m":2,"hyperplanes":[{"coeffs":["0","0"],"constant":"0"}]})") == "/hyperplanes/0/coeffs");
  CHECK_THROWS_AS(io::parse_arrangement("not json"), ParseError);
}

TEST_CASE("fixture files match the embedded fixtures") {
  for (const auto& name : fixture_names()) {
    const Fixture f = load_fixture(name);
    const std::string path = std::string(DISCARR_SOURCE_DIR) + "/fixtures/" + name + ".json";
    CHECK(io::parse_arrangement(io::read_file(path)) == f.arrangement);
    CHECK(io::read_file(path) == fixture_document(f));
  }
  CHECK_THROWS_AS(load_fixture("nope"), std::out_of_range);
}

TEST_CASE("family parsing") {
  const auto f = io::parse_family("[[3,1,2],[1,2,4]]", 6, 2);
  CHECK(format_family(f.canonical().members) == "{{1,2,3},{1,2,4}}");
  const auto g = io::parse_family(R"({"n":5,"k":2,"family":[[1,2,3]]})");
  CHECK(g.n == 5);
  CHECK(g.k == 2);
}
