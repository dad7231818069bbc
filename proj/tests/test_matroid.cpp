#include <doctest.h>

#include "convert.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/errors.hpp"
#include "discarr/fixtures.hpp"
#include "discarr/linalg.hpp"
#include "discarr/matroid.hpp"

using namespace discarr;

namespace {

SubsetFamily fam(std::size_t n, std::size_t k, std::vector<Subset> members) { return {n, k, std::move(members)}; }

std::vector<oracle::Set> as_sets(const SubsetFamily& f) {
  std::vector<oracle::Set> out;
  for (const auto& s : f.members) out.emplace_back(s.begin(), s.end());
  return out;
}

std::size_t disc_rank(const DiscArrangement& d, const SubsetFamily& f) {
  std::vector<std::size_t> idx;
  for (const auto& s : f.members) idx.push_back(*d.index_of(s));
  return rank(d.matrix().select_rows(idx));
}

}  // namespace

TEST_CASE("uniform circuits") {
  CHECK(format_family(uniform_circuits(3, 2).members) == "{{1,2,3}}");
  CHECK(format_family(uniform_circuits(4, 2).members) == "{{1,2,3},{1,2,4},{1,3,4},{2,3,4}}");
  CHECK(uniform_circuits(6, 2).size() == 20);
  CHECK_THROWS_AS(uniform_circuits(2, 2), PreconditionError);
}

TEST_CASE("Dilworth independence examples") {
  CHECK_FALSE(dilworth_independent(fam(4, 2, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}})));
  CHECK(dilworth_independent(fam(9, 2, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})));
  CHECK(dilworth_independent(fam(6, 2, {{2, 4, 6}})));
  CHECK(dilworth_independent(fam(6, 2, {})));
  CHECK_THROWS_AS(dilworth_independent(fam(6, 2, {{1, 2}})), PreconditionError);
}

TEST_CASE("Dilworth independence matches the subcollection oracle") {
  std::mt19937_64 rng(41);
  for (std::size_t k : {2, 3}) {
    for (std::size_t n = k + 2; n <= 7; ++n) {
      const auto circuits = uniform_circuits(n, k);
      for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(6, circuits.size()));
        std::vector<Subset> pool = circuits.members;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(size(rng));
        const SubsetFamily f = fam(n, k, pool);
        CHECK(dilworth_independent(f) == oracle::dilworth_brute(as_sets(f), k));
      }
    }
  }
}

TEST_CASE("Dilworth matroid axioms at n = 5 and n = 6") {
  for (std::size_t n : {5, 6}) {
    const auto circuits = uniform_circuits(n, 2);
    const auto indep = enumerate_dilworth_independent(n, 2);
    std::set<std::vector<std::size_t>> all(indep.begin(), indep.end());
    CHECK(all.count({}) == 1);
    std::vector<std::vector<std::vector<std::size_t>>> by_size(n);
    for (const auto& s : indep) {
      REQUIRE(s.size() <= n - 2);
      by_size[s.size()].push_back(s);
      // downward closure: removing any member stays independent
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        auto t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(all.count(t) == 1);
      }
    }
    // exchange: |I| + 1 = |J| gives some x in J \ I with I + x independent
    std::size_t violations = 0;
    for (std::size_t r = 0; r + 1 < by_size.size(); ++r) {
      for (const auto& i : by_size[r]) {
        for (const auto& j : by_size[r + 1]) {
          bool found = false;
          for (auto x : j) {
            if (std::binary_search(i.begin(), i.end(), x)) continue;
            auto t = i;
            t.insert(std::upper_bound(t.begin(), t.end(), x), x);
            if (all.count(t)) {
              found = true;
              break;
            }
          }
          violations += !found;
        }
      }
    }
    CHECK(violations == 0);
    // every independent collection found by enumeration passes the direct test
    for (const auto& s : indep) {
      SubsetFamily f = fam(n, 2, {});
      for (auto i : s) f.members.push_back(circuits.members[i]);
      CHECK(dilworth_independent(f));
    }
  }
}

TEST_CASE("Dilworth rank") {
  CHECK(dilworth_rank(uniform_circuits(4, 2)) == 2);
  CHECK(dilworth_rank(fam(6, 2, {})) == 0);
  CHECK(dilworth_rank(uniform_circuits(6, 2)) == 4);
}

TEST_CASE("SDR search") {
  const auto sdr = find_sdr({{1, 2}, {2, 3}}, {1, 2, 3});
  REQUIRE(sdr);
  CHECK((*sdr)[0] != (*sdr)[1]);
  CHECK_FALSE(find_sdr({{1}, {1}}, {1, 2}));
  CHECK_FALSE(find_sdr({{1, 2}, {3}}, {1, 2}));
}

TEST_CASE("Hall's condition holds for every Dilworth basis of U(2,6) against every 4-set") {
  const auto circuits = uniform_circuits(6, 2);
  std::size_t bases = 0;
  for (const auto& s : enumerate_dilworth_independent(6, 2)) {
    if (s.size() != 4) continue;
    ++bases;
    std::vector<Subset> sets;
    for (auto i : s) sets.push_back(circuits.members[i]);
    for (const auto& t : k_subsets(6, 4)) {
      const auto sdr = find_sdr(sets, t);
      REQUIRE(sdr);
      std::set<std::size_t> used;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        CHECK(std::binary_search(sets[i].begin(), sets[i].end(), (*sdr)[i]));
        CHECK(std::binary_search(t.begin(), t.end(), (*sdr)[i]));
        used.insert((*sdr)[i]);
      }
      CHECK(used.size() == sets.size());
    }
  }
  CHECK(bases > 0);
}

TEST_CASE("example-5-1 is not very generic") {
  const RatMatrix a = load_fixture("example-5-1").arrangement.coeffs();
  const auto cert = is_very_generic(a);
  CHECK_FALSE(cert.verdict);
  REQUIRE(cert.witness);
  CHECK(dilworth_independent(*cert.witness));
  CHECK(disc_rank(build_disc(a), *cert.witness) < cert.witness->size());
  CHECK(cert.witness_rank == disc_rank(build_disc(a), *cert.witness));
}

TEST_CASE("very generic matrices realize the Dilworth matroid") {
  const RatMatrix a = load_fixture("prop-6-1").arrangement.coeffs();
  const auto cert = is_very_generic(a);
  REQUIRE(cert.verdict);
  CHECK_FALSE(cert.witness);
  const DiscArrangement d = build_disc(a);
  const auto circuits = uniform_circuits(6, 2);
  // Every family of at most 5 triples: independence in both senses agrees.
  std::size_t checked = 0;
  for (std::size_t r = 0; r <= 5; ++r) {
    for (const auto& pos : k_subsets(20, r)) {
      SubsetFamily f = fam(6, 2, {});
      for (auto p : pos) f.members.push_back(circuits.members[p - 1]);
      CHECK(dilworth_independent(f) == (disc_rank(d, f) == f.size()));
      ++checked;
    }
  }
  CHECK(checked == 21700);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    SubsetFamily f = fam(6, 2, {});
    for (const auto& s : circuits.members)
      if (rng() % 3 == 0) f.members.push_back(s);
    CHECK(dilworth_rank(f) == disc_rank(d, f));
  }
  // The verdict does not change when rows are rescaled.
  RatMatrix scaled = a;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < 2; ++j) scaled(i, j) = scaled(i, j) * Rational(static_cast<long>(i) + 2, 3);
  CHECK(is_very_generic(scaled).verdict);
}

TEST_CASE("very-genericity requires generic normals") {
  CHECK_THROWS_AS(is_very_generic(RatMatrix{{1, 0}, {2, 0}, {0, 1}, {1, 1}}), PreconditionError);
}

TEST_CASE("rank oracle memoizes") {
  const DiscArrangement d = build_disc(load_fixture("example-5-1").arrangement.coeffs());
  DiscRankOracle o(d);
  const std::vector<std::size_t> rows{0, 1, 2};
  CHECK(o.rank(rows) == rank(d.matrix().select_rows(rows)));
  CHECK(o.rank(rows) == 3);
  CHECK(o.cache_size() == 1);
  CHECK(o.rank_of_subsets({{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}) == 3);
}
