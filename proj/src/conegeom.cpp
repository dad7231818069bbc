#include "discarr/conegeom.hpp"

#include <atomic>
#include <thread>

#include "discarr/errors.hpp"
#include "discarr/lp.hpp"

namespace discarr {

SignVector SignVector::operator-() const {
  SignVector out = *this;
  for (auto& s : out.signs) s = -s;
  return out;
}

std::string SignVector::str() const {
  std::string out;
  for (auto s : signs) out += s > 0 ? '+' : '-';
  return out;
}

SignVector sign_vector(const DiscArrangement& d, const RatVector& b) {
  if (b.size() != d.n()) throw DimensionError("constants vector has the wrong length");
  SignVector out;
  for (const auto& row : d.rows()) {
    const int s = dot(row.normal, b).sign();
    if (s == 0) {
      const auto name = format_subset(row.subset);
      throw OnHyperplaneError(name, "b lies on the discriminantal hyperplane M_" + name);
    }
    out.signs.push_back(s);
  }
  return out;
}

namespace {

std::optional<RatVector> facet_witness(const DiscArrangement& d, const SignVector& sigma, std::size_t row) {
  std::vector<StrictConstraint> strict;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != row) strict.push_back({d[i].normal, sigma.signs[i]});
  return lp_strict_witness(strict, {d[row].normal}, d.n());
}

void check_sigma(const DiscArrangement& d, const SignVector& sigma) {
  if (sigma.size() != d.size()) throw DimensionError("sign vector length differs from the row count");
}

}  // namespace

bool is_facet(const DiscArrangement& d, const SignVector& sigma, const Subset& s) {
  check_sigma(d, sigma);
  const auto row = d.index_of(s);
  if (!row) throw PreconditionError("no discriminantal row for " + format_subset(s));
  return facet_witness(d, sigma, *row).has_value();
}

std::vector<FacetRecord> facet_records(const DiscArrangement& d, const SignVector& sigma, unsigned threads) {
  check_sigma(d, sigma);
  std::vector<FacetRecord> out(d.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < d.size();) {
      out[i].subset = d[i].subset;
      out[i].witness = facet_witness(d, sigma, i);
      out[i].facet = out[i].witness.has_value();
    }
  };
  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

std::vector<SimplexCell> simplex_cells(const Arrangement& h) {
  if (!is_generic(h)) throw PreconditionError("simplex cells need a generic arrangement");
  const std::size_t n = h.n(), m = h.m();
  std::vector<SimplexCell> out;
  for (const auto& s : k_subsets(n, m + 1)) {
    SimplexCell cell{s, {}};
    for (std::size_t t = 0; t <= m; ++t) {
      Subset rest;
      for (std::size_t u = 0; u <= m; ++u)
        if (u != t) rest.push_back(s[u]);
      cell.vertices.push_back(*intersection_point(h, rest));
    }
    bool ok = true;
    for (std::size_t j = 1; j <= n && ok; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      int side = 0;
      for (const auto& v : cell.vertices) {
        const int sg = (dot(h.coeffs().row(j - 1), v) - h.constants()[j - 1]).sign();
        if (sg == 0 || (side != 0 && sg != side)) {
          ok = false;
          break;
        }
        side = sg;
      }
    }
    if (ok) out.push_back(std::move(cell));
  }
  return out;
}

std::vector<CorrespondenceRecord> correspondence_report(const Arrangement& h, unsigned threads) {
  const auto cells = simplex_cells(h);
  const DiscArrangement d = build_disc(h.coeffs());
  const auto facets = facet_records(d, sign_vector(d, h.constants()), threads);
  std::vector<CorrespondenceRecord> out;
  std::size_t c = 0;
  for (const auto& f : facets) {
    const bool present = c < cells.size() && cells[c].hyperplanes == f.subset;
    if (present) ++c;
    out.push_back({f.subset, present, f.facet});
  }
  return out;
}

}  // namespace discarr
