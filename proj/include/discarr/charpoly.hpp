#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "discarr/discriminantal.hpp"
#include "discarr/matrix.hpp"

namespace discarr {

/// Integer polynomial; coeffs[d] is the coefficient of t^d.
struct CharPoly {
  std::vector<mpz_class> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  mpz_class eval(const mpz_class& t) const;
  /// "x^6-20x^5+145x^4-426x^3+300x^2"
  std::string str(char var = 'x') const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Build a polynomial from coefficients listed from t^0 upwards.
CharPoly make_poly(std::initializer_list<long> low_to_high);

struct WhitneyOptions {
  /// Worker threads; the subset tree is split by a fixed prefix so the result
  /// does not depend on scheduling.
  unsigned threads = 1;
  /// Once a subset already has full rank, account for all its supersets in
  /// closed form instead of visiting them. Exact; off by default.
  bool collapse_full_rank = false;
};

/// chi(t) = sum over subsets B of (-1)^|B| t^(dim - rank B) for the central
/// arrangement with the given normals (all in Q^dim, all nonzero, at most 63).
CharPoly whitney_char_poly(const std::vector<RatVector>& normals, const WhitneyOptions& opts = {});
CharPoly whitney_char_poly(const DiscArrangement& d, const WhitneyOptions& opts = {});

/// Same polynomial from the Mobius function of the lattice of flats.
CharPoly char_poly_via_flats(const std::vector<RatVector>& normals);

/// (-1)^n chi(-1): number of open cones of a central arrangement in R^n.
mpz_class count_cones(const CharPoly& chi, std::size_t n);

/// Region count through r(A) = r(A - H) + r(A restricted to H), memoized on
/// canonical forms of the intermediate arrangements.
mpz_class count_cones_deletion_restriction(const std::vector<RatVector>& normals);

}  // namespace discarr
