#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discarr/arrangement.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/subsets.hpp"

namespace discarr {

/// Signs (+1 or -1) of a point against every row of a discriminantal
/// arrangement, in row order.
struct SignVector {
  std::vector<int> signs;

  std::size_t size() const { return signs.size(); }
  SignVector operator-() const;
  /// "+-++..." form.
  std::string str() const;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Throws OnHyperplaneError naming the first row S with M_S . b = 0.
SignVector sign_vector(const DiscArrangement& d, const RatVector& b);

/// True iff row S meets the closure of the cone of sigma in a relatively open
/// piece of dimension n - 1. Throws PreconditionError if S is not a row.
bool is_facet(const DiscArrangement& d, const SignVector& sigma, const Subset& s);

/// Facet status of one row, with the LP witness (a point on M_S strictly
/// inside every other sign condition) when it is a facet.
struct FacetRecord {
  Subset subset;
  bool facet = false;
  std::optional<RatVector> witness;
};

/// One record per row in row order. Rows are independent LPs and are split
/// across `threads` workers; the output does not depend on the thread count.
std::vector<FacetRecord> facet_records(const DiscArrangement& d, const SignVector& sigma,
                                       unsigned threads = 1);

/// A bounded region cut out by m + 1 hyperplanes of a generic arrangement.
struct SimplexCell {
  Subset hyperplanes;             // size m + 1
  std::vector<RatVector> vertices;  // vertex t omits hyperplanes[t]
};

/// All (m+1)-subsets whose vertices lie strictly on one side of every other
/// hyperplane. Throws PreconditionError unless is_generic(h).
std::vector<SimplexCell> simplex_cells(const Arrangement& h);

struct CorrespondenceRecord {
  Subset subset;
  bool cell_present = false;
  bool facet = false;
};

/// Pairs every (m+1)-subset's simplex-cell status with the facet status of
/// its row for the cone containing h's constants.
std::vector<CorrespondenceRecord> correspondence_report(const Arrangement& h, unsigned threads = 1);

/// Line drawing of an arrangement in the plane (m = 2), simplex cells shaded.
/// Throws PreconditionError for m != 2.
std::string render_svg(const Arrangement& h, const std::vector<SimplexCell>& cells);

}  // namespace discarr
