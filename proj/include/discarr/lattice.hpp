#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "discarr/charpoly.hpp"
#include "discarr/flats.hpp"
#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

namespace discarr {

// A family in P(n,k): members of size >= k+1 with
//   |union of I| > k + sum over I of (|S| - k)   for every |I| >= 2.
using PFamily = SubsetFamily;
// A concurrency-closed collection of (k+1)-subsets, members in dictionary order.
using ClosedCollection = SubsetFamily;

/// Finite poset given by its order relation; elements are 0..size-1 and
/// element 0 is the bottom.
struct Poset {
  std::vector<std::vector<char>> leq;  // leq[a][b] iff a <= b
  std::vector<std::size_t> rank;
  std::vector<long long> mobius_bottom;  // mu(0, x)
  std::optional<std::vector<std::vector<long long>>> mobius;  // full mu(x, y), on request

  std::size_t size() const { return leq.size(); }
  /// Fills `mobius` with mu(x, y) for all pairs (0 when x is not <= y).
  void compute_full_mobius();
  /// sum over x of mu(0, x) t^(n - rank x)
  CharPoly char_poly(std::size_t n) const;
};

/// max(0, |S| - k)
std::size_t nu(const Subset& s, std::size_t k);
/// nu(union) - sum of nu(members)
long long delta(const SubsetFamily& f, std::size_t k);

bool in_P(const SubsetFamily& f, std::size_t n, std::size_t k);
bool in_P(const SubsetFamily& f);
/// Every member of f lies inside some member of g.
bool p_order(const SubsetFamily& f, const SubsetFamily& g);

struct PPoset {
  std::size_t n = 0, k = 0;
  std::vector<PFamily> elements;  // canonical families; [0] is the empty family
  Poset poset;
};

/// All of P(n,k) plus the empty family as bottom, ordered by p_order, with
/// rank = sum of nu and mu(0, x). Refuses (PreconditionError) outside
/// n <= 7 with k = 2, or n - k <= 4.
PPoset enumerate_P(std::size_t n, std::size_t k);

/// One pass: every (k+1)-subset of {1..n} on which the Dilworth rank of f
/// does not grow.
ClosedCollection closure_once(const SubsetFamily& f);
/// Iterates closure_once to its fixed point; `passes` receives the number of
/// passes that changed something.
ClosedCollection closure(const SubsetFamily& f, std::size_t* passes = nullptr);
bool is_concurrency_closed(const SubsetFamily& d);

/// sigma: the maximal sets all of whose (k+1)-subsets lie in d.
/// Throws PreconditionError unless d is concurrency closed.
PFamily concurrency_sets(const ClosedCollection& d);
/// From each concurrency set j_1 < ... < j_m take {j_1..j_k, j_l}, l > k.
SubsetFamily base_collection(const ClosedCollection& d);
/// psi: every (k+1)-subset contained in some member. Throws unless f is in P(n,k).
ClosedCollection psi(const PFamily& f);

/// C(n,k): closures of all D-independent collections, in canonical order.
std::vector<ClosedCollection> enumerate_closed(std::size_t n, std::size_t k);

/// L(n,m): row spans of Disc(A), one element per flat of its row matroid.
struct FlatLattice {
  std::size_t n = 0, m = 0;
  std::vector<Subset> row_subsets;  // Disc row subsets, in dictionary order
  std::vector<Flat> flats;          // row sets; rank = dimension of the span
  std::vector<RatMatrix> spans;     // reduced row echelon form of each span
  Poset poset;

  /// Index of the flat spanned by the given Disc rows (by subset).
  std::size_t span_of(const std::vector<Subset>& rows) const;

 private:
  friend FlatLattice flats_lattice(const RatMatrix& a);
  std::vector<RatVector> normals_;
  std::map<RowSet, std::size_t> index_;
};

FlatLattice flats_lattice(const RatMatrix& a);

struct IsoReport {
  std::size_t p_size = 0;
  std::size_t l_size = 0;
  bool bijective = false;
  bool order_preserving = false;  // F <= G  =>  phi(F) <= phi(G)
  bool order_reflecting = false;  // phi(F) <= phi(G)  =>  F <= G
  bool dims_match = false;        // dim phi(F) = sum of nu over F
  bool ok() const { return bijective && order_preserving && order_reflecting && dims_match; }
};

/// Checks phi: P(n,m) -> L(n,m), F -> span of rows of psi(F).
IsoReport iso_check(const RatMatrix& a);

}  // namespace discarr
