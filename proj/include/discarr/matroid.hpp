#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "discarr/discriminantal.hpp"
#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

namespace discarr {

/// All (k+1)-subsets of {1..n} (the circuits of U_{k,n}) in dictionary order.
/// Throws PreconditionError unless n > k >= 1.
SubsetFamily uniform_circuits(std::size_t n, std::size_t k);

/// Independence in the Dilworth matroid D(U_{k,n}): every nonempty
/// subcollection J satisfies |union of J| >= k + |J|. Uses f.k; every member
/// must have exactly k+1 elements (PreconditionError otherwise).
bool dilworth_independent(const SubsetFamily& f);
bool dilworth_independent_masks(std::span<const Mask> members, std::size_t k);

/// Size of a largest D-independent subcollection (greedy).
std::size_t dilworth_rank(const SubsetFamily& f);

/// A system of distinct representatives: result[i] is in sets[i] and in
/// `ground`, all distinct. nullopt when Hall's condition fails.
std::optional<std::vector<std::size_t>> find_sdr(const std::vector<Subset>& sets, const Subset& ground);

/// Every D-independent collection of (k+1)-subsets of {1..n}, each given as
/// increasing 0-based positions into uniform_circuits(n, k). Includes the
/// empty collection; lexicographic order.
std::vector<std::vector<std::size_t>> enumerate_dilworth_independent(std::size_t n, std::size_t k);

struct VeryGenericCertificate {
  bool verdict = false;
  /// Dictionary-least D-independent collection whose Disc rows are
  /// rank-deficient. Present iff verdict is false.
  std::optional<SubsetFamily> witness;
  std::size_t witness_rank = 0;
  std::size_t collections_checked = 0;
};

/// Decides whether the rows of Disc(A) represent D(U_{m,n}) by checking
/// that every D-independent collection of (m+1)-subsets indexes linearly
/// independent rows. Throws PreconditionError when A is not generic.
VeryGenericCertificate is_very_generic(const RatMatrix& a);

/// Memoized rank of subsets of Disc(A) rows, keyed by the row set.
/// Safe for concurrent queries.
class DiscRankOracle {
 public:
  explicit DiscRankOracle(const DiscArrangement& disc);

  /// Rank of the rows indexed by 0-based positions (any order, duplicates ignored).
  std::size_t rank(std::span<const std::size_t> rows) const;
  std::size_t rank_of_subsets(const std::vector<Subset>& subsets) const;
  std::size_t cache_size() const;

 private:
  const DiscArrangement* disc_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<std::size_t>, std::size_t> cache_;
};

}  // namespace discarr
