#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace discarr {

/// Strictly increasing list of 1-based indices.
using Subset = std::vector<std::size_t>;

/// Bit i-1 set for element i. Supports ground sets up to 32 elements.
using Mask = std::uint32_t;
inline constexpr std::size_t kMaxMaskGround = 32;

Mask to_mask(const Subset& s);
Subset from_mask(Mask m);
inline int popcount(Mask m) { return __builtin_popcount(m); }

/// All r-subsets of {1..n} in dictionary order.
std::vector<Subset> k_subsets(std::size_t n, std::size_t r);
/// Same, as masks, in the same order.
std::vector<Mask> k_subset_masks(std::size_t n, std::size_t r);

std::uint64_t binomial(std::size_t n, std::size_t r);

/// A collection of subsets of {1..n}; `k` is the rank parameter of the
/// surrounding construction (U_{k,n}, P(n,k), ...).
struct SubsetFamily {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Subset> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  /// Members sorted in dictionary order, duplicates removed.
  SubsetFamily canonical() const;
  std::vector<Mask> masks() const;
  static SubsetFamily from_masks(std::size_t n, std::size_t k, const std::vector<Mask>& masks);

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

/// "{1,2,3}"
std::string format_subset(const Subset& s);
/// "{{1,2,3},{4,5,6}}"
std::string format_family(const std::vector<Subset>& f);

/// Throws PreconditionError unless every member is strictly increasing within 1..n
/// and members are pairwise distinct.
void validate_family(const SubsetFamily& f);

}  // namespace discarr
