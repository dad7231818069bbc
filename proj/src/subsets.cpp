#include "discarr/subsets.hpp"

#include <algorithm>
#include <set>

#include "discarr/errors.hpp"

namespace discarr {

Mask to_mask(const Subset& s) {
  Mask m = 0;
  for (auto e : s) {
    if (e < 1 || e > kMaxMaskGround) throw PreconditionError("subset element outside 1..32");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

Subset from_mask(Mask m) {
  Subset s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1u) s.push_back(i + 1);
  return s;
}

std::vector<Subset> k_subsets(std::size_t n, std::size_t r) {
  std::vector<Subset> out;
  if (r > n) return out;
  Subset cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Mask> k_subset_masks(std::size_t n, std::size_t r) {
  std::vector<Mask> out;
  for (const auto& s : k_subsets(n, r)) out.push_back(to_mask(s));
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

SubsetFamily SubsetFamily::canonical() const {
  SubsetFamily out{n, k, members};
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

std::vector<Mask> SubsetFamily::masks() const {
  std::vector<Mask> out;
  out.reserve(members.size());
  for (const auto& s : members) out.push_back(to_mask(s));
  return out;
}

SubsetFamily SubsetFamily::from_masks(std::size_t n, std::size_t k, const std::vector<Mask>& masks) {
  SubsetFamily f{n, k, {}};
  for (auto m : masks) f.members.push_back(from_mask(m));
  return f;
}

std::string format_subset(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string format_family(const std::vector<Subset>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += format_subset(f[i]);
  }
  return out + "}";
}

void validate_family(const SubsetFamily& f) {
  std::set<Subset> seen;
  for (const auto& s : f.members) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > f.n) throw PreconditionError("element outside 1..n in " + format_subset(s));
      if (i && s[i] <= s[i - 1]) throw PreconditionError("subset not strictly increasing: " + format_subset(s));
    }
    if (!seen.insert(s).second) throw PreconditionError("duplicate member " + format_subset(s));
  }
}

}  // namespace discarr
