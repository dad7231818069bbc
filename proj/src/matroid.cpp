#include "discarr/matroid.hpp"

#include <algorithm>
#include <functional>

#include "discarr/arrangement.hpp"
#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

SubsetFamily uniform_circuits(std::size_t n, std::size_t k) {
  if (k < 1 || n <= k) throw PreconditionError("uniform circuits need n > k >= 1");
  return SubsetFamily{n, k, k_subsets(n, k + 1)};
}

namespace {

void check_circuit_sizes(const SubsetFamily& f) {
  for (const auto& s : f.members) {
    if (s.size() != f.k + 1) {
      throw PreconditionError("Dilworth matroid members must have k+1 = " + std::to_string(f.k + 1) +
                              " elements, got " + format_subset(s));
    }
  }
}

// Independence of members plus `extra`, given that members alone are
// independent: only subcollections containing `extra` need checking.
bool extends_independent(std::span<const Mask> members, Mask extra, std::size_t k) {
  const std::size_t r = members.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << r); ++sel) {
    Mask u = extra;
    std::size_t count = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (sel >> i & 1u) {
        u |= members[i];
        ++count;
      }
    }
    if (static_cast<std::size_t>(popcount(u)) < k + count) return false;
  }
  return true;
}

}  // namespace

bool dilworth_independent_masks(std::span<const Mask> members, std::size_t k) {
  if (members.empty()) return true;
  Mask all = 0;
  for (auto m : members) all |= m;
  // J = everything: also bounds |members| by n - k before the 2^|F| sweep.
  if (static_cast<std::size_t>(popcount(all)) < k + members.size()) return false;
  const std::size_t r = members.size();
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << r); ++sel) {
    Mask u = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (sel >> i & 1u) {
        u |= members[i];
        ++count;
      }
    }
    if (static_cast<std::size_t>(popcount(u)) < k + count) return false;
  }
  return true;
}

bool dilworth_independent(const SubsetFamily& f) {
  check_circuit_sizes(f);
  const auto masks = f.masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (masks[i] == masks[j]) return false;  // a repeated circuit is dependent
  return dilworth_independent_masks(masks, f.k);
}

std::size_t dilworth_rank(const SubsetFamily& f) {
  check_circuit_sizes(f);
  std::vector<Mask> basis;
  for (auto m : f.masks()) {
    if (std::find(basis.begin(), basis.end(), m) != basis.end()) continue;
    if (extends_independent(basis, m, f.k)) basis.push_back(m);
  }
  return basis.size();
}

std::optional<std::vector<std::size_t>> find_sdr(const std::vector<Subset>& sets, const Subset& ground) {
  // Kuhn's augmenting paths: left = sets, right = ground elements.
  std::vector<std::vector<std::size_t>> adj(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (auto e : sets[i])
      if (std::binary_search(ground.begin(), ground.end(), e)) adj[i].push_back(e);

  std::map<std::size_t, std::size_t> owner;  // element -> set index
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (auto e : adj[i]) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin());
      if (seen[pos]) continue;
      seen[pos] = 1;
      auto it = owner.find(e);
      if (it == owner.end() || augment(it->second, seen)) {
        owner[e] = i;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<char> seen(ground.size(), 0);
    if (!augment(i, seen)) return std::nullopt;
  }
  std::vector<std::size_t> choice(sets.size());
  for (const auto& [e, i] : owner) choice[i] = e;
  return choice;
}

std::vector<std::vector<std::size_t>> enumerate_dilworth_independent(std::size_t n, std::size_t k) {
  const auto circuits = k_subset_masks(n, k + 1);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<Mask> cur_masks;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    out.push_back(cur);
    for (std::size_t c = start; c < circuits.size(); ++c) {
      if (!extends_independent(cur_masks, circuits[c], k)) continue;
      cur.push_back(c);
      cur_masks.push_back(circuits[c]);
      dfs(c + 1);
      cur.pop_back();
      cur_masks.pop_back();
    }
  };
  dfs(0);
  return out;
}

VeryGenericCertificate is_very_generic(const RatMatrix& a) {
  if (!normals_generic(a)) throw PreconditionError("very-genericity requires a generic coefficient matrix");
  const std::size_t n = a.rows(), m = a.cols();
  const DiscArrangement disc = build_disc(a);
  const auto circuits = k_subset_masks(n, m + 1);

  VeryGenericCertificate cert;
  std::vector<std::size_t> cur;
  std::vector<Mask> cur_masks;
  IncrementalBasis basis(n);
  bool failed = false;

  // Lexicographic DFS over D-independent collections; the first rank
  // deficiency found is the dictionary-least failing collection.
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    for (std::size_t c = start; c < circuits.size() && !failed; ++c) {
      if (!extends_independent(cur_masks, circuits[c], m)) continue;
      ++cert.collections_checked;
      cur.push_back(c);
      if (!basis.add(disc[c].normal)) {
        failed = true;
        SubsetFamily w{n, m, {}};
        for (auto i : cur) w.members.push_back(disc[i].subset);
        cert.witness = std::move(w);
        cert.witness_rank = basis.rank();
        return;
      }
      cur_masks.push_back(circuits[c]);
      dfs(c + 1);
      if (failed) return;
      basis.pop();
      cur_masks.pop_back();
      cur.pop_back();
    }
  };
  dfs(0);
  cert.verdict = !failed;
  return cert;
}

DiscRankOracle::DiscRankOracle(const DiscArrangement& disc) : disc_(&disc) {}

std::size_t DiscRankOracle::rank(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> key(rows.begin(), rows.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  IncrementalBasis b(disc_->n());
  for (auto r : key) {
    if (r >= disc_->size()) throw DimensionError("Disc row index out of range");
    b.add((*disc_)[r].normal);
  }
  std::lock_guard lock(mu_);
  cache_.emplace(std::move(key), b.rank());
  return b.rank();
}

std::size_t DiscRankOracle::rank_of_subsets(const std::vector<Subset>& subsets) const {
  std::vector<std::size_t> rows;
  for (const auto& s : subsets) {
    auto idx = disc_->index_of(s);
    if (!idx) throw PreconditionError("no Disc row for subset " + format_subset(s));
    rows.push_back(*idx);
  }
  return rank(rows);
}

std::size_t DiscRankOracle::cache_size() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

}  // namespace discarr
