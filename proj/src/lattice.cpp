#include "discarr/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "discarr/discriminantal.hpp"
#include "discarr/errors.hpp"
#include "discarr/linalg.hpp"
#include "discarr/matroid.hpp"

namespace discarr {

void Poset::compute_full_mobius() {
  const std::size_t n = size();
  std::vector<std::vector<long long>> mu(n, std::vector<long long>(n, 0));
  // Elements are stored in a linear extension (rank order), so every z
  // strictly between x and y is visited before y.
  for (std::size_t x = 0; x < n; ++x) {
    mu[x][x] = 1;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!leq[x][y]) continue;
      long long s = 0;
      for (std::size_t z = x; z < y; ++z)
        if (leq[x][z] && leq[z][y]) s += mu[x][z];
      mu[x][y] = -s;
    }
  }
  mobius = std::move(mu);
}

CharPoly Poset::char_poly(std::size_t n) const {
  CharPoly chi;
  chi.coeffs.assign(n + 1, 0);
  for (std::size_t x = 0; x < size(); ++x) {
    if (rank[x] > n) throw std::logic_error("element rank exceeds polynomial degree");
    chi.coeffs[n - rank[x]] += static_cast<long>(mobius_bottom[x]);
  }
  return chi;
}

namespace {

void fill_mobius_bottom(Poset& p) {
  p.mobius_bottom.assign(p.size(), 0);
  if (p.size() == 0) return;
  p.mobius_bottom[0] = 1;
  for (std::size_t x = 1; x < p.size(); ++x) {
    long long s = 0;
    for (std::size_t z = 0; z < x; ++z)
      if (p.leq[z][x]) s += p.mobius_bottom[z];
    p.mobius_bottom[x] = -s;
  }
}

std::size_t nu_mask(Mask m, std::size_t k) {
  const auto c = static_cast<std::size_t>(popcount(m));
  return c > k ? c - k : 0;
}

// Strict union inequality for every subfamily containing `extra` and at
// least one member.
bool p_extends(std::span<const Mask> members, Mask extra, std::size_t k) {
  const std::size_t r = members.size();
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << r); ++sel) {
    Mask u = extra;
    std::size_t excess = nu_mask(extra, k);
    for (std::size_t i = 0; i < r; ++i) {
      if (sel >> i & 1u) {
        u |= members[i];
        excess += popcount(members[i]) - k;
      }
    }
    if (static_cast<std::size_t>(popcount(u)) <= k + excess) return false;
  }
  return true;
}

bool p_order_masks(std::span<const Mask> f, std::span<const Mask> g) {
  for (auto s : f) {
    bool inside = false;
    for (auto t : g) inside = inside || (s & ~t) == 0;
    if (!inside) return false;
  }
  return true;
}

void check_k_plus_one(const SubsetFamily& f) {
  for (const auto& s : f.members)
    if (s.size() != f.k + 1) throw PreconditionError("expected (k+1)-subsets, got " + format_subset(s));
}

}  // namespace

std::size_t nu(const Subset& s, std::size_t k) { return s.size() > k ? s.size() - k : 0; }

long long delta(const SubsetFamily& f, std::size_t k) {
  std::set<std::size_t> u;
  long long sum = 0;
  for (const auto& s : f.members) {
    u.insert(s.begin(), s.end());
    sum += static_cast<long long>(nu(s, k));
  }
  const long long nu_union = u.size() > k ? static_cast<long long>(u.size() - k) : 0;
  return nu_union - sum;
}

bool in_P(const SubsetFamily& f, std::size_t n, std::size_t k) {
  SubsetFamily g{n, k, f.members};
  for (const auto& s : g.members) {
    for (auto e : s)
      if (e < 1 || e > n) throw PreconditionError("member " + format_subset(s) + " not inside 1..n");
    if (s.size() < k + 1) return false;
  }
  const auto masks = g.masks();
  std::vector<Mask> prefix;
  for (auto m : masks) {
    if (!p_extends(prefix, m, k)) return false;
    prefix.push_back(m);
  }
  return true;
}

bool in_P(const SubsetFamily& f) { return in_P(f, f.n, f.k); }

bool p_order(const SubsetFamily& f, const SubsetFamily& g) {
  const auto fm = f.masks(), gm = g.masks();
  return p_order_masks(fm, gm);
}

PPoset enumerate_P(std::size_t n, std::size_t k) {
  if (k < 1 || n <= k) throw PreconditionError("P(n,k) needs n > k >= 1");
  if (!((n <= 7 && k == 2) || n - k <= 4)) {
    throw PreconditionError("P(" + std::to_string(n) + "," + std::to_string(k) +
                            ") is beyond the supported scale (n <= 7 with k = 2, or n - k <= 4)");
  }
  std::vector<Mask> candidates;
  for (std::size_t r = k + 1; r <= n; ++r)
    for (auto m : k_subset_masks(n, r)) candidates.push_back(m);

  std::vector<std::vector<Mask>> found;
  std::vector<Mask> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    found.push_back(cur);
    for (std::size_t c = start; c < candidates.size(); ++c) {
      if (!p_extends(cur, candidates[c], k)) continue;
      cur.push_back(candidates[c]);
      grow(c + 1);
      cur.pop_back();
    }
  };
  grow(0);

  PPoset out;
  out.n = n;
  out.k = k;
  std::vector<std::pair<std::size_t, PFamily>> keyed;
  for (const auto& f : found) {
    std::size_t r = 0;
    for (auto m : f) r += nu_mask(m, k);
    keyed.emplace_back(r, SubsetFamily::from_masks(n, k, f).canonical());
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.members < b.second.members;
  });

  std::vector<std::vector<Mask>> masks;
  for (auto& [r, f] : keyed) {
    out.poset.rank.push_back(r);
    masks.push_back(f.masks());
    out.elements.push_back(std::move(f));
  }
  const std::size_t size = out.elements.size();
  out.poset.leq.assign(size, std::vector<char>(size, 0));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) out.poset.leq[a][b] = p_order_masks(masks[a], masks[b]);
  fill_mobius_bottom(out.poset);
  return out;
}

ClosedCollection closure_once(const SubsetFamily& f) {
  check_k_plus_one(f);
  std::vector<Mask> base;
  for (auto m : f.masks()) {
    base.push_back(m);
    if (!dilworth_independent_masks(base, f.k)) base.pop_back();
  }
  ClosedCollection out{f.n, f.k, {}};
  for (auto s : k_subset_masks(f.n, f.k + 1)) {
    base.push_back(s);
    const bool dependent = !dilworth_independent_masks(base, f.k);
    base.pop_back();
    if (dependent || std::find(base.begin(), base.end(), s) != base.end()) out.members.push_back(from_mask(s));
  }
  return out;
}

ClosedCollection closure(const SubsetFamily& f, std::size_t* passes) {
  ClosedCollection cur = f.canonical();
  std::size_t changed = 0;
  while (true) {
    ClosedCollection next = closure_once(cur);
    if (next == cur) break;
    cur = std::move(next);
    ++changed;
  }
  if (passes) *passes = changed;
  return cur;
}

bool is_concurrency_closed(const SubsetFamily& d) {
  check_k_plus_one(d);
  return closure_once(d) == d.canonical();
}

PFamily concurrency_sets(const ClosedCollection& d) {
  if (!is_concurrency_closed(d)) throw PreconditionError("collection is not concurrency closed");
  const auto masks = d.canonical().masks();
  std::vector<std::size_t> parent(masks.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (static_cast<std::size_t>(popcount(masks[i] & masks[j])) == d.k) parent[find(i)] = find(j);

  std::map<std::size_t, Mask> unions;
  for (std::size_t i = 0; i < masks.size(); ++i) unions[find(i)] |= masks[i];

  const std::set<Mask> present(masks.begin(), masks.end());
  std::vector<Mask> sets;
  for (const auto& [root, u] : unions) {
    for (const auto& sub : k_subsets(static_cast<std::size_t>(popcount(u)), d.k + 1)) {
      const Subset elems = from_mask(u);
      Mask m = 0;
      for (auto pos : sub) m |= Mask{1} << (elems[pos - 1] - 1);
      if (!present.contains(m)) throw std::logic_error("merged concurrency set is not complete");
    }
    sets.push_back(u);
  }
  return SubsetFamily::from_masks(d.n, d.k, sets).canonical();
}

SubsetFamily base_collection(const ClosedCollection& d) {
  const PFamily sets = concurrency_sets(d);
  SubsetFamily out{d.n, d.k, {}};
  for (const auto& s : sets.members) {
    for (std::size_t l = d.k; l < s.size(); ++l) {
      Subset b(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d.k));
      b.push_back(s[l]);
      out.members.push_back(std::move(b));
    }
  }
  return out.canonical();
}

ClosedCollection psi(const PFamily& f) {
  if (!in_P(f)) throw PreconditionError("family " + format_family(f.members) + " is not in P(n,k)");
  std::set<Subset> out;
  for (const auto& s : f.members) {
    for (const auto& pos : k_subsets(s.size(), f.k + 1)) {
      Subset e;
      for (auto p : pos) e.push_back(s[p - 1]);
      out.insert(std::move(e));
    }
  }
  return ClosedCollection{f.n, f.k, {out.begin(), out.end()}};
}

std::vector<ClosedCollection> enumerate_closed(std::size_t n, std::size_t k) {
  const auto circuits = uniform_circuits(n, k);
  std::set<std::vector<Subset>> seen;
  for (const auto& coll : enumerate_dilworth_independent(n, k)) {
    SubsetFamily f{n, k, {}};
    for (auto i : coll) f.members.push_back(circuits.members[i]);
    seen.insert(closure(f).members);
  }
  std::vector<ClosedCollection> out;
  for (const auto& m : seen) out.push_back(ClosedCollection{n, k, m});
  return out;
}

std::size_t FlatLattice::span_of(const std::vector<Subset>& rows) const {
  IncrementalBasis b(n);
  for (const auto& s : rows) {
    auto it = std::lower_bound(row_subsets.begin(), row_subsets.end(), s);
    if (it == row_subsets.end() || *it != s) throw PreconditionError("no Disc row for " + format_subset(s));
    b.add(normals_[static_cast<std::size_t>(it - row_subsets.begin())]);
  }
  RowSet set = 0;
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (b.contains(normals_[i])) set |= RowSet{1} << i;
  auto it = index_.find(set);
  if (it == index_.end()) throw std::logic_error("span is not a flat of the lattice");
  return it->second;
}

FlatLattice flats_lattice(const RatMatrix& a) {
  const DiscArrangement disc = build_disc(a);
  FlatLattice out;
  out.n = disc.n();
  out.m = disc.m();
  for (const auto& r : disc.rows()) out.row_subsets.push_back(r.subset);
  out.normals_ = disc.normals();
  const VectorMatroid mat(out.normals_);
  out.flats = mat.flats();

  std::set<std::vector<std::string>> keys;
  for (std::size_t i = 0; i < out.flats.size(); ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < out.normals_.size(); ++r)
      if (out.flats[i].elements >> r & 1u) idx.push_back(r);
    RatMatrix span = idx.empty() ? RatMatrix(0, out.n) : rref(disc.matrix().select_rows(idx)).rref;
    std::vector<std::string> key;
    for (std::size_t r = 0; r < span.rows(); ++r)
      for (std::size_t c = 0; c < span.cols(); ++c) key.push_back(span(r, c).str());
    if (!keys.insert(key).second) throw std::logic_error("two flats share a row span");
    out.spans.push_back(std::move(span));
    out.index_.emplace(out.flats[i].elements, i);
  }

  const std::size_t size = out.flats.size();
  out.poset.leq.assign(size, std::vector<char>(size, 0));
  for (std::size_t x = 0; x < size; ++x) {
    out.poset.rank.push_back(out.flats[x].rank);
    for (std::size_t y = 0; y < size; ++y)
      out.poset.leq[x][y] = (out.flats[x].elements & ~out.flats[y].elements) == 0;
  }
  fill_mobius_bottom(out.poset);
  return out;
}

IsoReport iso_check(const RatMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  const PPoset p = enumerate_P(n, m);
  const FlatLattice l = flats_lattice(a);
  IsoReport rep;
  rep.p_size = p.elements.size();
  rep.l_size = l.flats.size();

  std::vector<std::size_t> phi;
  for (const auto& f : p.elements) phi.push_back(l.span_of(psi(f).members));

  std::set<std::size_t> image(phi.begin(), phi.end());
  rep.bijective = image.size() == phi.size() && phi.size() == l.flats.size();
  rep.dims_match = true;
  for (std::size_t i = 0; i < phi.size(); ++i)
    rep.dims_match = rep.dims_match && l.flats[phi[i]].rank == p.poset.rank[i];
  rep.order_preserving = rep.order_reflecting = true;
  for (std::size_t x = 0; x < phi.size(); ++x) {
    for (std::size_t y = 0; y < phi.size(); ++y) {
      const bool in_p = p.poset.leq[x][y];
      const bool in_l = l.poset.leq[phi[x]][phi[y]];
      if (in_p && !in_l) rep.order_preserving = false;
      if (in_l && !in_p) rep.order_reflecting = false;
    }
  }
  return rep;
}

}  // namespace discarr
