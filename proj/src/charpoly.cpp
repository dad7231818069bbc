#include "discarr/charpoly.hpp"

#include <array>
#include <atomic>
#include <map>
#include <thread>

#include "discarr/errors.hpp"
#include "discarr/flats.hpp"
#include "discarr/linalg.hpp"

namespace discarr {

mpz_class CharPoly::eval(const mpz_class& t) const {
  mpz_class v = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) v = v * t + coeffs[d];
  return v;
}

std::string CharPoly::str(char var) const {
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const mpz_class& c = coeffs[d];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (mag != 1 || d == 0) out += mag.get_str();
    if (d >= 1) out += var;
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

CharPoly make_poly(std::initializer_list<long> low_to_high) {
  CharPoly p;
  for (long c : low_to_high) p.coeffs.emplace_back(c);
  return p;
}

mpz_class count_cones(const CharPoly& chi, std::size_t n) {
  mpz_class v = chi.eval(-1);
  return n % 2 ? mpz_class(-v) : v;
}

namespace {

std::size_t check_normals(const std::vector<RatVector>& normals, std::size_t max_count) {
  if (normals.empty()) throw PreconditionError("arrangement has no hyperplanes");
  if (normals.size() > max_count) {
    throw PreconditionError("too many hyperplanes (" + std::to_string(normals.size()) + ", limit " +
                            std::to_string(max_count) + ")");
  }
  const std::size_t dim = normals.front().size();
  for (const auto& v : normals) {
    if (v.size() != dim) throw DimensionError("normals of different lengths");
    bool zero = true;
    for (const auto& x : v) zero = zero && x.is_zero();
    if (zero) throw PreconditionError("zero normal vector");
  }
  return dim;
}

// counts[r][p]: subsets of rank r and size parity p.
using Counts = std::vector<std::array<std::uint64_t, 2>>;

struct WhitneyWalk {
  const std::vector<RatVector>& vs;
  std::size_t full_rank;
  bool collapse;

  void walk(std::size_t next, IncrementalBasis& b, int parity, Counts& counts) const {
    const std::size_t n = vs.size();
    for (std::size_t j = next; j < n; ++j) {
      const bool added = b.add(vs[j]);
      const int p = parity ^ 1;
      const std::size_t r = b.rank();
      ++counts[r][p];
      const std::size_t remaining = n - 1 - j;
      if (collapse && r == full_rank) {
        if (remaining > 0) {
          const std::uint64_t half = std::uint64_t{1} << (remaining - 1);
          counts[r][p] += half - 1;
          counts[r][p ^ 1] += half;
        }
      } else if (remaining > 0) {
        walk(j + 1, b, p, counts);
      }
      if (added) b.pop();
    }
  }
};

}  // namespace

CharPoly whitney_char_poly(const std::vector<RatVector>& normals, const WhitneyOptions& opts) {
  const std::size_t dim = check_normals(normals, 63);
  const std::size_t n = normals.size();
  const std::size_t full_rank = rank(RatMatrix::from_rows(normals));
  const WhitneyWalk w{normals, full_rank, opts.collapse_full_rank};

  Counts total(dim + 1, {0, 0});
  if (opts.threads <= 1) {
    IncrementalBasis b(dim);
    ++total[0][0];  // empty subset
    w.walk(0, b, 0, total);
  } else {
    // Task t fixes which of the first `depth` normals are in the subset.
    const std::size_t depth = std::min<std::size_t>(n, 8);
    const std::size_t tasks = std::size_t{1} << depth;
    std::vector<Counts> partial(tasks, Counts(dim + 1, {0, 0}));
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
      for (std::size_t t; (t = next_task.fetch_add(1)) < tasks;) {
        IncrementalBasis b(dim);
        int parity = 0;
        for (std::size_t i = 0; i < depth; ++i) {
          if (t >> i & 1u) {
            b.add(normals[i]);
            parity ^= 1;
          }
        }
        ++partial[t][b.rank()][parity];
        w.walk(depth, b, parity, partial[t]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < opts.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& c : partial)
      for (std::size_t r = 0; r <= dim; ++r) {
        total[r][0] += c[r][0];
        total[r][1] += c[r][1];
      }
  }

  CharPoly chi;
  chi.coeffs.assign(dim + 1, 0);
  for (std::size_t r = 0; r <= dim; ++r) {
    mpz_class even, odd;
    mpz_set_ui(even.get_mpz_t(), total[r][0]);
    mpz_set_ui(odd.get_mpz_t(), total[r][1]);
    chi.coeffs[dim - r] += even - odd;
  }
  return chi;
}

CharPoly whitney_char_poly(const DiscArrangement& d, const WhitneyOptions& opts) {
  return whitney_char_poly(d.normals(), opts);
}

CharPoly char_poly_via_flats(const std::vector<RatVector>& normals) {
  const std::size_t dim = check_normals(normals, 64);
  const VectorMatroid mat(normals);
  const auto flats = mat.flats();
  const auto mu = mobius_from_bottom(flats);
  CharPoly chi;
  chi.coeffs.assign(dim + 1, 0);
  for (std::size_t i = 0; i < flats.size(); ++i) chi.coeffs[dim - flats[i].rank] += static_cast<long>(mu[i]);
  return chi;
}

namespace {

using IntVec = std::vector<mpz_class>;

IntVec primitive(IntVec v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return {};
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

// Arrangement given by sorted, distinct primitive normals.
using Canon = std::vector<IntVec>;

Canon canonical(std::vector<IntVec> vs) {
  Canon out;
  for (auto& v : vs) {
    auto p = primitive(std::move(v));
    if (!p.empty()) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t int_rank(const Canon& vs) {
  std::vector<RatVector> rows;
  for (const auto& v : vs) {
    RatVector r;
    for (const auto& x : v) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  return rank(RatMatrix::from_rows(rows));
}

class DeletionRestriction {
 public:
  mpz_class regions(const Canon& a) {
    if (a.empty()) return 1;
    if (a.size() == 1) return 2;
    if (a.size() <= a.front().size() && int_rank(a) == a.size()) {
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, a.size());
      return r;
    }
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;

    const IntVec& h = a.back();
    Canon deleted(a.begin(), a.end() - 1);
    std::size_t p = 0;
    while (h[p] == 0) ++p;
    std::vector<IntVec> restricted;
    for (const auto& v : deleted) {
      IntVec w;
      w.reserve(v.size() - 1);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != p) w.push_back(h[p] * v[j] - v[p] * h[j]);
      }
      restricted.push_back(std::move(w));
    }
    mpz_class r = regions(deleted) + regions(canonical(std::move(restricted)));
    memo_.emplace(a, r);
    return r;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<Canon, mpz_class> memo_;
};

}  // namespace

mpz_class count_cones_deletion_restriction(const std::vector<RatVector>& normals) {
  check_normals(normals, 1024);
  std::vector<IntVec> ints;
  for (const auto& v : normals) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    IntVec iv;
    for (const auto& x : v) iv.push_back(x.value().get_num() * (l / x.value().get_den()));
    ints.push_back(std::move(iv));
  }
  DeletionRestriction dr;
  return dr.regions(canonical(std::move(ints)));
}

}  // namespace discarr
