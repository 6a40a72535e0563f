#pragma once

// The total order on lattice points and on finite point sets, the symmetric
// group action on coordinates, and minimality testing under that action.
//
// A point x is keyed by (-sum(x), x_1, ..., x_d) compared lexicographically.
// Point sets are kept strictly sorted under this order and compared
// elementwise, shorter prefix first.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "sfp/lattice.hpp"

namespace sfp {

// -1 if x precedes y, 0 if equal, +1 otherwise.
inline int cmp_points(const Point& x, const Point& y) {
  const Coord sx = coord_sum(x);
  const Coord sy = coord_sum(y);
  if (sx != sy) return sx > sy ? -1 : 1;  // larger sum == smaller key
  for (int i = 0; i < kMaxDim; ++i) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

inline bool point_less(const Point& x, const Point& y) { return cmp_points(x, y) < 0; }

// Packs the order key into one 64-bit integer so that unsigned comparison of
// keys agrees with cmp_points. Valid for |coordinate| <= 31.
inline std::uint64_t pack_key(const Point& p) {
  const Coord s = coord_sum(p);
  assert(s >= -kMaxDim * 31 && s <= kMaxDim * 31);
  std::uint64_t k = static_cast<std::uint64_t>(kMaxDim * 31 - s) << 54;
  for (int i = 0; i < kMaxDim; ++i) {
    assert(p[i] >= -31 && p[i] <= 31);
    k |= static_cast<std::uint64_t>(p[i] + 32) << (48 - 6 * i);
  }
  return k;
}

// A duplicate-free collection of lattice points, strictly sorted ascending.
class PointSet {
 public:
  PointSet() = default;

  static PointSet from_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    PointSet s;
    s.pts_ = std::move(pts);
    return s;
  }

  // Inserts keeping the sort; returns false if already present.
  bool insert(const Point& p) {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p, point_less);
    if (it != pts_.end() && *it == p) return false;
    pts_.insert(it, p);
    return true;
  }

  bool contains(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p, point_less);
    return it != pts_.end() && *it == p;
  }

  int size() const { return static_cast<int>(pts_.size()); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](int i) const { return pts_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  const Point& min() const { return pts_.front(); }
  const Point& max() const { return pts_.back(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

// Recursive set order: the empty set is minimal, otherwise compare minima and
// recurse on the remainders. For sorted lists this is elementwise
// lexicographic comparison with the shorter prefix first.
inline int cmp_point_sets(const PointSet& x, const PointSet& y) {
  const int n = std::min(x.size(), y.size());
  for (int i = 0; i < n; ++i) {
    const int c = cmp_points(x[i], y[i]);
    if (c != 0) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

// sigma maps coordinate i to coordinate sigma[i]; a_1 e_1 + ... + a_d e_d
// goes to a_1 e_{sigma(1)} + ... + a_d e_{sigma(d)}.
inline Point permute_point(const std::vector<int>& sigma, const Point& p) {
  Point q;
  const int d = static_cast<int>(sigma.size());
  for (int i = 0; i < d; ++i) q[sigma[static_cast<std::size_t>(i)]] = p[i];
  for (int i = d; i < kMaxDim; ++i) q[i] = p[i];
  return q;
}

inline PointSet permute(const std::vector<int>& sigma, const PointSet& x) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(x.size()));
  for (const Point& p : x) pts.push_back(permute_point(sigma, p));
  return PointSet::from_points(std::move(pts));
}

// True iff v is a subset of w and every element of v precedes every element
// of w \ v. For sorted sets this means v is a prefix of w.
inline bool is_presubset(const PointSet& v, const PointSet& w) {
  if (v.size() > w.size()) return false;
  for (int i = 0; i < v.size(); ++i)
    if (!(v[i] == w[i])) return false;
  return true;
}

enum class Rel { kLess, kEqual, kGreater };

// Reference implementation: the minimum of sorted(sigma.X) over all d!
// coordinate permutations, by direct enumeration.
inline std::vector<Point> min_embedding_naive(std::vector<Point> pts, int d) {
  std::vector<int> sigma(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::sort(pts.begin(), pts.end(), point_less);
  std::vector<Point> best = pts;
  std::vector<Point> cur(pts.size());
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    for (std::size_t i = 0; i < pts.size(); ++i) cur[i] = permute_point(sigma, pts[i]);
    std::sort(cur.begin(), cur.end(), point_less);
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(), point_less))
      best = cur;
  }
  return best;
}

namespace detail {

// Backtracking comparison of min_sigma sorted(sigma.X) against a fixed sorted
// reference R, for sets whose coordinate-sum-1 part is exactly the standard
// basis (that part is invariant under every permutation and is stripped by
// the caller).
//
// Positions carry class labels; the admissible permutations at any node are
// exactly the bijections mapping each source position to a target position of
// the same class. Matching a point against the next reference row refines the
// classes by observed values, which keeps the representation exact.
struct EmbeddingSearch {
  int d = 0;
  int m = 0;
  const Point* src = nullptr;  // unordered nonbasis points of X
  const Point* ref = nullptr;  // sorted nonbasis reference rows
  std::array<Coord, 32> src_sum{};
  std::array<Coord, 32> ref_sum{};
  bool found_less = false;

  struct Classes {
    std::array<std::int8_t, kMaxDim> srcc{};
    std::array<std::int8_t, kMaxDim> tgtc{};
  };

  // Greedy class-minimal arrangement of x compared against row r. Picking the
  // smallest unused value of the matching class at each position yields the
  // lexicographic minimum over admissible arrangements. On equality the
  // refined classes are written to *out.
  int arrange(const Point& x, const Point& r, const Classes& cl, Classes* out) const {
    std::uint32_t used = 0;
    for (int j = 0; j < d; ++j) {
      const int c = cl.tgtc[static_cast<std::size_t>(j)];
      int bi = -1;
      Coord bv = 0;
      for (int i = 0; i < d; ++i) {
        if (used & (1u << i)) continue;
        if (cl.srcc[static_cast<std::size_t>(i)] != c) continue;
        if (bi < 0 || x[i] < bv) {
          bi = i;
          bv = x[i];
        }
      }
      assert(bi >= 0);
      if (bv != r[j]) return bv < r[j] ? -1 : 1;
      used |= 1u << bi;
    }
    // Exact match: refine classes by (old class, value) pairs, shared id space.
    std::array<std::pair<int, Coord>, 2 * kMaxDim> seen;
    int nseen = 0;
    auto id_of = [&](int c, Coord v) {
      for (int k = 0; k < nseen; ++k)
        if (seen[static_cast<std::size_t>(k)].first == c && seen[static_cast<std::size_t>(k)].second == v) return k;
      seen[static_cast<std::size_t>(nseen)] = {c, v};
      return nseen++;
    };
    for (int j = 0; j < d; ++j)
      out->tgtc[static_cast<std::size_t>(j)] =
          static_cast<std::int8_t>(id_of(cl.tgtc[static_cast<std::size_t>(j)], r[j]));
    for (int i = 0; i < d; ++i)
      out->srcc[static_cast<std::size_t>(i)] =
          static_cast<std::int8_t>(id_of(cl.srcc[static_cast<std::size_t>(i)], x[i]));
    return 0;
  }

  // Returns true iff some admissible permutation matches rows t..m-1 exactly.
  // Sets found_less as soon as any admissible permutation produces a row
  // preceding ref[t] after an exactly-matched prefix.
  bool match_rows(int t, const Classes& cl, std::uint32_t consumed) {
    if (t == m) return true;
    bool any_equal = false;
    for (int i = 0; i < m; ++i) {
      if (consumed & (1u << i)) continue;
      const Coord xs = src_sum[static_cast<std::size_t>(i)];
      const Coord rs = ref_sum[static_cast<std::size_t>(t)];
      if (xs > rs) {
        // An unmatched point from an earlier sum group: every arrangement of
        // it precedes the reference row.
        found_less = true;
        return false;
      }
      if (xs < rs) continue;
      Classes refined;
      const int c = arrange(src[i], ref[t], cl, &refined);
      if (c < 0) {
        found_less = true;
        return false;
      }
      if (c == 0) {
        if (match_rows(t + 1, refined, consumed | (1u << i))) any_equal = true;
        if (found_less) return false;
      }
    }
    return any_equal;
  }
};

inline Rel compare_embedding_core(const std::vector<Point>& src, const std::vector<Point>& ref, int d) {
  assert(src.size() == ref.size());
  assert(src.size() <= 32);
  EmbeddingSearch s;
  s.d = d;
  s.m = static_cast<int>(src.size());
  s.src = src.data();
  s.ref = ref.data();
  for (int i = 0; i < s.m; ++i) {
    s.src_sum[static_cast<std::size_t>(i)] = coord_sum(src[static_cast<std::size_t>(i)]);
    s.ref_sum[static_cast<std::size_t>(i)] = coord_sum(ref[static_cast<std::size_t>(i)]);
  }
  EmbeddingSearch::Classes init{};  // one class pair covering all positions
  const bool any_equal = s.match_rows(0, init, 0);
  if (s.found_less) return Rel::kLess;
  return any_equal ? Rel::kEqual : Rel::kGreater;
}

// The fast path applies when the sum-1 part of a set is exactly the standard
// basis: that part is fixed setwise by every permutation and sorts first.
inline bool strip_basis(const std::vector<Point>& pts, int d, std::vector<Point>* nonbasis) {
  std::uint32_t basis_seen = 0;
  for (const Point& p : pts) {
    const Coord s = coord_sum(p);
    if (s > 1) return false;
    if (s == 1) {
      int idx = -1;
      for (int i = 0; i < kMaxDim; ++i) {
        if (p[i] == 1 && idx < 0)
          idx = i;
        else if (p[i] != 0)
          return false;
      }
      if (idx < 0 || idx >= d) return false;
      basis_seen |= 1u << idx;
    } else {
      nonbasis->push_back(p);
    }
  }
  return basis_seen == (d >= 32 ? ~0u : (1u << d) - 1u);
}

}  // namespace detail

// Relation of min over all coordinate permutations sigma of sorted(sigma.X)
// to the sorted reference sequence R (same cardinality). Uses the pruned
// backtracking search when both sets contain the basis as their entire
// coordinate-sum-1 part, and falls back to d! enumeration otherwise.
inline Rel min_embedding_compare(const std::vector<Point>& x, const std::vector<Point>& r_sorted, int d) {
  assert(x.size() == r_sorted.size());
  std::vector<Point> xn, rn;
  if (x.size() <= 32 + static_cast<std::size_t>(d) && detail::strip_basis(x, d, &xn) &&
      detail::strip_basis(r_sorted, d, &rn) && xn.size() <= 32) {
    return detail::compare_embedding_core(xn, rn, d);
  }
  const std::vector<Point> best = min_embedding_naive(x, d);
  const int c = [&] {
    for (std::size_t i = 0; i < best.size(); ++i) {
      const int ci = cmp_points(best[i], r_sorted[i]);
      if (ci != 0) return ci;
    }
    return 0;
  }();
  return c < 0 ? Rel::kLess : (c == 0 ? Rel::kEqual : Rel::kGreater);
}

// True iff V precedes or equals sigma.V for every permutation sigma.
inline bool is_sd_minimal(const PointSet& v, int d) {
  if (v.empty()) return true;
  return min_embedding_compare(v.points(), v.points(), d) != Rel::kLess;
}

// d!-enumeration reference for is_sd_minimal.
inline bool is_sd_minimal_naive(const PointSet& v, int d) {
  if (v.empty()) return true;
  const std::vector<Point> best = min_embedding_naive(v.points(), d);
  return best == v.points();
}

}  // namespace sfp
