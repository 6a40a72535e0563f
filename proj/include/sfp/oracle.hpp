#pragma once

// Independent cross-checks for the classifier. Nothing here shares logic
// with the pivoting search: polytopes are verified by enumerating all
// d-subsets as facet candidates, isomorphism is decided by trying every
// facet-to-facet unimodular map, and the brute-force classifier simply walks
// all candidate vertex sets. Exponential everywhere; intended for d <= 3
// (isomorphism and canonical form are fine somewhat beyond that).

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "sfp/geometry.hpp"
#include "sfp/lattice.hpp"
#include "sfp/order.hpp"
#include "sfp/wd.hpp"

namespace sfp {

// Decides lattice isomorphism by exhausting unimodular maps sending a fixed
// facet of p onto some facet of q, in some vertex order. Any isomorphism
// maps facets to facets, so this misses nothing.
inline bool are_isomorphic(const FanoPolytope& p, const FanoPolytope& q) {
  if (p.dim != q.dim || p.verts.size() != q.verts.size() ||
      p.facets.size() != q.facets.size())
    return false;
  const int d = p.dim;
  const Simplex& f0 = p.facets.front();
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (const Simplex& g : q.facets) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // phi(x) = sum_i <u_{f0}^i, x> * g_{perm(i)}  maps f0 onto g.
      bool all_in = true;
      for (const Point& x : p.verts) {
        Point y;
        for (int i = 0; i < d; ++i) {
          const Coord c = pairing(f0.dual(i), x);
          const Point& gv = g.vertex(perm[static_cast<std::size_t>(i)]);
          for (int k = 0; k < d; ++k) y[k] += c * gv[k];
        }
        if (!q.verts.contains(y)) {
          all_in = false;
          break;
        }
      }
      if (all_in) return true;  // injective on vertices, equal cardinality
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

// Canonical form straight from its definition: minimize the sorted image of
// V(P) over every unimodular map carrying some facet onto the identity
// simplex, keeping only maps under which the image vertex sum has
// nonnegative coordinates.
inline std::vector<Point> ord_by_definition(const FanoPolytope& p) {
  const int d = p.dim;
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::vector<Point> best;
  for (const Simplex& f : p.facets) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // phi(x)_j = <u_F^{perm(j)}, x>, so vertex perm(j) of F goes to e_j.
      std::vector<Point> img;
      img.reserve(static_cast<std::size_t>(p.verts.size()));
      Point sum;
      for (const Point& x : p.verts) {
        Point y;
        for (int j = 0; j < d; ++j) y[j] = pairing(f.dual(perm[static_cast<std::size_t>(j)]), x);
        sum = add(sum, y);
        img.push_back(y);
      }
      bool special = true;
      for (int j = 0; j < d; ++j)
        if (sum[j] < 0) special = false;
      if (!special) continue;
      std::sort(img.begin(), img.end(), point_less);
      if (best.empty() ||
          std::lexicographical_compare(img.begin(), img.end(), best.begin(), best.end(), point_less))
        best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  assert(!best.empty());
  return best;
}

namespace detail {

// Conservative containment test: x is declared inside conv(S) when some
// (d+1)-subset of S spans a full-dimensional simplex whose barycentric
// coordinates for x are all nonnegative. May miss containments, never
// reports a false one.
inline bool inside_some_simplex(const Point& x, const std::vector<Point>& s, int d) {
  const int n = static_cast<int>(s.size());
  if (n < d + 1) return false;
  std::vector<int> idx(static_cast<std::size_t>(d) + 1);
  // enumerate (d+1)-subsets
  for (int i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    // Barycentric coordinate of x w.r.t. vertex idx[k] is det with row k
    // replaced by x, over the simplex determinant; x lies inside when all
    // replaced determinants share the sign of the full one (or vanish).
    SquareMatrix m{};
    // Affine formulation: rows s_i - base for the first d chosen points.
    const Point& base = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
    for (int r = 0; r < d; ++r) {
      const Point diff = sub(s[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])], base);
      for (int c = 0; c < d; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = diff[c];
    }
    const Coord full = determinant(m, d);
    if (full != 0) {
      const Point xb = sub(x, base);
      bool ok = true;
      Coord partial_sum = 0;
      for (int k = 0; k < d && ok; ++k) {
        SquareMatrix mk = m;
        for (int c = 0; c < d; ++c) mk[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = xb[c];
        const Coord dk = determinant(mk, d);
        partial_sum += full > 0 ? dk : -dk;
        if ((full > 0 && dk < 0) || (full < 0 && dk > 0)) ok = false;
      }
      // Last barycentric coordinate: 1 - sum of the others, scaled by |full|.
      if (ok && partial_sum <= (full > 0 ? full : -full)) return true;
    }
    // next subset
    int k = d;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 1 - (d - k)) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return false;
}

// Facet-by-exhaustion validation: V is the vertex set of a smooth Fano
// d-polytope iff every supporting d-subset is unimodular with no extra point
// on its hyperplane, every point lies on some facet, and every ridge is
// shared by exactly two facets.
inline bool verify_smooth_fano(const PointSet& v, int d, std::vector<Simplex>* facets_out) {
  const int n = v.size();
  if (n < d + 1) return false;
  std::vector<std::vector<int>> facets;  // vertex index lists, sorted
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    SquareMatrix m{};
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v[idx[static_cast<std::size_t>(r)]][c];
    Coord det = determinant(m, d);
    if (det != 0) {
      // Integer normal scaled by |det|: solve M h = (det, ..., det).
      Point h;  // covector, stored as a point for arithmetic convenience
      for (int k = 0; k < d; ++k) {
        Coord colsum = 0;
        for (int i = 0; i < d; ++i)
          colsum += ((i + k) % 2 == 0 ? 1 : -1) * detail::minor_determinant(m, d, i, k);
        h[k] = det > 0 ? colsum : -colsum;
      }
      const Coord scale = det > 0 ? det : -det;  // <h, x> <= scale means beneath
      bool supporting = true;
      bool extra_on = false;
      for (int i = 0; i < n && supporting; ++i) {
        Coord t = 0;
        for (int k = 0; k < d; ++k) t += h[k] * v[i][k];
        if (t > scale) supporting = false;
        else if (t == scale &&
                 std::find(idx.begin(), idx.end(), i) == idx.end())
          extra_on = true;
      }
      if (supporting) {
        if (extra_on) return false;      // supported by > d points: not simplicial
        if (scale != 1) return false;    // facet basis not unimodular
        facets.push_back(idx);
      }
    }
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (facets.size() < static_cast<std::size_t>(d) + 1) return false;
  // every point on some facet
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  for (const std::vector<int>& f : facets)
    for (int i : f) on[static_cast<std::size_t>(i)] = 1;
  if (std::find(on.begin(), on.end(), 0) != on.end()) return false;
  // every ridge in exactly two facets
  for (const std::vector<int>& f : facets) {
    for (int drop = 0; drop < d; ++drop) {
      int count = 0;
      for (const std::vector<int>& g : facets) {
        bool contains_ridge = true;
        for (int i = 0; i < d && contains_ridge; ++i) {
          if (i == drop) continue;
          if (std::find(g.begin(), g.end(), f[static_cast<std::size_t>(i)]) == g.end())
            contains_ridge = false;
        }
        if (contains_ridge) ++count;
      }
      if (count != 2) return false;
    }
  }
  if (facets_out) {
    facets_out->clear();
    for (const std::vector<int>& f : facets) {
      std::vector<Point> verts;
      for (int i : f) verts.push_back(v[i]);
      facets_out->push_back(build_simplex(verts, d));
    }
  }
  return true;
}

}  // namespace detail

// Classification by exhaustion over candidate vertex sets: all subsets of
// W_d that contain the standard basis, checked by facet enumeration and
// deduplicated with are_isomorphic. Returns one representative per class.
inline std::vector<FanoPolytope> brute_force_classify(int d) {
  assert(d >= 1 && d <= 3);
  const WdSet wd = generate_wd(d);
  std::vector<Point> nonbasis;
  for (const Point& p : wd.pts) {
    if (coord_sum(p) < 1) nonbasis.push_back(p);
  }
  std::vector<Point> basis;
  for (int i = 0; i < d; ++i) basis.push_back(basis_vector(i));

  std::vector<FanoPolytope> classes;
  std::vector<Point> chosen = basis;

  auto consider = [&](const std::vector<Point>& pts) {
    const PointSet v = PointSet::from_points(pts);
    std::vector<Simplex> facets;
    if (!detail::verify_smooth_fano(v, d, &facets)) return;
    FanoPolytope p;
    p.dim = d;
    p.verts = v;
    p.facets = std::move(facets);
    for (const FanoPolytope& rep : classes)
      if (are_isomorphic(rep, p)) return;
    classes.push_back(std::move(p));
  };

  // A smooth Fano d-polytope has at most 3d vertices, so at most 2d beyond
  // the basis; a candidate already inside the hull of the chosen points can
  // never be a vertex of any superset.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    consider(chosen);
    if (chosen.size() >= static_cast<std::size_t>(3 * d)) return;
    for (std::size_t i = from; i < nonbasis.size(); ++i) {
      if (detail::inside_some_simplex(nonbasis[i], chosen, d)) continue;
      chosen.push_back(nonbasis[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return classes;
}

}  // namespace sfp
