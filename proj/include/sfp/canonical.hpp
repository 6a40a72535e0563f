#pragma once

// Canonical form of a smooth Fano polytope: the minimum, over all special
// facets F and all coordinate permutations, of the vertex set written in the
// vertex basis of F. Two polytopes are lattice-isomorphic exactly when their
// canonical forms coincide, and a canonical-form vertex set always contains
// the standard basis (the image of the chosen facet).

#include <algorithm>
#include <cassert>
#include <vector>

#include "sfp/geometry.hpp"
#include "sfp/lattice.hpp"
#include "sfp/order.hpp"

namespace sfp {

// Vertex coordinates of all of V(P) in the vertex basis of facet F, sorted.
inline std::vector<Point> facet_coordinates(const Simplex& f, const PointSet& v) {
  std::vector<Point> x;
  x.reserve(static_cast<std::size_t>(v.size()));
  for (const Point& p : v) x.push_back(change_basis(f, p));
  std::sort(x.begin(), x.end(), point_less);
  return x;
}

// Canonical form by direct minimization; cost grows with d! per special
// facet, so this is for testing and small dimensions.
inline PointSet canonical_form(const FanoPolytope& p) {
  const Point vsum = vertex_sum(p.verts);
  std::vector<Point> best;
  for (const Simplex& f : p.facets) {
    if (!is_special_facet(f, vsum)) continue;
    std::vector<Point> cand = min_embedding_naive(facet_coordinates(f, p.verts), p.dim);
    if (best.empty() ||
        std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(), point_less))
      best = std::move(cand);
  }
  assert(!best.empty());
  return PointSet::from_points(std::move(best));
}

// True iff V(P) equals the canonical form, i.e. no special facet yields a
// strictly smaller embedding and some special facet reproduces V(P) exactly.
// Avoids materializing the minimum.
inline bool is_canonical(const FanoPolytope& p) {
  const Point vsum = vertex_sum(p.verts);
  const std::vector<Point>& ref = p.verts.points();
  bool any_equal = false;
  for (const Simplex& f : p.facets) {
    if (!is_special_facet(f, vsum)) continue;
    switch (min_embedding_compare(facet_coordinates(f, p.verts), ref, p.dim)) {
      case Rel::kLess:
        return false;
      case Rel::kEqual:
        any_equal = true;
        break;
      case Rel::kGreater:
        break;
    }
  }
  return any_equal;
}

// Applies the linear map y_i = sum_j m[i][j] x_j to every point.
inline PointSet apply_linear_map(const SquareMatrix& m, const PointSet& v, int d) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (const Point& x : v) {
    Point y;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) y[i] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[j];
    out.push_back(y);
  }
  return PointSet::from_points(std::move(out));
}

}  // namespace sfp
