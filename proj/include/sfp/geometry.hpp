#pragma once

// Reconstructing the full facet structure of conv(V) from one known facet by
// pivoting across ridges, and validating along the way that every facet is a
// unimodular simplex with all of V on or beneath it. Any violation rejects V.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <queue>
#include <vector>

#include "sfp/lattice.hpp"
#include "sfp/order.hpp"

namespace sfp {

// Sorted packed vertex keys; identifies a facet regardless of vertex order.
using FacetKey = std::array<std::uint64_t, kMaxDim>;

inline FacetKey facet_key(const Simplex& f) {
  FacetKey k{};
  for (int i = 0; i < f.dim; ++i) k[static_cast<std::size_t>(i)] = pack_key(f.vertex(i));
  std::sort(k.begin(), k.begin() + f.dim);
  return k;
}

struct FanoPolytope {
  int dim = 0;
  PointSet verts;
  std::vector<Simplex> facets;
  // neighbors[f][w] = index of the facet across the ridge of facets[f]
  // opposite its vertex w
  std::vector<std::array<int, kMaxDim>> neighbors;
};

enum class RejectReason {
  kNone,
  kApexNotFound,    // some ridge has no point on its far side
  kApexAmbiguous,   // the far-side maximum is attained twice
  kNonUnimodular,   // a pivoted vertex tuple has |det| != 1
  kBeyondFacet,     // some point lies strictly beyond a facet hyperplane
  kNotSimplicial,   // a facet hyperplane touches a point outside its d vertices
  kNotCovered,      // some point of V lies on no facet, i.e. is not a vertex
};

struct BuildOutcome {
  RejectReason reason = RejectReason::kNone;
  FanoPolytope poly;

  bool ok() const { return reason == RejectReason::kNone; }
};

enum class ApexStatus { kFound, kNotFound, kAmbiguous };

// The vertex replacing w when pivoting F across the ridge F \ {w}: the unique
// maximizer of <u_F, x> among points with <u_F^w, x> < 0.
inline ApexStatus neighbor_apex(const Simplex& f, int w, const PointSet& v, Point* apex) {
  bool found = false;
  bool tie = false;
  Coord best = 0;
  for (const Point& x : v) {
    if (pairing(f.dual(w), x) >= 0) continue;
    const Coord t = pairing(f.normal, x);
    if (!found || t > best) {
      found = true;
      tie = false;
      best = t;
      *apex = x;
    } else if (t == best) {
      tie = true;
    }
  }
  if (!found) return ApexStatus::kNotFound;
  return tie ? ApexStatus::kAmbiguous : ApexStatus::kFound;
}

// Checks one facet hyperplane against every point: at most 1 everywhere, with
// equality exactly on the facet's own vertices.
inline RejectReason validate_facet(const Simplex& f, const PointSet& v) {
  const FacetKey key = facet_key(f);
  int on = 0;
  for (const Point& x : v) {
    const Coord t = pairing(f.normal, x);
    if (t > 1) return RejectReason::kBeyondFacet;
    if (t == 1) {
      if (!std::binary_search(key.begin(), key.begin() + f.dim, pack_key(x)))
        return RejectReason::kNotSimplicial;
      ++on;
    }
  }
  if (on != f.dim) return RejectReason::kNotSimplicial;
  return RejectReason::kNone;
}

// Breadth-first facet traversal from a seed facet of conv(V). Succeeds iff V
// is the vertex set of a smooth Fano polytope having the seed as a facet.
inline BuildOutcome build_polytope(const PointSet& v, const Simplex& seed, int d) {
  BuildOutcome out;
  out.poly.dim = d;
  out.poly.verts = v;

  out.reason = validate_facet(seed, v);
  if (!out.ok()) return out;

  std::vector<std::pair<FacetKey, int>> seen{{facet_key(seed), 0}};
  out.poly.facets.push_back(seed);
  out.poly.neighbors.push_back({});

  for (std::size_t head = 0; head < out.poly.facets.size(); ++head) {
    // facets vector may grow; copy the frontier facet.
    const Simplex f = out.poly.facets[head];
    for (int w = 0; w < d; ++w) {
      Point apex;
      switch (neighbor_apex(f, w, v, &apex)) {
        case ApexStatus::kNotFound:
          out.reason = RejectReason::kApexNotFound;
          return out;
        case ApexStatus::kAmbiguous:
          out.reason = RejectReason::kApexAmbiguous;
          return out;
        case ApexStatus::kFound:
          break;
      }
      if (pairing(f.dual(w), apex) != -1) {
        out.reason = RejectReason::kNonUnimodular;
        return out;
      }
      const Simplex g = pivot_simplex(f, w, apex);
#ifndef NDEBUG
      // Cross-check the transition formula for the neighboring normal.
      {
        std::vector<Point> gv(g.vertices.begin(), g.vertices.begin() + d);
        const Simplex ref = build_simplex(gv, d);
        assert(ref.normal == g.normal);
      }
#endif
      const FacetKey gk = facet_key(g);
      const auto it = std::lower_bound(seen.begin(), seen.end(), gk,
                                       [](const auto& a, const FacetKey& k) { return a.first < k; });
      if (it != seen.end() && it->first == gk) {
        out.poly.neighbors[head][static_cast<std::size_t>(w)] = it->second;
        continue;
      }
      out.reason = validate_facet(g, v);
      if (!out.ok()) return out;
      const int gi = static_cast<int>(out.poly.facets.size());
      seen.insert(it, {gk, gi});
      out.poly.neighbors[head][static_cast<std::size_t>(w)] = gi;
      out.poly.facets.push_back(g);
      out.poly.neighbors.push_back({});
    }
  }

  // Every point must be a vertex, i.e. lie on at least one facet.
  for (const Point& x : v) {
    bool covered = false;
    for (const Simplex& f : out.poly.facets) {
      if (pairing(f.normal, x) == 1) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      out.reason = RejectReason::kNotCovered;
      return out;
    }
  }
  return out;
}

// Sum of all vertices; invariant under the facet-basis changes used for
// canonical forms.
inline Point vertex_sum(const PointSet& v) {
  Point s;
  for (const Point& x : v) s = add(s, x);
  return s;
}

// A facet F is special when the vertex sum lies in the cone spanned by V(F),
// i.e. all dual pairings with it are nonnegative.
inline bool is_special_facet(const Simplex& f, const Point& vsum) {
  for (int i = 0; i < f.dim; ++i)
    if (pairing(f.dual(i), vsum) < 0) return false;
  return true;
}

inline std::vector<const Simplex*> special_facets(const FanoPolytope& p) {
  const Point vsum = vertex_sum(p.verts);
  std::vector<const Simplex*> out;
  for (const Simplex& f : p.facets)
    if (is_special_facet(f, vsum)) out.push_back(&f);
  return out;
}

}  // namespace sfp
