#pragma once

// The finite candidate set W_d: primitive nonzero integer points whose
// coordinate sum a lies in [-d, 1] and whose coordinates obey
//   a = 1:  0 <= x_i <= 1
//   a = 0: -1 <= x_i <= d - 1
//   a < 0:  a <= x_i <= d + a
// Every vertex of a smooth Fano d-polytope in minimal form lies in W_d, so
// the search never needs points outside this set.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "sfp/lattice.hpp"
#include "sfp/order.hpp"

namespace sfp {

struct WdSet {
  int dim = 0;
  std::vector<Point> pts;            // sorted ascending under the point order
  std::vector<std::uint64_t> keys;   // pack_key of each point, also ascending
};

namespace detail {

inline void wd_bounds(int d, Coord a, Coord* lo, Coord* hi) {
  if (a == 1) {
    *lo = 0;
    *hi = 1;
  } else if (a == 0) {
    *lo = -1;
    *hi = d - 1;
  } else {
    *lo = a;
    *hi = d + a;
  }
}

}  // namespace detail

inline WdSet generate_wd(int d) {
  assert(d >= 1 && d <= kMaxDim);
  WdSet w;
  w.dim = d;
  Point p;
  for (Coord a = -d; a <= 1; ++a) {
    Coord lo, hi;
    detail::wd_bounds(d, a, &lo, &hi);
    // Enumerate coordinate vectors with the given sum by depth-first search.
    auto rec = [&](auto&& self, int i, Coord rem) -> void {
      if (i == d - 1) {
        if (rem < lo || rem > hi) return;
        p[i] = rem;
        if (!is_zero(p) && is_primitive(p)) w.pts.push_back(p);
        return;
      }
      const Coord left = d - 1 - i;  // coordinates after this one
      for (Coord v = lo; v <= hi; ++v) {
        if (rem - v < lo * left || rem - v > hi * left) continue;
        p[i] = v;
        self(self, i + 1, rem - v);
      }
    };
    rec(rec, 0, a);
  }
  std::sort(w.pts.begin(), w.pts.end(), point_less);
  w.keys.reserve(w.pts.size());
  for (const Point& q : w.pts) w.keys.push_back(pack_key(q));
  return w;
}

// Index of the first point of W_d strictly after p, or pts.size() if none.
inline std::size_t wd_index_after(const WdSet& w, const Point& p) {
  const std::uint64_t k = pack_key(p);
  return static_cast<std::size_t>(std::upper_bound(w.keys.begin(), w.keys.end(), k) - w.keys.begin());
}

}  // namespace sfp
