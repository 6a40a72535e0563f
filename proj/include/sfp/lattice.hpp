#pragma once

// Exact integer linear algebra over the lattice Z^d: points, covectors,
// unimodular simplices with cached dual bases, and the single-vertex pivot
// update that drives facet traversal.

#include <array>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfp {

// Hard cap on the run dimension. Points carry a fixed-size coordinate array
// padded with zeros past the run dimension, so comparisons and dot products
// never need to know d.
inline constexpr int kMaxDim = 9;

using Coord = std::int64_t;
using CoordArray = std::array<Coord, kMaxDim>;

struct Point {
  CoordArray c{};

  Coord& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  Coord operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Point&, const Point&) = default;
};

// Integer covector acting on points by dot product.
struct Functional {
  CoordArray c{};

  Coord& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  Coord operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Functional&, const Functional&) = default;
};

inline Coord pairing(const Functional& f, const Point& x) {
  Coord s = 0;
  for (int i = 0; i < kMaxDim; ++i) s += f.c[static_cast<std::size_t>(i)] * x.c[static_cast<std::size_t>(i)];
  return s;
}

inline Coord coord_sum(const Point& x) {
  Coord s = 0;
  for (Coord v : x.c) s += v;
  return s;
}

inline Point make_point(std::initializer_list<Coord> cs) {
  assert(static_cast<int>(cs.size()) <= kMaxDim);
  Point p;
  int i = 0;
  for (Coord v : cs) p[i++] = v;
  return p;
}

inline Point basis_vector(int i) {
  Point p;
  p[i] = 1;
  return p;
}

inline bool is_zero(const Point& p) {
  for (Coord v : p.c)
    if (v != 0) return false;
  return true;
}

// True iff the gcd of the coordinates is 1. The zero vector is not primitive.
inline bool is_primitive(const Point& p) {
  Coord g = 0;
  for (Coord v : p.c) g = std::gcd(g, v);
  return g == 1;
}

inline Point add(const Point& a, const Point& b) {
  Point r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  Point r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point negate(const Point& a) {
  Point r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = -a[i];
  return r;
}

class UnimodularityError : public std::runtime_error {
 public:
  explicit UnimodularityError(const std::string& what) : std::runtime_error(what) {}
};

using SquareMatrix = std::array<CoordArray, kMaxDim>;

// Fraction-free Bareiss determinant. Exact in 64-bit for the coordinate
// ranges arising here (entries bounded by the run dimension).
inline Coord determinant(SquareMatrix m, int n) {
  if (n == 0) return 1;  // empty product; makes 1x1 cofactors work
  Coord sign = 1;
  Coord prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(p)]);
      sign = -sign;
    }
    const auto& row_k = m[static_cast<std::size_t>(k)];
    const Coord pivot = row_k[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      auto& row_i = m[static_cast<std::size_t>(i)];
      const Coord head = row_i[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < n; ++j) {
        row_i[static_cast<std::size_t>(j)] =
            (row_i[static_cast<std::size_t>(j)] * pivot - head * row_k[static_cast<std::size_t>(j)]) / prev;
      }
      row_i[static_cast<std::size_t>(k)] = 0;
    }
    prev = pivot;
  }
  return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

namespace detail {

inline Coord minor_determinant(const SquareMatrix& m, int n, int drop_row, int drop_col) {
  SquareMatrix sub{};
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop_row) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ++c;
    }
    ++r;
  }
  return determinant(sub, n - 1);
}

}  // namespace detail

// An ordered d-tuple of lattice points whose matrix is unimodular, together
// with the facet normal u_F (value 1 on every vertex) and the dual basis
// covectors u_F^w aligned with the vertex order.
struct Simplex {
  int dim = 0;
  std::array<Point, kMaxDim> vertices{};
  Functional normal{};
  std::array<Functional, kMaxDim> duals{};

  const Point& vertex(int i) const { return vertices[static_cast<std::size_t>(i)]; }
  const Functional& dual(int i) const { return duals[static_cast<std::size_t>(i)]; }
};

// Builds a Simplex from d points, solving the integer system exactly.
// Throws UnimodularityError when the vertex matrix has |det| != 1.
inline Simplex build_simplex(std::span<const Point> verts, int d) {
  assert(static_cast<int>(verts.size()) == d);
  SquareMatrix m{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = verts[static_cast<std::size_t>(i)][j];
  const Coord det = determinant(m, d);
  if (det != 1 && det != -1) {
    throw UnimodularityError("vertex matrix determinant is " + std::to_string(det));
  }
  Simplex s;
  s.dim = d;
  for (int i = 0; i < d; ++i) s.vertices[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(i)];
  // inverse = adjugate / det; det is +-1 so the inverse is integral.
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Coord cof = ((i + k) % 2 == 0 ? 1 : -1) * detail::minor_determinant(m, d, i, k);
      // inv[k][i] = cofactor(i,k) / det; dual i is column i of the inverse.
      s.duals[static_cast<std::size_t>(i)][k] = det * cof;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < kMaxDim; ++k) s.normal[k] += s.duals[static_cast<std::size_t>(i)][k];
#ifndef NDEBUG
  for (int i = 0; i < d; ++i) {
    assert(pairing(s.normal, s.vertex(i)) == 1);
    for (int j = 0; j < d; ++j) assert(pairing(s.dual(i), s.vertex(j)) == (i == j ? 1 : 0));
  }
#endif
  return s;
}

inline Simplex build_simplex(const std::vector<Point>& verts, int d) {
  return build_simplex(std::span<const Point>(verts.data(), verts.size()), d);
}

// Identity simplex conv{e_1, ..., e_d}; normal and duals are immediate.
inline Simplex identity_simplex(int d) {
  Simplex s;
  s.dim = d;
  for (int i = 0; i < d; ++i) {
    s.vertices[static_cast<std::size_t>(i)] = basis_vector(i);
    s.duals[static_cast<std::size_t>(i)][i] = 1;
    s.normal[i] = 1;
  }
  return s;
}

// Coordinates of x in the vertex basis: component i is <u_F^i, x>.
inline Point change_basis(const Simplex& basis, const Point& x) {
  Point r;
  for (int i = 0; i < basis.dim; ++i) r[i] = pairing(basis.dual(i), x);
  return r;
}

// Replaces vertex w by apex, updating normal and dual basis in O(d^2).
// Requires <u_F^w, apex> == -1, which is exactly the unimodularity condition
// for the swapped simplex.
inline Simplex pivot_simplex(const Simplex& f, int w, const Point& apex) {
  assert(pairing(f.dual(w), apex) == -1);
  const Coord t = pairing(f.normal, apex);
  Simplex g = f;
  g.vertices[static_cast<std::size_t>(w)] = apex;
  for (int k = 0; k < kMaxDim; ++k)
    g.normal[k] = f.normal[k] + (t - 1) * f.dual(w)[k];
  for (int j = 0; j < f.dim; ++j) {
    if (j == w) {
      for (int k = 0; k < kMaxDim; ++k) g.duals[static_cast<std::size_t>(j)][k] = -f.dual(w)[k];
    } else {
      const Coord cj = pairing(f.dual(j), apex);
      for (int k = 0; k < kMaxDim; ++k)
        g.duals[static_cast<std::size_t>(j)][k] = f.dual(j)[k] + cj * f.dual(w)[k];
    }
  }
#ifndef NDEBUG
  for (int i = 0; i < g.dim; ++i) {
    assert(pairing(g.normal, g.vertex(i)) == 1);
    for (int j = 0; j < g.dim; ++j) assert(pairing(g.dual(i), g.vertex(j)) == (i == j ? 1 : 0));
  }
#endif
  return g;
}

}  // namespace sfp
