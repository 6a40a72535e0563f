#pragma once

// Partial-information facet deduction: given a vertex subset V (containing
// the standard basis) and a set of already-deduced facet simplices, either
// refute V as a presubset of any valid vertex set, or extend the facet set by
// forced neighbors. The deduction rules, in order:
//
//   1. The vertex sum must pair nonnegatively with the all-ones functional
//      and its coordinates are bounded by 1 + that pairing.
//   2. If exactly the one point max(V) lies on the negative side of the i-th
//      coordinate hyperplane, conv({max V} u basis \ {e_i}) is a facet; its
//      vertex tuple must be unimodular.
//   3. No point may lie strictly beyond a deduced facet (<u_F, v> <= 1).
//   4. Dual pairings obey the lower bounds
//         <u_F^w, v> >= 0            when <u_F, v> = 1,
//         <u_F^w, v> >= -1           when <u_F, v> = 0,
//         <u_F^w, v> >= <u_F, v>     when <u_F, v> < 0.
//   5. <u_F, v> = 0 and <u_F^w, v> = -1 force the pivot of F at w towards v
//      to be a facet too; close under this rule.
//
// Facet sets are persistent cons-lists so sibling branches of the search
// share structure.

#include <algorithm>
#include <cassert>
#include <memory>
#include <vector>

#include "sfp/geometry.hpp"
#include "sfp/lattice.hpp"
#include "sfp/order.hpp"

namespace sfp {

class FacetChain {
 public:
  struct Node {
    Simplex facet;
    FacetKey key;
    std::shared_ptr<const Node> next;
  };

  FacetChain() = default;

  FacetChain push(const Simplex& f) const {
    FacetChain c;
    c.head_ = std::make_shared<Node>(Node{f, facet_key(f), head_});
    c.size_ = size_ + 1;
    return c;
  }

  int size() const { return size_; }
  const std::shared_ptr<const Node>& head() const { return head_; }

  // Oldest first, so iteration order matches insertion order.
  std::vector<const Simplex*> in_order() const {
    std::vector<const Simplex*> v(static_cast<std::size_t>(size_));
    std::size_t i = v.size();
    for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) v[--i] = &n->facet;
    return v;
  }

  bool contains(const FacetKey& k) const {
    for (const Node* n = head_.get(); n != nullptr; n = n->next.get())
      if (n->key == k) return true;
    return false;
  }

 private:
  std::shared_ptr<const Node> head_;
  int size_ = 0;
};

inline FacetChain initial_chain(int d) { return FacetChain().push(identity_simplex(d)); }

enum class CheckMode {
  kIncremental,  // work-queue closure over newly deduced facets
  kLiteral,      // full rescan of every (facet, point) pair each phase
};

struct CheckOutcome {
  bool ok = false;
  FacetChain facets;
};

namespace detail {

// Lower bounds of rule 4 above. Returns false on violation; *pivot_mask gets
// one bit per vertex index forcing a pivot under rule 5.
inline bool facet_point_ok(const Simplex& f, const Point& v, std::uint32_t* pivot_mask) {
  *pivot_mask = 0;
  const Coord t = pairing(f.normal, v);
  if (t > 1) return false;
  const Coord lb = t == 1 ? 0 : (t == 0 ? -1 : t);
  for (int w = 0; w < f.dim; ++w) {
    const Coord c = pairing(f.dual(w), v);
    if (c < lb) return false;
    if (t == 0 && c == -1) *pivot_mask |= 1u << w;
  }
  return true;
}

// Inherited facets in a random-access, sorted-key form; shared by every
// candidate extension of one search node.
struct ChainContext {
  std::vector<FacetKey> keys;        // sorted
  std::vector<const Simplex*> list;  // oldest first

  static ChainContext make(const FacetChain& c) {
    ChainContext ctx;
    ctx.list = c.in_order();
    ctx.keys.reserve(ctx.list.size());
    for (const FacetChain::Node* n = c.head().get(); n != nullptr; n = n->next.get())
      ctx.keys.push_back(n->key);
    std::sort(ctx.keys.begin(), ctx.keys.end());
    return ctx;
  }
};

// Per-call scratch: deduced facets are buffered here and only spliced onto
// the persistent chain when the whole deduction succeeds.
struct DeduceScratch {
  std::vector<FacetKey> keys;  // inherited + new, sorted
  std::vector<Simplex> added;

  bool insert(const Simplex& f) {
    const FacetKey k = facet_key(f);
    const auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it != keys.end() && *it == k) return false;
    keys.insert(it, k);
    added.push_back(f);
    return true;
  }
};

// Rule-2 simplices forced by the current maximum of V. Replacing e_i by a
// point whose i-th coordinate is c has vertex determinant +-c, so the forced
// simplex is unimodular exactly when that coordinate is -1, in which case it
// is a plain pivot of the identity simplex. Returns false when a forced
// simplex is not unimodular.
inline bool add_corner_simplices(const PointSet& v, const Simplex& identity, int d,
                                 DeduceScratch* ws) {
  const Point& top = v.max();
  for (int i = 0; i < d; ++i) {
    if (top[i] >= 0) continue;
    bool only_top = true;
    for (const Point& x : v) {
      if (x[i] < 0 && !(x == top)) {
        only_top = false;
        break;
      }
    }
    if (!only_top) continue;
    if (top[i] != -1) return false;
    ws->insert(pivot_simplex(identity, i, top));
  }
  return true;
}

// The deduction procedure described at the top of this header, with the
// inherited chain pre-expanded so sibling candidates can share that work.
// When only_max_new is set, the caller guarantees the inherited chain is the
// result of a successful deduction on V minus its maximum, so pairs of an
// inherited facet with an old point are already known good and are skipped.
inline CheckOutcome check_subset_impl(const PointSet& v, const FacetChain& inherited,
                                      const ChainContext& ctx, const Simplex& identity, int d,
                                      CheckMode mode, bool only_max_new = false) {
  CheckOutcome out;
  const Point nu = vertex_sum(v);
  const Coord nu_sum = coord_sum(nu);
  if (nu_sum < 0) return out;
  for (int i = 0; i < d; ++i)
    if (nu[i] > 1 + nu_sum) return out;

  // Reused across calls to avoid reallocation; never live across the
  // recursion, which only resumes after this function has returned.
  static thread_local DeduceScratch ws;
  ws.keys.assign(ctx.keys.begin(), ctx.keys.end());
  ws.added.clear();
  if (!add_corner_simplices(v, identity, d, &ws)) return out;

  if (mode == CheckMode::kLiteral) {
    // Phase loop: rescan all pairs, restart whenever a facet is added.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t idx = 0; idx < ctx.list.size() + ws.added.size() && !changed; ++idx) {
        // by value: inserts may reallocate the scratch vector
        const Simplex f =
            idx < ctx.list.size() ? *ctx.list[idx] : ws.added[idx - ctx.list.size()];
        for (const Point& x : v) {
          std::uint32_t mask;
          if (!facet_point_ok(f, x, &mask)) return out;
          for (int w = 0; w < d; ++w)
            if ((mask & (1u << w)) && ws.insert(pivot_simplex(f, w, x))) changed = true;
          if (changed) break;
        }
      }
    }
  } else {
    // Check inherited facets against the points not covered by the caller's
    // guarantee, then every newly deduced facet against all points; the
    // scratch vector of added facets doubles as the closure work queue.
    const Point& top = v.max();
    for (const Simplex* f : ctx.list) {
      if (only_max_new) {
        std::uint32_t mask;
        if (!facet_point_ok(*f, top, &mask)) return out;
        for (int w = 0; w < d; ++w)
          if (mask & (1u << w)) ws.insert(pivot_simplex(*f, w, top));
      } else {
        for (const Point& x : v) {
          std::uint32_t mask;
          if (!facet_point_ok(*f, x, &mask)) return out;
          for (int w = 0; w < d; ++w)
            if (mask & (1u << w)) ws.insert(pivot_simplex(*f, w, x));
        }
      }
    }
    for (std::size_t head = 0; head < ws.added.size(); ++head) {
      const Simplex f = ws.added[head];  // by value: inserts may reallocate
      for (const Point& x : v) {
        std::uint32_t mask;
        if (!facet_point_ok(f, x, &mask)) return out;
        for (int w = 0; w < d; ++w)
          if (mask & (1u << w)) ws.insert(pivot_simplex(f, w, x));
      }
    }
  }

  out.ok = true;
  out.facets = inherited;
  for (const Simplex& f : ws.added) out.facets = out.facets.push(f);
  return out;
}

}  // namespace detail

// The deduction procedure described at the top of this header. The two modes
// compute the same closure; the incremental mode processes newly deduced
// facets with a work queue while the literal mode restarts a full rescan
// after every addition.
inline CheckOutcome check_subset(const PointSet& v, const FacetChain& inherited, int d,
                                 CheckMode mode = CheckMode::kIncremental) {
  return detail::check_subset_impl(v, inherited, detail::ChainContext::make(inherited),
                                   identity_simplex(d), d, mode);
}

}  // namespace sfp
