#pragma once

// The classification driver. Starting from the standard basis and the
// identity simplex, points of W_d are appended in increasing order; each
// extension must survive the facet deduction of check_subset and be minimal
// in its coordinate-permutation orbit before the search recurses. A node
// whose point set is the canonical form of a smooth Fano polytope emits it.
// Canonical forms are emitted in strictly increasing set order, one per
// isomorphism class.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "sfp/canonical.hpp"
#include "sfp/checksubset.hpp"
#include "sfp/geometry.hpp"
#include "sfp/lattice.hpp"
#include "sfp/order.hpp"
#include "sfp/wd.hpp"

namespace sfp {

struct ClassifyStats {
  std::uint64_t nodes = 0;            // search tree nodes visited
  std::uint64_t check_calls = 0;      // candidate extensions examined
  std::uint64_t check_rejects = 0;    // ... refuted by facet deduction
  std::uint64_t minimal_rejects = 0;  // ... not minimal in their orbit
  std::uint64_t emitted = 0;
  std::map<int, std::uint64_t> by_vertex_count;

  ClassifyStats& operator+=(const ClassifyStats& o) {
    nodes += o.nodes;
    check_calls += o.check_calls;
    check_rejects += o.check_rejects;
    minimal_rejects += o.minimal_rejects;
    emitted += o.emitted;
    for (const auto& [n, c] : o.by_vertex_count) by_vertex_count[n] += c;
    return *this;
  }
};

struct ClassifyOptions {
  int parallel = 1;      // worker threads; 1 = fully sequential
  bool literal = false;  // reference mode: full rescans, plain d! minimality
  std::function<void(const ClassifyStats&)> progress;  // sampled during the run
};

using PolytopeSink = std::function<void(const FanoPolytope&)>;

namespace detail {

class Searcher {
 public:
  Searcher(const WdSet& wd, const ClassifyOptions& opts, PolytopeSink sink)
      : wd_(wd), d_(wd.dim), identity_(identity_simplex(wd.dim)), opts_(opts),
        sink_(std::move(sink)) {}

  ClassifyStats stats;

  void run(const PointSet& v, const FacetChain& facets) {
    ++stats.nodes;
    if (opts_.progress && (stats.nodes & 0xffff) == 0) opts_.progress(stats);

    const BuildOutcome built = build_polytope(v, identity_, d_);
    if (built.ok() && is_canonical(built.poly)) {
      ++stats.emitted;
      ++stats.by_vertex_count[built.poly.verts.size()];
      sink_(built.poly);
    }

    const Point nu = vertex_sum(v);
    const Coord vsum = coord_sum(nu);
    const ChainContext ctx = ChainContext::make(facets);
    const std::size_t first = wd_index_after(wd_, v.max());
    for (std::size_t i = first; i < wd_.pts.size(); ++i) {
      const Point& cand = wd_.pts[i];
      if (!opts_.literal) {
        // The first two deduction tests need only the new vertex sum, so run
        // them here before any allocation. Sums never increase along W_d, so
        // once the vertex-sum test fails every remaining candidate fails it
        // too; either way the refutations are counted exactly as a run
        // without these shortcuts would count them.
        const Coord s = vsum + coord_sum(cand);
        if (s < 0) {
          const std::uint64_t rest = wd_.pts.size() - i;
          stats.check_calls += rest;
          stats.check_rejects += rest;
          break;
        }
        bool coord_bound_ok = true;
        for (int k = 0; k < d_; ++k) {
          if (nu[k] + cand[k] > 1 + s) {
            coord_bound_ok = false;
            break;
          }
        }
        if (!coord_bound_ok) {
          ++stats.check_calls;
          ++stats.check_rejects;
          continue;
        }
      }
      extend(v, facets, ctx, cand);
    }
  }

  // One candidate at a fixed tree node; used directly for root-level tasks.
  void extend(const PointSet& v, const FacetChain& facets, const ChainContext& ctx,
              const Point& cand) {
    ++stats.check_calls;
    PointSet next = v;
    next.insert(cand);
    const CheckOutcome chk = detail::check_subset_impl(
        next, facets, ctx, identity_, d_,
        opts_.literal ? CheckMode::kLiteral : CheckMode::kIncremental,
        /*only_max_new=*/!opts_.literal);
    if (!chk.ok) {
      ++stats.check_rejects;
      return;
    }
    const bool minimal = opts_.literal ? is_sd_minimal_naive(next, d_) : is_sd_minimal(next, d_);
    if (!minimal) {
      ++stats.minimal_rejects;
      return;
    }
    run(next, chk.facets);
  }

 private:
  const WdSet& wd_;
  int d_;
  Simplex identity_;
  const ClassifyOptions& opts_;
  PolytopeSink sink_;
};

inline ClassifyStats classify_sequential(const WdSet& wd, const ClassifyOptions& opts,
                                         const PolytopeSink& sink) {
  Searcher s(wd, opts, sink);
  std::vector<Point> basis;
  for (int i = 0; i < wd.dim; ++i) basis.push_back(basis_vector(i));
  s.run(PointSet::from_points(std::move(basis)), initial_chain(wd.dim));
  return s.stats;
}

// Each first appended point spawns an independent subtree. Subtrees are
// explored concurrently, buffering their canonical forms; results are merged
// in subtree order, which reproduces the sequential output exactly.
inline ClassifyStats classify_parallel(const WdSet& wd, const ClassifyOptions& opts,
                                       const PolytopeSink& sink) {
  const int d = wd.dim;
  std::vector<Point> basis;
  for (int i = 0; i < d; ++i) basis.push_back(basis_vector(i));
  const PointSet root = PointSet::from_points(std::move(basis));
  const FacetChain root_chain = initial_chain(d);
  const ChainContext root_ctx = ChainContext::make(root_chain);

  // The root node itself: conv of the basis alone is never a valid polytope,
  // but it counts as a visited node.
  ClassifyStats total;
  ++total.nodes;

  std::vector<Point> tasks;
  for (std::size_t i = wd_index_after(wd, root.max()); i < wd.pts.size(); ++i)
    tasks.push_back(wd.pts[i]);

  struct TaskResult {
    std::vector<PointSet> emitted;
    ClassifyStats stats;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next_task{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) return;
      TaskResult& res = results[t];
      Searcher s(wd, opts, [&res](const FanoPolytope& p) { res.emitted.push_back(p.verts); });
      s.extend(root, root_chain, root_ctx, tasks[t]);
      res.stats = s.stats;
    }
  };

  std::vector<std::thread> threads;
  const int nthreads = std::max(1, opts.parallel);
  threads.reserve(static_cast<std::size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
  for (std::thread& th : threads) th.join();

  for (TaskResult& res : results) {
    total += res.stats;
    for (const PointSet& v : res.emitted) {
      const BuildOutcome built = build_polytope(v, identity_simplex(d), d);
      assert(built.ok());
      sink(built.poly);
    }
  }
  return total;
}

}  // namespace detail

inline ClassifyStats classify(int d, const PolytopeSink& sink, const ClassifyOptions& opts = {}) {
  assert(d >= 1 && d <= kMaxDim);
  const WdSet wd = generate_wd(d);
  if (opts.parallel > 1 && !opts.literal) return detail::classify_parallel(wd, opts, sink);
  return detail::classify_sequential(wd, opts, sink);
}

}  // namespace sfp
