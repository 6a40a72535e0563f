// End-to-end acceptance checks. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails. The
// d=7 count (criterion 3) takes hours of CPU and only runs when the
// environment variable SFP_ACCEPTANCE_EXTENDED is set to 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sfp/canonical.hpp"
#include "sfp/checksubset.hpp"
#include "sfp/io.hpp"
#include "sfp/oracle.hpp"
#include "sfp/order.hpp"
#include "sfp/sfp.hpp"
#include "sfp/wd.hpp"

using namespace sfp;

namespace {

int g_failed = 0;

void report(bool ok, const std::string& label) {
  std::printf("%s: %s\n", ok ? "PASS" : "FAIL", label.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  std::vector<FanoPolytope> polys;
  ClassifyStats stats;
  double secs = 0;
};

Run run_classify(int d, ClassifyOptions opts = {}) {
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  r.stats = classify(d, [&](const FanoPolytope& p) { r.polys.push_back(p); }, opts);
  r.secs = seconds_since(t0);
  return r;
}

std::string classify_to_text(int d, ClassifyOptions opts = {}) {
  std::ostringstream os;
  int index = 0;
  classify(d, [&](const FanoPolytope& p) { write_polytope_text(os, p, ++index); }, opts);
  return os.str();
}

// Random product of unimodular shears (and sign flips), determinant +-1.
SquareMatrix random_unimodular_matrix(std::mt19937& rng, int d) {
  SquareMatrix m{};
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> row(0, d - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < 3 * d; ++step) {
    const int i = row(rng);
    int j = row(rng);
    if (d > 1)
      while (j == i) j = row(rng);
    if (i == j) {
      for (int k = 0; k < d; ++k) m[i][k] = -m[i][k];
      continue;
    }
    const int c = coef(rng);
    for (int k = 0; k < d; ++k) m[i][k] += c * m[j][k];
  }
  return m;
}

// Rebuild a polytope from the image of p under m, seeding the hull walk with
// the image of p's first facet.
bool transform_polytope(const FanoPolytope& p, const SquareMatrix& m, FanoPolytope* out) {
  const PointSet img = apply_linear_map(m, p.verts, p.dim);
  std::vector<Point> seed_verts;
  for (int i = 0; i < p.dim; ++i) {
    Point y;
    for (int r = 0; r < p.dim; ++r)
      for (int c = 0; c < p.dim; ++c) y[r] += m[r][c] * p.facets.front().vertex(i)[c];
    seed_verts.push_back(y);
  }
  const BuildOutcome b = build_polytope(img, build_simplex(seed_verts, p.dim), p.dim);
  if (!b.ok()) return false;
  *out = b.poly;
  return true;
}

std::vector<Point> verts_as_vector(const FanoPolytope& p) {
  return std::vector<Point>(p.verts.points().begin(), p.verts.points().end());
}

void criterion_counts_small(std::map<int, Run>* runs) {
  const std::uint64_t want[5] = {0, 1, 5, 18, 124};
  bool ok = true;
  char buf[128];
  std::string detail;
  for (int d = 1; d <= 4; ++d) {
    Run r = run_classify(d);
    if (r.stats.emitted != want[d] || r.secs >= 10.0) ok = false;
    std::snprintf(buf, sizeof buf, " d=%d:%llu(%.2fs)", d,
                  static_cast<unsigned long long>(r.stats.emitted), r.secs);
    detail += buf;
    (*runs)[d] = std::move(r);
  }
  report(ok, "1 counts 1,5,18,124 for d=1..4, each under 10s --" + detail);
}

void criterion_counts_medium(Run* out) {
  *out = run_classify(5);
  const std::map<int, std::uint64_t> want{{6, 1},    {7, 15},  {8, 91},  {9, 268}, {10, 312},
                                          {11, 137}, {12, 35}, {13, 5},  {14, 2}};
  char buf[96];
  std::snprintf(buf, sizeof buf, "2 d=5 count 866 with exact vertex histogram (%.1fs)", out->secs);
  report(out->stats.emitted == 866 && out->stats.by_vertex_count == want, buf);
}

void criterion_counts_large() {
  ClassifyStats s6;
  const auto t0 = std::chrono::steady_clock::now();
  s6 = classify(6, [](const FanoPolytope&) {});
  const double t6 = seconds_since(t0);
  const char* ext = std::getenv("SFP_ACCEPTANCE_EXTENDED");
  char buf[160];
  if (ext != nullptr && std::strcmp(ext, "1") == 0) {
    const auto t1 = std::chrono::steady_clock::now();
    const ClassifyStats s7 = classify(7, [](const FanoPolytope&) {});
    const double t7 = seconds_since(t1);
    std::snprintf(buf, sizeof buf, "3 d=6 gives 7622 (%.0fs), d=7 gives 72256 (%.0fs, advisory)",
                  t6, t7);
    report(s6.emitted == 7622 && s7.emitted == 72256, buf);
  } else {
    std::snprintf(buf, sizeof buf,
                  "3 d=6 gives 7622 (%.0fs); d=7 skipped, set SFP_ACCEPTANCE_EXTENDED=1", t6);
    report(s6.emitted == 7622, buf);
  }
}

void criterion_oracle(const std::map<int, Run>& runs) {
  bool ok = true;
  for (int d = 1; d <= 3; ++d) {
    const std::vector<FanoPolytope> brute = brute_force_classify(d);
    const std::vector<FanoPolytope>& fast = runs.at(d).polys;
    if (brute.size() != fast.size()) ok = false;
    // each search output matches exactly one brute-force class
    for (const FanoPolytope& p : fast) {
      int hits = 0;
      for (const FanoPolytope& q : brute)
        if (are_isomorphic(p, q)) ++hits;
      if (hits != 1) ok = false;
    }
  }
  report(ok, "4 brute-force classification agrees up to isomorphism for d<=3");
}

void criterion_canonical(const std::map<int, Run>& runs) {
  bool ok = true;
  std::mt19937 rng(2026);
  for (int d = 1; d <= 4; ++d) {
    const std::vector<FanoPolytope>& polys = runs.at(d).polys;
    const std::size_t stride = d == 4 ? 10 : 1;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const FanoPolytope& p = polys[i];
      const std::vector<Point> want = verts_as_vector(p);
      if (ord_by_definition(p) != want) ok = false;
      if (i % stride != 0) continue;
      for (int t = 0; t < 100; ++t) {
        const SquareMatrix m = random_unimodular_matrix(rng, d);
        FanoPolytope q;
        if (!transform_polytope(p, m, &q) || ord_by_definition(q) != want) {
          ok = false;
          break;
        }
      }
    }
  }
  report(ok, "5 ord equals the vertex set, also under random unimodular maps, d<=4");
}

void criterion_pairwise(const Run& r4) {
  bool ok = r4.polys.size() == 124;
  for (std::size_t i = 0; i < r4.polys.size() && ok; ++i)
    for (std::size_t j = i + 1; j < r4.polys.size() && ok; ++j)
      if (are_isomorphic(r4.polys[i], r4.polys[j])) ok = false;
  report(ok, "6 all 7626 pairs of d=4 outputs are non-isomorphic");
}

bool lemma_suite(const FanoPolytope& p, const WdSet& wd) {
  const int d = p.dim;
  for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
    const Simplex& f = p.facets[fi];
    for (int w = 0; w < d; ++w) {
      const Simplex& g = p.facets[static_cast<std::size_t>(p.neighbors[fi][w])];
      // v' = the vertex of the neighbor outside the shared ridge
      Point vp;
      bool found = false;
      for (int i = 0; i < d; ++i) {
        bool in_ridge = false;
        for (int k = 0; k < d; ++k)
          if (k != w && g.vertex(i) == f.vertex(k)) in_ridge = true;
        if (!in_ridge) {
          if (found) return false;
          vp = g.vertex(i);
          found = true;
        }
      }
      if (!found) return false;
      // Lemma 1 (1), (2)
      if (pairing(f.dual(w), vp) != -1) return false;
      if (pairing(f.normal, vp) != pairing(g.normal, f.vertex(w))) return false;
      const Coord tv = pairing(f.normal, vp);
      for (const Point& x : p.verts) {
        // Lemma 1 (3)
        const Coord lhs = pairing(g.normal, x);
        const Coord rhs = pairing(f.normal, x) + pairing(f.dual(w), x) * (tv - 1);
        if (lhs != rhs) return false;
        // Lemma 1 (4)
        const Coord c = pairing(f.dual(w), x);
        if ((c < 0) != (lhs > pairing(f.normal, x))) return false;
        if ((c > 0) != (lhs < pairing(f.normal, x))) return false;
        if ((c == 0) != (lhs == pairing(f.normal, x))) return false;
        // Lemma 1 (5)
        if (c < 0 && !(x == vp) && !(tv > pairing(f.normal, x))) return false;
      }
    }
    // Lemma 2 lower bounds
    for (const Point& x : p.verts) {
      const Coord t = pairing(f.normal, x);
      if (t > 1) return false;
      const Coord lb = t == 1 ? 0 : (t == 0 ? -1 : t);
      for (int w = 0; w < d; ++w)
        if (pairing(f.dual(w), x) < lb) return false;
    }
  }
  // Corollary bounds on special facets
  for (const Simplex* f : special_facets(p)) {
    for (const Point& x : p.verts) {
      const Coord t = pairing(f->normal, x);
      if (t < -d || t > 1) return false;
      const Coord ub = t == 1 ? 1 : (t == 0 ? d - 1 : d + t);
      for (int w = 0; w < d; ++w)
        if (pairing(f->dual(w), x) > ub) return false;
    }
  }
  // containment in the candidate point set
  for (const Point& x : p.verts) {
    bool in_wd = false;
    for (const Point& c : wd.pts)
      if (c == x) in_wd = true;
    if (!in_wd) return false;
  }
  return true;
}

void criterion_lemmas(const std::map<int, Run>& runs) {
  bool ok = true;
  for (int d = 1; d <= 4; ++d) {
    const WdSet wd = generate_wd(d);
    for (const FanoPolytope& p : runs.at(d).polys)
      if (!lemma_suite(p, wd)) ok = false;
  }
  report(ok, "7 facet lemmas, special-facet bounds and candidate containment hold, d<=4");
}

void criterion_pruning(const std::map<int, Run>& runs) {
  bool ok = true;
  for (int d = 1; d <= 3; ++d) {
    for (const FanoPolytope& p : runs.at(d).polys) {
      std::set<FacetKey> true_facets;
      for (const Simplex& f : p.facets) true_facets.insert(facet_key(f));
      // canonical vertex sets list the basis first, so every prefix of
      // length >= d contains it
      for (int n = d; n <= p.verts.size(); ++n) {
        std::vector<Point> prefix;
        for (int i = 0; i < n; ++i) prefix.push_back(p.verts[i]);
        const CheckOutcome out = check_subset(PointSet::from_points(prefix), initial_chain(d), d);
        if (!out.ok) {
          ok = false;
          continue;
        }
        for (const Simplex* f : out.facets.in_order())
          if (true_facets.find(facet_key(*f)) == true_facets.end()) ok = false;
      }
    }
  }
  report(ok, "8 facet deduction accepts every classified prefix and returns true facets, d<=3");
}

void criterion_worked_example() {
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(basis_vector(i));
  pts.push_back(make_point({-1, -1, 0, 1, 1}));
  pts.push_back(make_point({0, 1, -1, -1, 0}));
  pts.push_back(make_point({0, 0, 0, -1, -1}));

  bool ok = true;
  FacetChain chain = initial_chain(5);
  for (int n = 6; n <= 8 && ok; ++n) {
    const CheckOutcome out =
        check_subset(PointSet::from_points(std::vector<Point>(pts.begin(), pts.begin() + n)),
                     chain, 5);
    if (!out.ok) ok = false;
    else chain = out.facets;
  }
  std::set<std::set<int>> got;
  if (ok) {
    for (const Simplex* f : chain.in_order()) {
      std::set<int> idx;
      for (int i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < pts.size(); ++k)
          if (f->vertex(i) == pts[k]) idx.insert(static_cast<int>(k) + 1);
      got.insert(idx);
    }
    const std::set<std::set<int>> want{
        {1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {1, 3, 4, 5, 6}, {1, 2, 4, 5, 7}, {1, 2, 3, 5, 7},
        {1, 2, 3, 4, 8}, {2, 4, 5, 6, 7}, {1, 4, 5, 6, 7}, {1, 2, 3, 7, 8}, {1, 3, 5, 7, 8}};
    for (const std::set<int>& w : want)
      if (got.find(w) == got.end()) ok = false;
  }
  report(ok, "9 the d=5 worked instance deduces all ten facets without rejection");
}

void criterion_determinism() {
  const std::string a = classify_to_text(5);
  const std::string b = classify_to_text(5);
  ClassifyOptions par;
  par.parallel = 4;
  const std::string c = classify_to_text(5, par);
  report(!a.empty() && a == b && a == c,
         "10 repeated and parallel d=5 runs are byte-identical");
}

void criterion_ordering(const std::map<int, Run>& runs, const Run& r5) {
  bool ok = true;
  auto check_run = [&](const std::vector<FanoPolytope>& polys) {
    for (std::size_t i = 1; i < polys.size(); ++i)
      if (cmp_point_sets(polys[i - 1].verts, polys[i].verts) >= 0) ok = false;
  };
  for (int d = 1; d <= 4; ++d) check_run(runs.at(d).polys);
  check_run(r5.polys);
  report(ok, "11 emitted vertex sets strictly increase in the point-set order, d<=5");
}

}  // namespace

int main() {
  std::map<int, Run> runs;  // d=1..4, reused across criteria
  criterion_counts_small(&runs);
  Run r5;
  criterion_counts_medium(&r5);
  criterion_counts_large();
  criterion_oracle(runs);
  criterion_canonical(runs);
  criterion_pairwise(runs.at(4));
  criterion_lemmas(runs);
  criterion_pruning(runs);
  criterion_worked_example();
  criterion_determinism();
  criterion_ordering(runs, r5);
  if (g_failed > 0) {
    std::printf("%d criteria failed\n", g_failed);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
