// Command-line front end for the smooth Fano polytope classifier.
//
// Exit codes: 0 success, 1 verification or consistency failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sfp/io.hpp"
#include "sfp/oracle.hpp"
#include "sfp/sfp.hpp"

namespace {

int run_classify(int dim, const std::string& out_path, const std::string& format, int parallel,
                 bool literal, bool stats, bool progress) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 1;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;

  sfp::ClassifyOptions opts;
  opts.parallel = parallel;
  opts.literal = literal;
  std::mutex progress_mutex;
  if (progress) {
    opts.progress = [&progress_mutex](const sfp::ClassifyStats& s) {
      const std::lock_guard<std::mutex> lock(progress_mutex);
      std::cerr << "nodes " << s.nodes << ", candidates " << s.check_calls << ", found "
                << s.emitted << '\n';
    };
  }

  std::uint64_t index = 0;
  const bool json = format == "structured";
  const sfp::ClassifyStats st = sfp::classify(
      dim,
      [&](const sfp::FanoPolytope& p) {
        ++index;
        if (json)
          sfp::write_polytope_json(os, p, index);
        else
          sfp::write_polytope_text(os, p, index);
      },
      opts);

  if (stats) {
    std::cerr << "dim " << dim << ": " << st.emitted << " classes, " << st.nodes << " nodes, "
              << st.check_calls << " candidates (" << st.check_rejects << " refuted, "
              << st.minimal_rejects << " non-minimal)\n";
    std::cerr << "classes by vertex count:";
    for (const auto& [n, c] : st.by_vertex_count) std::cerr << ' ' << n << ':' << c;
    std::cerr << '\n';
  }
  return 0;
}

int run_table(int max_dim, int parallel) {
  std::vector<std::map<int, std::uint64_t>> by_dim;
  for (int d = 1; d <= max_dim; ++d) {
    std::map<int, std::uint64_t> counts;
    sfp::ClassifyOptions opts;
    opts.parallel = parallel;
    sfp::classify(d, [&](const sfp::FanoPolytope& p) { ++counts[p.verts.size()]; }, opts);
    by_dim.push_back(std::move(counts));
  }
  sfp::write_table(std::cout, by_dim);
  return 0;
}

int run_wd(int dim, bool count_only) {
  const sfp::WdSet wd = sfp::generate_wd(dim);
  if (count_only) {
    std::cout << wd.pts.size() << '\n';
    return 0;
  }
  for (const sfp::Point& p : wd.pts) {
    for (int i = 0; i < dim; ++i) {
      if (i) std::cout << ' ';
      std::cout << p[i];
    }
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const std::string& in_path) {
  std::ifstream file;
  if (in_path != "-") {
    file.open(in_path);
    if (!file) {
      std::cerr << "cannot open " << in_path << '\n';
      return 1;
    }
  }
  std::istream& in = in_path == "-" ? std::cin : file;
  std::vector<sfp::PolytopeRecord> recs;
  try {
    recs = sfp::read_polytopes_text(in);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  int bad = 0;
  const sfp::PointSet* prev = nullptr;
  sfp::PointSet prev_store;
  for (const sfp::PolytopeRecord& rec : recs) {
    auto complain = [&](const std::string& what) {
      std::cerr << "record " << rec.index << ": " << what << '\n';
      ++bad;
    };
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < rec.vertices.size(); ++i)
      if (sfp::cmp_points(rec.vertices[i], rec.vertices[i + 1]) >= 0) sorted = false;
    if (!sorted) {
      complain("vertices not strictly sorted");
      continue;
    }
    const sfp::PointSet v = sfp::PointSet::from_points(rec.vertices);
    sfp::BuildOutcome built;
    try {
      built = sfp::build_polytope(v, sfp::identity_simplex(rec.dim), rec.dim);
    } catch (const sfp::UnimodularityError&) {
      complain("vertex set contains no unimodular basis simplex");
      continue;
    }
    if (!built.ok()) {
      complain("not the vertex set of a smooth Fano polytope");
      continue;
    }
    if (!sfp::is_canonical(built.poly)) {
      complain("not in canonical form");
      continue;
    }
    if (prev != nullptr && sfp::cmp_point_sets(*prev, v) >= 0) {
      complain("not strictly after the previous record");
      continue;
    }
    prev_store = v;
    prev = &prev_store;
  }
  std::cerr << recs.size() << " records, " << bad << " invalid\n";
  return bad == 0 ? 0 : 1;
}

int run_oracle(int dim) {
  std::vector<sfp::FanoPolytope> classes = sfp::brute_force_classify(dim);
  // Output in canonical form and canonical order, then cross-check against
  // the search-based classifier.
  std::vector<sfp::PointSet> canon;
  canon.reserve(classes.size());
  for (const sfp::FanoPolytope& p : classes)
    canon.push_back(sfp::PointSet::from_points(sfp::ord_by_definition(p)));
  std::sort(canon.begin(), canon.end(),
            [](const sfp::PointSet& a, const sfp::PointSet& b) { return sfp::cmp_point_sets(a, b) < 0; });
  std::uint64_t index = 0;
  for (const sfp::PointSet& v : canon) {
    const sfp::BuildOutcome built = sfp::build_polytope(v, sfp::identity_simplex(dim), dim);
    if (!built.ok()) {
      std::cerr << "internal error: canonical form failed to rebuild\n";
      return 1;
    }
    sfp::write_polytope_text(std::cout, built.poly, ++index);
  }

  std::vector<sfp::PointSet> searched;
  sfp::classify(dim, [&](const sfp::FanoPolytope& p) { searched.push_back(p.verts); });
  if (searched != canon) {
    std::cerr << "mismatch: brute force found " << canon.size() << " classes, search found "
              << searched.size() << '\n';
    return 1;
  }
  std::cerr << canon.size() << " classes, search agrees\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of smooth Fano d-polytopes up to lattice isomorphism"};
  app.require_subcommand(1);

  int dim = 0;
  int max_dim = 0;
  int parallel = 1;
  bool literal = false;
  bool stats = false;
  bool progress = false;
  bool count_only = false;
  std::string out_path;
  std::string in_path;
  std::string format = "text";

  CLI::App* classify = app.add_subcommand("classify", "Enumerate all classes in one dimension");
  classify->add_option("--dim", dim, "dimension (1..9)")->required()->check(CLI::Range(1, sfp::kMaxDim));
  classify->add_option("--out", out_path, "output file (default: stdout)");
  classify->add_option("--format", format, "record format")
      ->check(CLI::IsMember({"text", "structured"}));
  classify->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 256));
  classify->add_flag("--literal", literal, "reference mode: no incremental shortcuts");
  classify->add_flag("--stats", stats, "print search statistics to stderr");
  classify->add_flag("--progress", progress, "print progress to stderr");

  CLI::App* table = app.add_subcommand("table", "Classes by vertex count for dimensions 1..max");
  table->add_option("--max-dim", max_dim, "largest dimension")->required()->check(CLI::Range(1, sfp::kMaxDim));
  table->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1, 256));

  CLI::App* wd = app.add_subcommand("wd", "Print the candidate vertex set W_d");
  wd->add_option("--dim", dim, "dimension (1..9)")->required()->check(CLI::Range(1, sfp::kMaxDim));
  wd->add_flag("--count", count_only, "print only the cardinality");

  CLI::App* verify = app.add_subcommand("verify", "Validate a classification file");
  verify->add_option("--in", in_path, "text-format classification file, - for stdin")
      ->default_val("-");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force classification (d <= 3)");
  oracle->add_option("--dim", dim, "dimension (1..3)")->required()->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (classify->parsed()) return run_classify(dim, out_path, format, parallel, literal, stats, progress);
  if (table->parsed()) return run_table(max_dim, parallel);
  if (wd->parsed()) return run_wd(dim, count_only);
  if (verify->parsed()) return run_verify(in_path);
  if (oracle->parsed()) return run_oracle(dim);
  return 2;
}
