#include <map>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "sfp/io.hpp"
#include "sfp/sfp.hpp"

using namespace sfp;

namespace {

FanoPolytope triangle() {
  const BuildOutcome b = build_polytope(
      PointSet::from_points({make_point({1, 0}), make_point({0, 1}), make_point({-1, -1})}),
      identity_simplex(2), 2);
  REQUIRE(b.ok());
  return b.poly;
}

}  // namespace

TEST_CASE("text record of the triangle") {
  std::ostringstream os;
  write_polytope_text(os, triangle(), 1);
  CHECK(os.str() == "# 1\n2 3\n0 1\n1 0\n-1 -1\n");
}

TEST_CASE("structured record of the triangle") {
  std::ostringstream os;
  write_polytope_json(os, triangle(), 7);
  CHECK(os.str() == "{\"index\":7,\"dim\":2,\"vertices\":[[0,1],[1,0],[-1,-1]]}\n");
}

TEST_CASE("text round trip over a whole classification") {
  std::ostringstream os;
  std::uint64_t index = 0;
  std::vector<PointSet> emitted;
  classify(3, [&](const FanoPolytope& p) {
    write_polytope_text(os, p, ++index);
    emitted.push_back(p.verts);
  });
  std::istringstream is(os.str());
  const std::vector<PolytopeRecord> recs = read_polytopes_text(is);
  REQUIRE(recs.size() == emitted.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].index == i + 1);
    CHECK(recs[i].dim == 3);
    CHECK(recs[i].vertices == emitted[i].points());  // already in canonical order
  }
}

TEST_CASE("malformed input is rejected") {
  auto parse = [](const std::string& s) {
    std::istringstream is(s);
    return read_polytopes_text(is);
  };
  CHECK_THROWS(parse("2 3\n0 1\n1 0\n-1 -1\n"));        // missing index line
  CHECK_THROWS(parse("# 1\n2 3\n0 1\n1 0\n"));          // truncated
  CHECK_THROWS(parse("# 1\n2 2\n0 1\n1 0 3\n"));        // extra coordinate
  CHECK_THROWS(parse("# 1\n0 3\n"));                    // bad dimension
  CHECK(parse("").empty());
}

TEST_CASE("summary table layout and totals") {
  std::vector<std::map<int, std::uint64_t>> by_dim;
  for (int d = 1; d <= 3; ++d)
    by_dim.push_back(classify(d, [](const FanoPolytope&) {}).by_vertex_count);
  std::ostringstream os;
  write_table(os, by_dim);
  const std::string t = os.str();
  CHECK(t.find("n d=1 d=2 d=3") == 0);
  CHECK(t.find("Total 1 5 18") != std::string::npos);
  CHECK(t.find("4 . 2 1") != std::string::npos);  // n=4 row

  std::ostringstream empty;
  write_table(empty, {});
  CHECK(empty.str() == "n\nTotal\n");
}
