#pragma once

// Serialization of classification output.
//
// Text format, one record per polytope:
//
//   # <index>
//   <dim> <vertex count>
//   <one line per vertex: dim space-separated coordinates>
//
// Structured format: one JSON object per line with keys "index", "dim" and
// "vertices" (array of coordinate arrays). Vertices appear in the canonical
// set order in both formats.

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfp/geometry.hpp"
#include "sfp/lattice.hpp"

namespace sfp {

inline void write_polytope_text(std::ostream& os, const FanoPolytope& p, std::uint64_t index) {
  os << "# " << index << '\n' << p.dim << ' ' << p.verts.size() << '\n';
  for (const Point& x : p.verts) {
    for (int i = 0; i < p.dim; ++i) {
      if (i) os << ' ';
      os << x[i];
    }
    os << '\n';
  }
}

inline void write_polytope_json(std::ostream& os, const FanoPolytope& p, std::uint64_t index) {
  os << "{\"index\":" << index << ",\"dim\":" << p.dim << ",\"vertices\":[";
  for (int v = 0; v < p.verts.size(); ++v) {
    if (v) os << ',';
    os << '[';
    for (int i = 0; i < p.dim; ++i) {
      if (i) os << ',';
      os << p.verts[v][i];
    }
    os << ']';
  }
  os << "]}\n";
}

struct PolytopeRecord {
  std::uint64_t index = 0;
  int dim = 0;
  std::vector<Point> vertices;  // in file order, not resorted
};

// Parses the text format back. Throws std::runtime_error on malformed input.
inline std::vector<PolytopeRecord> read_polytopes_text(std::istream& is) {
  std::vector<PolytopeRecord> out;
  std::string line;
  auto fail = [](const std::string& what) -> std::runtime_error {
    return std::runtime_error("malformed record: " + what);
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') throw fail("expected '# <index>', got '" + line + "'");
    PolytopeRecord rec;
    {
      std::istringstream ss(line.substr(1));
      if (!(ss >> rec.index)) throw fail("bad index line '" + line + "'");
    }
    if (!std::getline(is, line)) throw fail("missing header after index");
    int n = 0;
    {
      std::istringstream ss(line);
      if (!(ss >> rec.dim >> n) || rec.dim < 1 || rec.dim > kMaxDim || n < 1)
        throw fail("bad header line '" + line + "'");
    }
    for (int v = 0; v < n; ++v) {
      if (!std::getline(is, line)) throw fail("missing vertex line");
      std::istringstream ss(line);
      Point p;
      for (int i = 0; i < rec.dim; ++i)
        if (!(ss >> p[i])) throw fail("bad vertex line '" + line + "'");
      Coord extra;
      if (ss >> extra) throw fail("too many coordinates in '" + line + "'");
      rec.vertices.push_back(p);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

// Classes-by-vertex-count table, one column per dimension plus a totals row.
// Single-space separated. by_dim[k] holds the counts for dimension k + 1.
inline void write_table(std::ostream& os, const std::vector<std::map<int, std::uint64_t>>& by_dim) {
  int max_n = 0;
  for (const auto& m : by_dim)
    if (!m.empty()) max_n = std::max(max_n, m.rbegin()->first);
  os << "n";
  for (std::size_t k = 0; k < by_dim.size(); ++k) os << " d=" << k + 1;
  os << '\n';
  for (int n = 2; n <= max_n; ++n) {
    os << n;
    for (const auto& m : by_dim) {
      const auto it = m.find(n);
      os << ' ';
      if (it != m.end())
        os << it->second;
      else
        os << '.';
    }
    os << '\n';
  }
  os << "Total";
  for (const auto& m : by_dim) {
    std::uint64_t total = 0;
    for (const auto& [n, c] : m) total += c;
    os << ' ' << total;
  }
  os << '\n';
}

}  // namespace sfp
