#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "powcol/forest.hpp"

namespace powcol {

// Edge-list text format:
//   n <vertex_count>
//   <u> <v>          one edge per line, 0-based
// Lines whose first non-blank character is '#' are comments; blank lines are ignored.

struct EdgeList {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

inline EdgeList read_edge_list(std::istream& in) {
  EdgeList out;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& why) {
      return InputError("line " + std::to_string(line_no) + ": " + why);
    };
    if (!have_header) {
      std::string tag;
      long long n = -1;
      if (!(ls >> tag >> n) || tag != "n" || n < 0) throw fail("expected header 'n <vertex_count>'");
      std::string rest;
      if (ls >> rest) throw fail("trailing text after header");
      out.vertex_count = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    if (!(ls >> u >> v)) throw fail("expected '<u> <v>'");
    std::string rest;
    if (ls >> rest) throw fail("trailing text after edge");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= out.vertex_count ||
        static_cast<std::size_t>(v) >= out.vertex_count) {
      throw fail("vertex index out of range");
    }
    out.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw InputError("missing header 'n <vertex_count>'");
  return out;
}

inline Forest read_forest(std::istream& in) {
  const EdgeList list = read_edge_list(in);
  return Forest::from_edges(list.vertex_count, list.edges);
}

inline Forest read_forest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_forest(in);
}

// Writes edges in canonical (min, max) form, sorted.
inline void write_edge_list(std::ostream& out, std::size_t vertex_count, std::vector<Edge> edges) {
  for (Edge& e : edges) e = e.canonical();
  std::sort(edges.begin(), edges.end());
  out << "n " << vertex_count << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

inline void write_forest(std::ostream& out, const Forest& f) { write_edge_list(out, f.vertex_count(), f.edges()); }

}  // namespace powcol
