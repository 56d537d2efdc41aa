#ifndef BCT_GRAPH_IO_HPP
#define BCT_GRAPH_IO_HPP

// On-disk graph format (ASCII, LF):
//   c <comment>
//   p bip <m> <n>
//   e <i> <j>        1 <= i <= m (X index), 1 <= j <= n (Y index)

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bct/bigraph.hpp"

namespace bct {

struct ParseError : GraphError {
  using GraphError::GraphError;
};

inline BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  int m = -1, n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (m >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
      if (!(ls >> kind >> m >> n) || kind != "bip" || m < 1 || n < 1)
        throw ParseError("line " + std::to_string(lineno) + ": bad header");
    } else if (tag == "e") {
      if (m < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
      int i, j;
      if (!(ls >> i >> j))
        throw ParseError("line " + std::to_string(lineno) + ": bad edge line");
      if (i < 1 || i > m || j < 1 || j > n)
        throw ParseError("line " + std::to_string(lineno) + ": edge index out of range");
      edges.emplace_back(i - 1, j - 1);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
  }
  if (m < 0) throw ParseError("missing 'p bip' header");
  try {
    return BipartiteGraph::from_edge_list(m, n, edges);
  } catch (const DuplicateEdge& e) {
    throw ParseError(e.what());
  }
}

// Edges emitted sorted by (i, j); indices 1-based.
inline void serialize_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "p bip " << g.m() << " " << g.n() << "\n";
  for (auto [i, j] : g.edge_list())
    out << "e " << i + 1 << " " << j + 1 << "\n";
}

inline std::string graph_to_string(const BipartiteGraph& g) {
  std::ostringstream os;
  serialize_graph(os, g);
  return os.str();
}

}  // namespace bct

#endif  // BCT_GRAPH_IO_HPP
