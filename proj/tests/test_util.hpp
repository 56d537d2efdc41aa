#ifndef BCT_TEST_UTIL_HPP
#define BCT_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "bct/bigraph.hpp"
#include "bct/cycles.hpp"

namespace bct::test {

inline BipartiteGraph complete(int m, int n) {
  std::vector<Bits> rows(m, low_mask(n));
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

// C_{2k} as a balanced graph on (k, k): x0-y0-x1-y1-...-x_{k-1}-y_{k-1}-x0.
inline BipartiteGraph cycle_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back((i + 1) % k, i);
  }
  return BipartiteGraph::from_edge_list(k, k, edges);
}

inline BipartiteGraph from_mask(int m, int n, std::uint64_t mask) {
  std::vector<Bits> rows(m, 0);
  for (int i = 0; i < m; ++i) rows[i] = (mask >> (i * n)) & low_mask(n);
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

inline BipartiteGraph random_graph(int m, int n, int density_pct,
                                   std::mt19937_64& rng) {
  std::vector<Bits> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<int>(rng() % 100) < density_pct) rows[i] |= Bits{1} << j;
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

// Naive oracle: is there a cycle of exactly L vertices? Enumerates vertex
// subsets (L/2 per side) and tests each induced pair set for a Hamiltonian
// cycle by permutation search over the Y side.
inline bool naive_has_cycle(const BipartiteGraph& g, int L) {
  int h = L / 2;
  if (h < 2 || h > g.m() || h > g.n()) return false;
  for (Bits xm = 0; xm < (Bits{1} << g.m()); ++xm) {
    if (bit_count(xm) != h) continue;
    for (Bits ym = 0; ym < (Bits{1} << g.n()); ++ym) {
      if (bit_count(ym) != h) continue;
      std::vector<int> xs, ys;
      for (Bits b = xm; b; b &= b - 1) xs.push_back(lowest_bit(b));
      for (Bits b = ym; b; b &= b - 1) ys.push_back(lowest_bit(b));
      // Hamiltonian cycle on the chosen vertices: first x fixed to break
      // rotation, the rest of the xs and all ys permuted.
      std::vector<int> xrest(xs.begin() + 1, xs.end());
      do {
        std::vector<int> xcur = {xs[0]};
        xcur.insert(xcur.end(), xrest.begin(), xrest.end());
        std::vector<int> yp = ys;
        do {
          bool ok = true;
          for (int q = 0; q < h && ok; ++q)
            ok = g.has_edge(xcur[q], yp[q]) &&
                 g.has_edge(xcur[(q + 1) % h], yp[q]);
          if (ok) return true;
        } while (std::next_permutation(yp.begin(), yp.end()));
      } while (std::next_permutation(xrest.begin(), xrest.end()));
    }
  }
  return false;
}

// Naive cut-vertex oracle: v is a cut vertex iff deleting it increases the
// component count among the remaining vertices.
inline bool naive_is_cut_vertex(const BipartiteGraph& g, VertexRef v) {
  if ((v.side == Side::X && g.m() == 1) || (v.side == Side::Y && g.n() == 1))
    return false;
  VertexSet s;
  s.insert(v);
  auto before = components(g);
  // Count components of G - v restricted to non-isolated bookkeeping: we
  // compare component counts directly on the reduced graph.
  auto after = components(remove_vertices(g, s));
  return after.size() > before.size();
}

}  // namespace bct::test

#endif
