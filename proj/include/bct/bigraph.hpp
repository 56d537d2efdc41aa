#ifndef BCT_BIGRAPH_HPP
#define BCT_BIGRAPH_HPP

// Bipartite graphs with bit-vector adjacency rows. X vertices are indexed
// 0..m-1, Y vertices 0..n-1; every edge joins an X vertex to a Y vertex.
// Graphs are immutable after construction.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bct {

using Bits = std::uint64_t;

inline int bit_count(Bits b) { return std::popcount(b); }
inline int lowest_bit(Bits b) { return std::countr_zero(b); }
inline Bits low_mask(int k) { return k >= 64 ? ~Bits{0} : (Bits{1} << k) - 1; }

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : GraphError { using GraphError::GraphError; };
struct DuplicateEdge : GraphError { using GraphError::GraphError; };
struct OverlappingSets : GraphError { using GraphError::GraphError; };
struct DisconnectedInput : GraphError { using GraphError::GraphError; };
struct NotConnectivityOne : GraphError { using GraphError::GraphError; };

enum class Side { X, Y };

struct VertexRef {
  Side side;
  int index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

inline VertexRef vx(int i) { return {Side::X, i}; }
inline VertexRef vy(int j) { return {Side::Y, j}; }

inline std::string to_string(VertexRef v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

// A subset of the vertices of a bipartite graph, one bit mask per side.
struct VertexSet {
  Bits x = 0;
  Bits y = 0;

  int size() const { return bit_count(x) + bit_count(y); }
  bool empty() const { return x == 0 && y == 0; }
  bool contains(VertexRef v) const {
    Bits side = v.side == Side::X ? x : y;
    return (side >> v.index) & 1;
  }
  void insert(VertexRef v) {
    (v.side == Side::X ? x : y) |= Bits{1} << v.index;
  }
  void erase(VertexRef v) {
    (v.side == Side::X ? x : y) &= ~(Bits{1} << v.index);
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  VertexSet operator|(const VertexSet& o) const { return {x | o.x, y | o.y}; }
  VertexSet operator&(const VertexSet& o) const { return {x & o.x, y & o.y}; }
};

class BipartiteGraph {
 public:
  static constexpr int kMaxSide = 64;

  BipartiteGraph(int m, int n) : m_(m), n_(n), rows_(m, 0), edges_(0) {
    if (m < 1 || n < 1 || m > kMaxSide || n > kMaxSide)
      throw IndexOutOfRange("part sizes must be in [1, 64]");
  }

  static BipartiteGraph from_edge_list(
      int m, int n, const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g(m, n);
    for (auto [i, j] : edges) {
      if (i < 0 || i >= m)
        throw IndexOutOfRange("X index " + std::to_string(i) + " out of range");
      if (j < 0 || j >= n)
        throw IndexOutOfRange("Y index " + std::to_string(j) + " out of range");
      if (g.has_edge(i, j))
        throw DuplicateEdge("duplicate edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      g.rows_[i] |= Bits{1} << j;
    }
    g.recount();
    return g;
  }

  // Rows are adjacency masks over Y; no validity checks beyond width.
  static BipartiteGraph from_rows(int m, int n, std::vector<Bits> rows) {
    BipartiteGraph g(m, n);
    g.rows_ = std::move(rows);
    g.rows_.resize(m, 0);
    for (Bits r : g.rows_)
      if (r & ~low_mask(n)) throw IndexOutOfRange("row mask exceeds n");
    g.recount();
    return g;
  }

  void add_edge(int i, int j) {
    if (i < 0 || i >= m_ || j < 0 || j >= n_)
      throw IndexOutOfRange("edge endpoint out of range");
    if (has_edge(i, j))
      throw DuplicateEdge("duplicate edge (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    rows_[i] |= Bits{1} << j;
    ++edges_;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int edge_count() const { return edges_; }

  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1; }
  Bits row(int i) const { return rows_[i]; }
  Bits col(int j) const {
    Bits c = 0;
    for (int i = 0; i < m_; ++i) c |= ((rows_[i] >> j) & 1) << i;
    return c;
  }

  int deg_x(int i) const { return bit_count(rows_[i]); }
  int deg_y(int j) const { return bit_count(col(j)); }
  int degree(VertexRef v) const {
    return v.side == Side::X ? deg_x(v.index) : deg_y(v.index);
  }

  VertexSet neighbors(VertexRef v) const {
    if (v.side == Side::X) return {0, rows_[v.index]};
    return {col(v.index), 0};
  }

  VertexSet all_vertices() const { return {low_mask(m_), low_mask(n_)}; }
  VertexSet x_side() const { return {low_mask(m_), 0}; }
  VertexSet y_side() const { return {0, low_mask(n_)}; }

  bool adjacent(VertexRef a, VertexRef b) const {
    if (a.side == b.side) return false;
    if (a.side == Side::Y) std::swap(a, b);
    return has_edge(a.index, b.index);
  }

  BipartiteGraph transpose() const {
    BipartiteGraph g(n_, m_);
    for (int j = 0; j < n_; ++j) g.rows_[j] = col(j);
    g.recount();
    return g;
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int i = 0; i < m_; ++i)
      for (Bits r = rows_[i]; r; r &= r - 1) out.emplace_back(i, lowest_bit(r));
    return out;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void recount() {
    edges_ = 0;
    for (Bits r : rows_) edges_ += bit_count(r);
  }

  int m_, n_;
  std::vector<Bits> rows_;
  int edges_;
};

// Number of edges incident to at least one vertex of S:
// e(G[S]) + e(S, V \ S), or equivalently e(G) - e(G - S).
inline int rho(const BipartiteGraph& g, const VertexSet& s) {
  int count = 0;
  for (Bits r = s.x; r; r &= r - 1) count += g.deg_x(lowest_bit(r));
  for (Bits r = s.y; r; r &= r - 1)
    count += bit_count(g.col(lowest_bit(r)) & ~s.x);
  return count;
}

inline int rho_pair(const BipartiteGraph& g, VertexRef x, VertexRef y) {
  VertexSet s;
  s.insert(x);
  s.insert(y);
  return rho(g, s);
}

// Minimum of rho({x, y}) over all cross pairs.
inline int min_pair_rho(const BipartiteGraph& g) {
  int best = g.edge_count() + 1;
  for (int i = 0; i < g.m(); ++i)
    for (int j = 0; j < g.n(); ++j)
      best = std::min(best, rho_pair(g, vx(i), vy(j)));
  return best;
}

inline int e_between(const BipartiteGraph& g, const VertexSet& s1,
                     const VertexSet& s2) {
  if ((s1.x & s2.x) || (s1.y & s2.y))
    throw OverlappingSets("e_between requires disjoint sets");
  int count = 0;
  for (Bits r = s1.x; r; r &= r - 1)
    count += bit_count(g.row(lowest_bit(r)) & s2.y);
  for (Bits r = s2.x; r; r &= r - 1)
    count += bit_count(g.row(lowest_bit(r)) & s1.y);
  return count;
}

// Induced subgraph on V \ S, with surviving vertices reindexed in order.
// Empty sides are not allowed; callers removing a whole side should not.
inline BipartiteGraph remove_vertices(const BipartiteGraph& g,
                                      const VertexSet& s) {
  std::vector<int> ymap(g.n(), -1);
  int nn = 0;
  for (int j = 0; j < g.n(); ++j)
    if (!s.contains(vy(j))) ymap[j] = nn++;
  int mm = 0;
  std::vector<Bits> rows;
  for (int i = 0; i < g.m(); ++i) {
    if (s.contains(vx(i))) continue;
    Bits r = 0;
    for (Bits b = g.row(i); b; b &= b - 1) {
      int j = lowest_bit(b);
      if (ymap[j] >= 0) r |= Bits{1} << ymap[j];
    }
    rows.push_back(r);
    ++mm;
  }
  if (mm == 0 || nn == 0)
    throw IndexOutOfRange("removal would empty a side");
  return BipartiteGraph::from_rows(mm, nn, std::move(rows));
}

namespace detail {

// Unified vertex ids: X vertex i -> i, Y vertex j -> m + j. Needs m+n <= 64.
struct Unified {
  int m, n, total;
  std::vector<Bits> adj;

  explicit Unified(const BipartiteGraph& g)
      : m(g.m()), n(g.n()), total(g.m() + g.n()), adj(g.m() + g.n(), 0) {
    if (total > 64) throw GraphError("graph too large for unified bit ops");
    for (int i = 0; i < m; ++i) {
      adj[i] = g.row(i) << m;
      for (Bits r = g.row(i); r; r &= r - 1)
        adj[m + lowest_bit(r)] |= Bits{1} << i;
    }
  }

  VertexRef to_ref(int v) const {
    return v < m ? vx(v) : vy(v - m);
  }
  int to_id(VertexRef v) const {
    return v.side == Side::X ? v.index : m + v.index;
  }
  VertexSet to_set(Bits mask) const {
    return {mask & low_mask(m), mask >> m};
  }
  Bits from_set(const VertexSet& s) const { return s.x | (s.y << m); }
  Bits all() const { return low_mask(total); }
};

}  // namespace detail

inline std::vector<VertexSet> components(const BipartiteGraph& g) {
  detail::Unified u(g);
  Bits seen = 0;
  std::vector<VertexSet> out;
  for (int v = 0; v < u.total; ++v) {
    if ((seen >> v) & 1) continue;
    Bits comp = Bits{1} << v;
    Bits frontier = comp;
    while (frontier) {
      Bits next = 0;
      for (Bits f = frontier; f; f &= f - 1) next |= u.adj[lowest_bit(f)];
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(u.to_set(comp));
  }
  return out;
}

inline bool is_connected(const BipartiteGraph& g) {
  return components(g).size() == 1;
}

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<bool> end_block;  // block contains exactly one cut vertex
};

// Tarjan's biconnected components over the unified graph.
inline BlockDecomposition block_decomposition(const BipartiteGraph& g) {
  if (!is_connected(g)) throw DisconnectedInput("block_decomposition");
  detail::Unified u(g);
  BlockDecomposition out;
  std::vector<int> disc(u.total, -1), low(u.total, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  auto pop_block = [&](int v, int w) {
    Bits verts = 0;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      verts |= (Bits{1} << a) | (Bits{1} << b);
      if (a == v && b == w) break;
    }
    out.blocks.push_back(u.to_set(verts));
  };

  // Iterative DFS; children counted for the root cut-vertex rule.
  struct Frame {
    int v, parent;
    Bits pending;
  };
  std::vector<Frame> stack;
  int root = 0, root_children = 0;
  disc[root] = low[root] = timer++;
  stack.push_back({root, -1, u.adj[root]});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pending) {
      int w = lowest_bit(f.pending);
      f.pending &= f.pending - 1;
      if (w == f.parent) continue;
      if (disc[w] == -1) {
        edge_stack.push_back({f.v, w});
        if (f.v == root) ++root_children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, u.adj[w]});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back({f.v, w});
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      int v = f.v, parent = f.parent;
      stack.pop_back();
      if (parent >= 0) {
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          if (parent != root) out.cut_vertices.insert(u.to_ref(parent));
          pop_block(parent, v);
        }
      }
    }
  }
  // Root is a cut vertex iff it has >= 2 DFS children.
  if (root_children > 1) out.cut_vertices.insert(u.to_ref(root));
  for (const VertexSet& b : out.blocks) {
    int cuts = (b & out.cut_vertices).size();
    out.end_block.push_back(cuts == 1);
  }
  return out;
}

inline bool is_2connected(const BipartiteGraph& g) {
  if (g.m() + g.n() < 3) return false;
  if (!is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

// True iff some end-block has exactly one of u, v as an inner vertex
// (a block vertex that is not a cut vertex of G).
inline bool is_good_pair(const BipartiteGraph& g, VertexRef u, VertexRef v) {
  if (!is_connected(g)) throw NotConnectivityOne("graph is disconnected");
  BlockDecomposition bd = block_decomposition(g);
  if (bd.cut_vertices.empty())
    throw NotConnectivityOne("graph is 2-connected");
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (!bd.end_block[b]) continue;
    auto inner = [&](VertexRef w) {
      return bd.blocks[b].contains(w) && !bd.cut_vertices.contains(w);
    };
    if (inner(u) != inner(v)) return true;
  }
  return false;
}

}  // namespace bct

#endif  // BCT_BIGRAPH_HPP
