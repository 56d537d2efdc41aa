#ifndef BCT_CYCLES_HPP
#define BCT_CYCLES_HPP

// Exact cycle computations by exhaustive backtracking. Everything here is
// meant for desk-scale graphs (the searches restrict themselves to the
// 2-core, which keeps the random sweeps cheap, but worst cases are still
// exponential).

#include <optional>
#include <set>
#include <vector>

#include "bct/bigraph.hpp"

namespace bct {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadLength : CycleError { using CycleError::CycleError; };
struct NotBalanced : CycleError { using CycleError::CycleError; };
struct Acyclic : CycleError { using CycleError::CycleError; };
struct XLargerThanY : CycleError { using CycleError::CycleError; };

struct CycleWitness {
  std::vector<VertexRef> vertices;  // closed walk, last adjacent to first

  int length() const { return static_cast<int>(vertices.size()); }

  VertexSet vertex_set() const {
    VertexSet s;
    for (VertexRef v : vertices) s.insert(v);
    return s;
  }

  // Distinct, consecutively adjacent, closed, alternating, even length >= 4.
  bool validate(const BipartiteGraph& g) const {
    int len = length();
    if (len < 4 || len % 2 != 0) return false;
    if (vertex_set().size() != len) return false;
    for (int i = 0; i < len; ++i) {
      VertexRef a = vertices[i], b = vertices[(i + 1) % len];
      if (a.side == b.side || !g.adjacent(a, b)) return false;
    }
    return true;
  }
};

struct SpectrumReport {
  int girth = 0;          // 0 when acyclic
  int circumference = 0;  // 0 when acyclic
  std::set<int> present_lengths;

  bool has(int len) const { return present_lengths.count(len) != 0; }
};

namespace detail {

// Vertices of the 2-core (every cycle lives inside it).
inline Bits two_core(const Unified& u) {
  Bits core = u.all();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Bits b = core; b; b &= b - 1) {
      int v = lowest_bit(b);
      if (bit_count(u.adj[v] & core) < 2) {
        core &= ~(Bits{1} << v);
        changed = true;
      }
    }
  }
  return core;
}

struct CycleSearch {
  const Unified& u;
  Bits core;
  int target = 0;
  Bits used = 0;
  std::vector<int> path;

  explicit CycleSearch(const Unified& un) : u(un), core(two_core(un)) {}

  // Cycle of exactly `target` vertices whose minimum X vertex is `start`.
  bool from_start(int start) {
    path.assign(1, start);
    used = Bits{1} << start;
    return extend(start);
  }

  // Cycle of exactly `target` vertices through `start` (no min-X rule).
  bool through_vertex(int start) {
    if (!((core >> start) & 1)) return false;
    path.assign(1, start);
    used = Bits{1} << start;
    return extend_any(start);
  }

  bool counts_ok() const {
    int need_x = target / 2 - bit_count(used & low_mask(u.m));
    int need_y = target / 2 - bit_count(used >> u.m);
    Bits avail = core & ~used;
    return bit_count(avail & low_mask(u.m)) >= need_x &&
           bit_count(avail >> u.m) >= need_y;
  }

  bool extend(int v) {
    int depth = static_cast<int>(path.size());
    if (depth == target) return (u.adj[v] >> path[0]) & 1;
    if (!counts_ok()) return false;
    int start = path[0];
    for (Bits cand = u.adj[v] & core & ~used; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      if (w < u.m && w < start) continue;  // start is the minimum X vertex
      path.push_back(w);
      used |= Bits{1} << w;
      if (extend(w)) return true;
      used &= ~(Bits{1} << w);
      path.pop_back();
    }
    return false;
  }

  bool extend_any(int v) {
    int depth = static_cast<int>(path.size());
    if (depth == target) return (u.adj[v] >> path[0]) & 1;
    if (!counts_ok()) return false;
    for (Bits cand = u.adj[v] & core & ~used; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      path.push_back(w);
      used |= Bits{1} << w;
      if (extend_any(w)) return true;
      used &= ~(Bits{1} << w);
      path.pop_back();
    }
    return false;
  }
};

inline CycleWitness to_witness(const Unified& u, const std::vector<int>& path) {
  CycleWitness w;
  for (int v : path) w.vertices.push_back(u.to_ref(v));
  return w;
}

// Search without the precondition checks; L already validated.
inline std::optional<CycleWitness> find_cycle_unchecked(const Unified& u,
                                                        int L) {
  CycleSearch cs(u);
  cs.target = L;
  if (bit_count(cs.core) < L) return std::nullopt;
  for (int s = 0; s < u.m; ++s) {
    if (!((cs.core >> s) & 1)) continue;
    if (cs.from_start(s)) return to_witness(u, cs.path);
  }
  return std::nullopt;
}

// True iff the graph has a cycle of exactly L vertices through unified
// vertex v. Used for incremental pruning in the enumeration engine.
inline bool has_cycle_through(const Unified& u, int L, int v) {
  CycleSearch cs(u);
  cs.target = L;
  if (bit_count(cs.core) < L) return false;
  return cs.through_vertex(v);
}

}  // namespace detail

// Exact: a witness of exactly L vertices, or nullopt iff none exists.
inline std::optional<CycleWitness> find_cycle_of_length(
    const BipartiteGraph& g, int L) {
  if (L % 2 != 0 || L < 4 || L > 2 * std::min(g.m(), g.n()))
    throw BadLength("cycle length " + std::to_string(L) +
                    " is odd or out of range");
  detail::Unified u(g);
  return detail::find_cycle_unchecked(u, L);
}

inline std::optional<CycleWitness> longest_cycle(const BipartiteGraph& g) {
  detail::Unified u(g);
  Bits core = detail::two_core(u);
  int cap = 2 * std::min(bit_count(core & low_mask(u.m)),
                         bit_count(core >> u.m));
  for (int L = cap; L >= 4; L -= 2) {
    auto w = detail::find_cycle_unchecked(u, L);
    if (w) return w;
  }
  return std::nullopt;
}

inline SpectrumReport even_spectrum(const BipartiteGraph& g) {
  SpectrumReport r;
  detail::Unified u(g);
  for (int L = 4; L <= 2 * std::min(g.m(), g.n()); L += 2)
    if (detail::find_cycle_unchecked(u, L)) r.present_lengths.insert(L);
  if (!r.present_lengths.empty()) {
    r.girth = *r.present_lengths.begin();
    r.circumference = *r.present_lengths.rbegin();
  }
  return r;
}

inline int circumference(const BipartiteGraph& g) {
  auto w = longest_cycle(g);
  return w ? w->length() : 0;
}

// All even lengths 4..2m present (balanced graphs only).
inline bool is_bipancyclic(const BipartiteGraph& g) {
  if (g.m() != g.n()) throw NotBalanced("is_bipancyclic");
  detail::Unified u(g);
  for (int L = 4; L <= 2 * g.m(); L += 2)
    if (!detail::find_cycle_unchecked(u, L)) return false;
  return true;
}

// Every even length between girth and circumference present.
inline bool is_weakly_bipancyclic(const BipartiteGraph& g) {
  SpectrumReport r = even_spectrum(g);
  if (r.present_lengths.empty()) throw Acyclic("is_weakly_bipancyclic");
  for (int L = r.girth; L <= r.circumference; L += 2)
    if (!r.has(L)) return false;
  return true;
}

// The literal conclusion of the consecutive-cycles theorem: girth 4 and a
// full even spectrum up to the circumference.
inline bool is_weakly_bipancyclic_from4(const BipartiteGraph& g) {
  SpectrumReport r = even_spectrum(g);
  if (r.present_lengths.empty()) throw Acyclic("is_weakly_bipancyclic_from4");
  if (r.girth != 4) return false;
  for (int L = 4; L <= r.circumference; L += 2)
    if (!r.has(L)) return false;
  return true;
}

inline bool is_hamiltonian(const BipartiteGraph& g) {
  if (g.m() != g.n()) throw NotBalanced("is_hamiltonian");
  if (g.m() == 1) return false;
  return find_cycle_of_length(g, 2 * g.m()).has_value();
}

namespace detail {

inline bool ham_path_between(const Unified& u, int from, int to) {
  // DFS for a path visiting every vertex, endpoint `to` reached last.
  std::vector<int> path{from};
  Bits used = Bits{1} << from;
  auto rec = [&](auto&& self, int v) -> bool {
    if (static_cast<int>(path.size()) == u.total) return v == to;
    Bits cand = u.adj[v] & ~used;
    if (static_cast<int>(path.size()) + 1 < u.total)
      cand &= ~(Bits{1} << to);  // `to` only as the final vertex
    for (; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      path.push_back(w);
      used |= Bits{1} << w;
      if (self(self, w)) return true;
      used &= ~(Bits{1} << w);
      path.pop_back();
    }
    return false;
  };
  return rec(rec, from);
}

}  // namespace detail

// Every (x, y) cross pair joined by a Hamiltonian path.
inline bool is_hamilton_biconnected(const BipartiteGraph& g) {
  if (g.m() != g.n()) throw NotBalanced("is_hamilton_biconnected");
  detail::Unified u(g);
  for (int i = 0; i < g.m(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (!detail::ham_path_between(u, i, g.m() + j)) return false;
  return true;
}

// A cycle whose vertex set contains all of X (it then has exactly 2m
// vertices), or nullopt.
inline std::optional<CycleWitness> cycle_through_X(const BipartiteGraph& g) {
  if (g.m() > g.n()) throw XLargerThanY("cycle_through_X requires m <= n");
  if (g.m() < 2) return std::nullopt;
  detail::Unified u(g);
  Bits xmask = low_mask(g.m());
  std::vector<int> path{0};  // every such cycle contains X vertex 0
  Bits used = Bits{1};
  int target = 2 * g.m();
  auto rec = [&](auto&& self, int v) -> bool {
    if (static_cast<int>(path.size()) == target) return (u.adj[v] >> 0) & 1;
    // Every unused X vertex still needs two Y neighbors not yet placed,
    // except that the current end (if in Y) can serve as one of them.
    Bits free_y = ~used & ~low_mask(g.m()) & u.all();
    if (v >= g.m()) free_y |= Bits{1} << v;
    for (Bits xs = xmask & ~used; xs; xs &= xs - 1)
      if (bit_count(u.adj[lowest_bit(xs)] & free_y) < 2) return false;
    for (Bits cand = u.adj[v] & ~used; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      path.push_back(w);
      used |= Bits{1} << w;
      if (self(self, w)) return true;
      used &= ~(Bits{1} << w);
      path.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return detail::to_witness(u, path);
  return std::nullopt;
}

}  // namespace bct

#endif  // BCT_CYCLES_HPP
