#ifndef BCT_WITNESSES_HPP
#define BCT_WITNESSES_HPP

// Witness-producing procedures for the constructive structural lemmas:
// maximal paths, detached maximal DPPs, good-pair DPPs, fans, and long
// connecting paths. Contracts are the lemma conclusions; implementations
// are exhaustive backtracking with lowest-index-first exploration, so the
// first witness meeting the bound is returned and runs are reproducible.

#include <optional>
#include <vector>

#include "bct/bigraph.hpp"
#include "bct/cycles.hpp"
#include "bct/graph_io.hpp"

namespace bct {

struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidPath : WitnessError { using WitnessError::WitnessError; };
struct PreconditionViolated : WitnessError {
  using WitnessError::WitnessError;
};

// A lemma guarantee failed under satisfied preconditions. Carries the
// instance so it can be reproduced; never swallowed by the sweeps.
struct LemmaFalsified : WitnessError {
  LemmaFalsified(const std::string& what, const BipartiteGraph& g)
      : WitnessError(what + "\n" + graph_to_string(g)), graph(g) {}
  BipartiteGraph graph;
};

struct PathWitness {
  std::vector<VertexRef> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  VertexRef origin() const { return vertices.front(); }
  VertexRef terminus() const { return vertices.back(); }

  VertexSet vertex_set() const {
    VertexSet s;
    for (VertexRef v : vertices) s.insert(v);
    return s;
  }

  bool validate(const BipartiteGraph& g) const {
    if (vertices.empty()) return false;
    if (vertex_set().size() != order()) return false;
    for (int i = 0; i + 1 < order(); ++i)
      if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
    return true;
  }
};

struct DppWitness {
  PathWitness path1;  // origin s
  PathWitness path2;  // origin s', possibly a single vertex
  bool detached = false;

  int order() const { return path1.order() + path2.order(); }
  VertexSet vertex_set() const {
    return path1.vertex_set() | path2.vertex_set();
  }

  bool validate(const BipartiteGraph& g) const {
    if (!path1.validate(g) || !path2.validate(g)) return false;
    if (!(path1.vertex_set() & path2.vertex_set()).empty()) return false;
    bool det = path1.terminus().side != path2.terminus().side;
    return det == detached;
  }
};

struct FanWitness {
  VertexRef center;
  std::vector<PathWitness> paths;  // each from center to a cycle vertex

  int edge_count() const {
    int e = 0;
    for (const PathWitness& p : paths) e += p.order() - 1;
    return e;
  }

  bool validate(const BipartiteGraph& g, const CycleWitness& cycle) const {
    if (paths.size() < 2) return false;
    VertexSet on_cycle = cycle.vertex_set();
    VertexSet seen_termini;
    VertexSet interior_seen;
    for (const PathWitness& p : paths) {
      if (!p.validate(g)) return false;
      if (!(p.origin() == center)) return false;
      VertexRef t = p.terminus();
      if (!on_cycle.contains(t) || seen_termini.contains(t)) return false;
      seen_termini.insert(t);
      VertexSet interior = p.vertex_set();
      interior.erase(center);
      interior.erase(t);
      if (!(interior & on_cycle).empty()) return false;
      if (!(interior & interior_seen).empty()) return false;
      interior_seen = interior_seen | interior;
    }
    return true;
  }
};

inline bool is_maximal_path(const BipartiteGraph& g, const PathWitness& p) {
  if (!p.validate(g)) throw InvalidPath("is_maximal_path");
  VertexSet on = p.vertex_set();
  VertexSet ends = g.neighbors(p.origin()) | g.neighbors(p.terminus());
  return ((ends.x & ~on.x) | (ends.y & ~on.y)) == 0;
}

// Greedily appends the lowest-index external neighbor at either end until
// both endpoint neighborhoods lie on the path.
inline PathWitness extend_to_maximal(const BipartiteGraph& g, PathWitness p) {
  if (!p.validate(g)) throw InvalidPath("extend_to_maximal");
  auto pick = [&](VertexRef end, const VertexSet& on)
      -> std::optional<VertexRef> {
    VertexSet cand = g.neighbors(end);
    Bits cx = cand.x & ~on.x, cy = cand.y & ~on.y;
    if (cx) return vx(lowest_bit(cx));
    if (cy) return vy(lowest_bit(cy));
    return std::nullopt;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    VertexSet on = p.vertex_set();
    if (auto w = pick(p.terminus(), on)) {
      p.vertices.push_back(*w);
      grew = true;
      continue;
    }
    if (auto w = pick(p.origin(), on)) {
      p.vertices.insert(p.vertices.begin(), *w);
      grew = true;
    }
  }
  return p;
}

namespace detail {

// DFS over paths from `origin`; accepts the first path for which
// `accept(path, used)` is true. Exploration is ascending by unified id.
template <typename Accept>
inline bool path_dfs(const Unified& u, std::vector<int>& path, Bits& used,
                     const Accept& accept) {
  if (accept(path, used)) return true;
  int v = path.back();
  for (Bits cand = u.adj[v] & ~used; cand; cand &= cand - 1) {
    int w = lowest_bit(cand);
    path.push_back(w);
    used |= Bits{1} << w;
    if (path_dfs(u, path, used, accept)) return true;
    used &= ~(Bits{1} << w);
    path.pop_back();
  }
  return false;
}

inline PathWitness to_path(const Unified& u, const std::vector<int>& ids) {
  PathWitness p;
  for (int v : ids) p.vertices.push_back(u.to_ref(v));
  return p;
}

}  // namespace detail

// A maximal origin-path with terminus in X and order >= 2d (origin in Y)
// or >= 2d+1 (origin in X). Existence is the lemma's guarantee; failure
// under satisfied preconditions raises LemmaFalsified.
inline PathWitness maximal_path_with_terminus(const BipartiteGraph& g,
                                              VertexRef origin, int d) {
  if (d < 1) throw PreconditionViolated("min degree d must be >= 1");
  if (!is_connected(g)) throw PreconditionViolated("graph must be connected");
  for (int i = 0; i < g.m(); ++i)
    if (g.deg_x(i) < d)
      throw PreconditionViolated("every X vertex needs degree >= d");
  if (origin.side == Side::Y && g.m() < g.n())
    throw PreconditionViolated("origin in Y requires |X| >= |Y|");
  if (origin.side == Side::X && g.m() <= g.n())
    throw PreconditionViolated("origin in X requires |X| > |Y|");
  int min_order = origin.side == Side::Y ? 2 * d : 2 * d + 1;

  detail::Unified u(g);
  std::vector<int> path{u.to_id(origin)};
  Bits used = Bits{1} << path[0];
  auto accept = [&](const std::vector<int>& p, Bits on) {
    int term = p.back();
    if (term >= u.m) return false;               // terminus must be in X
    if (static_cast<int>(p.size()) < min_order) return false;
    return (u.adj[term] & ~on) == 0;             // maximal origin-path
  };
  if (detail::path_dfs(u, path, used, accept)) return detail::to_path(u, path);
  throw LemmaFalsified("no maximal path with terminus in X of order " +
                           std::to_string(min_order),
                       g);
}

namespace detail {

// Exhaustive search for a detached maximal {s1,s2}-DPP of order >= bound.
// Paths may be single vertices. Extension-first ordering finds large DPPs
// quickly on dense graphs.
inline std::optional<DppWitness> dpp_search(const Unified& u, int s1, int s2,
                                            int bound) {
  std::vector<int> p1{s1}, p2{s2};
  Bits used = (Bits{1} << s1) | (Bits{1} << s2);

  auto leaf_ok = [&]() {
    int t1 = p1.back(), t2 = p2.back();
    bool det = (t1 < u.m) != (t2 < u.m);
    if (!det) return false;
    if (static_cast<int>(p1.size() + p2.size()) < bound) return false;
    return ((u.adj[t1] | u.adj[t2]) & ~used) == 0;
  };

  auto rec2 = [&](auto&& self) -> bool {
    if (leaf_ok()) return true;
    for (Bits cand = u.adj[p2.back()] & ~used; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      p2.push_back(w);
      used |= Bits{1} << w;
      if (self(self)) return true;
      used &= ~(Bits{1} << w);
      p2.pop_back();
    }
    return false;
  };
  auto rec1 = [&](auto&& self) -> bool {
    for (Bits cand = u.adj[p1.back()] & ~used; cand; cand &= cand - 1) {
      int w = lowest_bit(cand);
      p1.push_back(w);
      used |= Bits{1} << w;
      if (self(self)) return true;
      used &= ~(Bits{1} << w);
      p1.pop_back();
    }
    return rec2(rec2);  // freeze path1, explore path2
  };
  if (!rec1(rec1)) return std::nullopt;
  DppWitness d;
  d.path1 = to_path(u, p1);
  d.path2 = to_path(u, p2);
  d.detached = true;
  return d;
}

inline void check_dpp_terminus_identity(const BipartiteGraph& g,
                                        const DppWitness& d) {
  // For a detached maximal DPP with termini t1 in X, t2 in Y:
  // |V(D)| >= d(t1)+d(t2)+2 if t1t2 is a non-edge, else >= d(t1)+d(t2).
  VertexRef t1 = d.path1.terminus(), t2 = d.path2.terminus();
  int lower = g.degree(t1) + g.degree(t2) + (g.adjacent(t1, t2) ? 0 : 2);
  if (d.order() < lower)
    throw std::logic_error("DPP terminus-degree identity violated");
}

}  // namespace detail

// Detached maximal {x0,y0}-DPP of order >= rho+1, where rho defaults to the
// minimum pairwise rho(x, y) over cross pairs.
inline DppWitness detached_maximal_dpp(const BipartiteGraph& g, VertexRef x0,
                                       VertexRef y0, int rho_target = -1) {
  if (x0.side != Side::X || y0.side != Side::Y)
    throw PreconditionViolated("anchors must be (x, y)");
  if (g.m() != g.n()) throw PreconditionViolated("graph must be balanced");
  if (!is_connected(g)) throw PreconditionViolated("graph must be connected");
  int rho_min = rho_target < 0 ? min_pair_rho(g) : rho_target;
  detail::Unified u(g);
  auto d = detail::dpp_search(u, u.to_id(x0), u.to_id(y0), rho_min + 1);
  if (!d)
    throw LemmaFalsified("no detached maximal DPP of order >= " +
                             std::to_string(rho_min + 1),
                         g);
  detail::check_dpp_terminus_identity(g, *d);
  return *d;
}

// Good-pair variant: both anchors in X, connectivity exactly 1.
inline DppWitness dpp_good_pair(const BipartiteGraph& g, VertexRef x0,
                                VertexRef x0p, int rho_target = -1) {
  if (x0.side != Side::X || x0p.side != Side::X || x0 == x0p)
    throw PreconditionViolated("anchors must be two distinct X vertices");
  if (g.m() != g.n()) throw PreconditionViolated("graph must be balanced");
  bool good;
  try {
    good = is_good_pair(g, x0, x0p);
  } catch (const NotConnectivityOne& e) {
    throw PreconditionViolated(e.what());
  }
  if (!good) throw PreconditionViolated("anchors are not a good pair");
  int rho_min = rho_target < 0 ? min_pair_rho(g) : rho_target;
  detail::Unified u(g);
  auto d = detail::dpp_search(u, u.to_id(x0), u.to_id(x0p), rho_min + 1);
  if (!d)
    throw LemmaFalsified("no detached maximal good-pair DPP of order >= " +
                             std::to_string(rho_min + 1),
                         g);
  detail::check_dpp_terminus_identity(g, *d);
  return *d;
}

// (x,C)-fan with >= 2 paths and edge count >= d. C must be a longest cycle
// and x must lie in a component of G - C whose vertices all have degree
// >= d in G.
inline FanWitness find_fan(const BipartiteGraph& g, VertexRef x,
                           const CycleWitness& cycle, int d) {
  if (d < 1) throw PreconditionViolated("fan degree bound must be >= 1");
  if (!is_2connected(g))
    throw PreconditionViolated("graph must be 2-connected");
  if (!cycle.validate(g)) throw PreconditionViolated("invalid cycle");
  VertexSet on_cycle = cycle.vertex_set();
  if (on_cycle.contains(x))
    throw PreconditionViolated("x must lie outside the cycle");
  // Component of G - C containing x, found in the full graph's id space.
  detail::Unified u(g);
  Bits cyc = u.from_set(on_cycle);
  Bits comp = Bits{1} << u.to_id(x);
  for (Bits frontier = comp; frontier;) {
    Bits next = 0;
    for (Bits f = frontier; f; f &= f - 1) next |= u.adj[lowest_bit(f)];
    frontier = next & ~cyc & ~comp;
    comp |= frontier;
  }
  for (Bits b = comp; b; b &= b - 1)
    if (bit_count(u.adj[lowest_bit(b)]) < d)
      throw PreconditionViolated("component vertex of degree < d");

  int cx = u.to_id(x);
  std::vector<std::vector<int>> paths;
  Bits used_interior = 0;  // interior vertices of accepted paths (minus x)
  Bits used_termini = 0;
  std::vector<int> cur{cx};

  // Enumerate fans path by path; within a path, DFS off-cycle until a new
  // cycle vertex is reached.
  auto rec = [&](auto&& self) -> bool {
    int edges = 0;
    for (const auto& p : paths) edges += static_cast<int>(p.size()) - 1;
    if (paths.size() >= 2 && edges >= d) return true;

    Bits blocked = used_interior | used_termini | (Bits{1} << cx);
    auto extend = [&](auto&& ext) -> bool {
      int v = cur.back();
      for (Bits cand = u.adj[v] & ~blocked; cand; cand &= cand - 1) {
        int w = lowest_bit(cand);
        if ((cyc >> w) & 1) {  // terminus on the cycle
          cur.push_back(w);
          paths.push_back(cur);
          Bits save_int = used_interior, save_term = used_termini;
          for (std::size_t q = 1; q + 1 < cur.size(); ++q)
            used_interior |= Bits{1} << cur[q];
          used_termini |= Bits{1} << w;
          std::vector<int> save_cur = cur;
          cur.assign(1, cx);
          if (self(self)) return true;
          cur = save_cur;
          used_interior = save_int;
          used_termini = save_term;
          paths.pop_back();
          cur.pop_back();
        } else {
          cur.push_back(w);
          blocked |= Bits{1} << w;
          if (ext(ext)) return true;
          blocked &= ~(Bits{1} << w);
          cur.pop_back();
        }
      }
      return false;
    };
    return extend(extend);
  };

  if (!rec(rec))
    throw LemmaFalsified("no fan with edge count >= " + std::to_string(d), g);
  FanWitness f;
  f.center = x;
  for (const auto& p : paths) f.paths.push_back(detail::to_path(u, p));
  return f;
}

// (x1,x2)-path of order >= rho in a 2-connected balanced graph.
inline PathWitness long_path_between(const BipartiteGraph& g, VertexRef x1,
                                     VertexRef x2, int rho_target = -1) {
  if (x1.side != Side::X || x2.side != Side::X || x1 == x2)
    throw PreconditionViolated("anchors must be two distinct X vertices");
  if (g.m() != g.n()) throw PreconditionViolated("graph must be balanced");
  if (!is_2connected(g))
    throw PreconditionViolated("graph must be 2-connected");
  int rho_min = rho_target < 0 ? min_pair_rho(g) : rho_target;
  detail::Unified u(g);
  int target = u.to_id(x2);
  std::vector<int> path{u.to_id(x1)};
  Bits used = Bits{1} << path[0];
  auto accept = [&](const std::vector<int>& p, Bits) {
    return p.back() == target && static_cast<int>(p.size()) >= rho_min;
  };
  if (detail::path_dfs(u, path, used, accept)) return detail::to_path(u, path);
  throw LemmaFalsified(
      "no connecting path of order >= " + std::to_string(rho_min), g);
}

}  // namespace bct

#endif  // BCT_WITNESSES_HPP
