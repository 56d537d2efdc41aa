#ifndef BCT_ENUMERATION_HPP
#define BCT_ENUMERATION_HPP

// Exhaustive and randomized search: exact Turan numbers, theorem
// falsification sweeps, and the rho(G-C) bound checker.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bct/bigraph.hpp"
#include "bct/constructions.hpp"
#include "bct/cycles.hpp"
#include "bct/graph_io.hpp"
#include "bct/witnesses.hpp"

namespace bct {

struct EnumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : EnumError { using EnumError::EnumError; };
struct UnknownTheorem : EnumError { using EnumError::EnumError; };

constexpr int kMaxExhaustiveCells = 36;  // guard rail, CLI-overridable

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct TuranResult {
  int m = 0, n = 0, cycle_length = 0;
  long long value = 0;
  BipartiteGraph witness{1, 1};
  long long formula_value = 0;
  bool in_proven_range = false;
  SearchStats stats;
};

struct Violation {
  BipartiteGraph graph;
  std::string theorem_id;
  std::string clause;
  std::string details;
};

namespace detail {

inline BipartiteGraph graph_from_mask(int m, int n, std::uint64_t mask) {
  std::vector<Bits> rows(m, 0);
  for (int i = 0; i < m; ++i) rows[i] = (mask >> (i * n)) & low_mask(n);
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

inline std::uint64_t next_same_popcount(std::uint64_t v) {  // Gosper's hack
  std::uint64_t c = v & -v, r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

template <typename Visitor>
std::uint64_t visit_masks(int cells, int min_edges, std::uint64_t prefix,
                          int prefix_cells, Visitor&& visit) {
  // Enumerates masks over `cells` positions whose low `prefix_cells` bits
  // are fixed to `prefix`, with total popcount >= min_edges, ascending by
  // edge count then numerically.
  int rest = cells - prefix_cells;
  int base = bit_count(prefix);
  std::uint64_t count = 0;
  for (int k = std::max(0, min_edges - base); k <= rest; ++k) {
    if (k == 0) {
      visit(prefix);
      ++count;
      continue;
    }
    std::uint64_t sub = low_mask(k);
    std::uint64_t limit = Bits{1} << rest;
    while (sub < limit) {
      visit((sub << prefix_cells) | prefix);
      ++count;
      if (sub == (low_mask(k) << (rest - k))) break;
      sub = next_same_popcount(sub);
    }
  }
  return count;
}

}  // namespace detail

// Visits every labeled bipartite graph on parts (m, n) with at least
// min_edges edges exactly once; returns the visit count.
template <typename Visitor>
std::uint64_t enumerate_graphs(int m, int n, int min_edges, Visitor&& visit,
                               bool override_guard = false) {
  if (m * n > kMaxExhaustiveCells && !override_guard)
    throw TooLarge("m*n > " + std::to_string(kMaxExhaustiveCells) +
                   "; pass the override to insist");
  return detail::visit_masks(m * n, min_edges, 0, 0, [&](std::uint64_t mask) {
    visit(detail::graph_from_mask(m, n, mask));
  });
}

// Shard s of 2^shard_bits: fixes the membership of the first shard_bits
// edge positions to the bits of s. Shards partition the space; the union
// over shards in index order visits the same set as a sequential run.
template <typename Visitor>
std::uint64_t enumerate_graphs_shard(int m, int n, int min_edges,
                                     int shard_bits, std::uint64_t shard,
                                     Visitor&& visit,
                                     bool override_guard = false) {
  if (m * n > kMaxExhaustiveCells && !override_guard)
    throw TooLarge("m*n too large");
  if (shard_bits > m * n) shard_bits = m * n;
  return detail::visit_masks(m * n, min_edges, shard, shard_bits,
                             [&](std::uint64_t mask) {
                               visit(detail::graph_from_mask(m, n, mask));
                             });
}

namespace detail {

// Branch-and-bound maximizer over C_{2t}-free graphs. Rows are assigned
// top-down; by row- and column-relabeling symmetry only canonical-ish
// matrices are explored: row masks numerically non-increasing, and each
// row's bits forming a suffix of every column class induced by the rows
// above it. Every isomorphism class has such a representative, and the
// Turan value is isomorphism-invariant; the result is cross-checked
// against the fully labeled oracle in the tests.
struct TuranSearch {
  int m, n, two_t;
  long long best = -1;
  std::vector<Bits> best_rows;
  std::vector<Bits> rows;
  std::uint64_t nodes = 0;

  bool partial_has_cycle(int rows_filled) {
    BipartiteGraph g = BipartiteGraph::from_rows(
        rows_filled, n, std::vector<Bits>(rows.begin(), rows.begin() + rows_filled));
    if (two_t > 2 * std::min(rows_filled, n)) return false;
    Unified u(g);
    // Any new C_{2t} must pass through the freshly assigned row.
    return has_cycle_through(u, two_t, rows_filled - 1);
  }

  void candidates_for(const std::vector<std::pair<int, int>>& classes,
                      Bits max_row, std::vector<Bits>& out) {
    out.clear();
    std::vector<Bits> acc{0};
    for (auto [start, len] : classes) {
      std::vector<Bits> next;
      next.reserve(acc.size() * (len + 1));
      for (Bits base : acc)
        for (int k = 0; k <= len; ++k) {
          // chosen bits occupy the top of the class interval
          Bits bits = (low_mask(k) << (start + len - k));
          next.push_back(base | bits);
        }
      acc.swap(next);
    }
    for (Bits r : acc)
      if (r <= max_row) out.push_back(r);
    std::sort(out.begin(), out.end(), std::greater<Bits>());
  }

  void assign(int i, const std::vector<std::pair<int, int>>& classes,
              Bits max_row, long long edges) {
    ++nodes;
    if (i == m) {
      if (edges > best) {
        best = edges;
        best_rows = rows;
      }
      return;
    }
    if (edges + static_cast<long long>(m - i) * n <= best) return;
    std::vector<Bits> cands;
    candidates_for(classes, max_row, cands);
    for (Bits r : cands) {
      if (edges + bit_count(r) + static_cast<long long>(m - i - 1) * n <= best)
        continue;
      rows[i] = r;
      if (partial_has_cycle(i + 1)) continue;
      std::vector<std::pair<int, int>> split;
      for (auto [start, len] : classes) {
        int k = bit_count(r & (low_mask(len) << start));
        if (len - k > 0) split.emplace_back(start, len - k);
        if (k > 0) split.emplace_back(start + len - k, k);
      }
      assign(i + 1, split, r, edges + bit_count(r));
    }
    rows[i] = 0;
  }
};

// Best construction lower bound: a verified C_{2t}-free witness.
inline std::optional<BipartiteGraph> turan_seed(int m, int n, int t) {
  std::optional<BipartiteGraph> best;
  auto consider = [&](const BipartiteGraph& g) {
    if (2 * t <= 2 * std::min(g.m(), g.n()) &&
        find_cycle_of_length(g, 2 * t).has_value())
      return;
    if (!best || g.edge_count() > best->edge_count()) best = g;
  };
  int k = m - t;
  if (k >= 0 && m - k - 1 >= 1) consider(gyori_shape(m, n, k));
  ExtremalParamsL lp{std::max(m, n), std::min(m, n), t - 1};
  if (lp.c >= 1) {
    BipartiteGraph l = build_L(lp);
    consider(m >= n ? l : l.transpose());
  }
  return best;
}

}  // namespace detail

inline TuranResult turan_exact(int m, int n, int two_t,
                               bool override_guard = false) {
  if (two_t % 2 != 0 || two_t < 4 || two_t > 2 * std::min(m, n))
    throw BadLength("turan_exact: 2t must be even, 4 <= 2t <= 2*min(m,n)");
  if (m * n > kMaxExhaustiveCells && !override_guard)
    throw TooLarge("m*n > " + std::to_string(kMaxExhaustiveCells));
  int t = two_t / 2;
  auto start_time = std::chrono::steady_clock::now();

  detail::TuranSearch search{m, n, two_t};
  search.rows.assign(m, 0);
  auto seed = detail::turan_seed(m, n, t);
  if (seed) {
    search.best = seed->edge_count() - 1;  // search still has to realize it
    // Seed rows are only a bound; the witness below comes from the search.
  }
  search.assign(0, {{0, n}}, low_mask(n), 0);

  TuranResult r;
  r.m = m;
  r.n = n;
  r.cycle_length = two_t;
  r.value = search.best;
  r.witness = BipartiteGraph::from_rows(m, n, search.best_rows.empty()
                                                  ? std::vector<Bits>(m, 0)
                                                  : search.best_rows);
  r.formula_value = turan_formula_value(m, n, t);
  r.in_proven_range = n >= m && m >= t && 2 * t >= m + 2;
  r.stats.nodes = search.nodes;
  r.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  // Soundness: re-validate the witness independently.
  if (r.witness.edge_count() != r.value)
    throw std::logic_error("turan witness edge count mismatch");
  if (find_cycle_of_length(r.witness, two_t).has_value())
    throw std::logic_error("turan witness contains the forbidden cycle");
  return r;
}

struct ProbeReport {
  TuranResult result;
  long long formula_value = 0;
  long long lower_bound = 0;  // best construction edge count
  bool strict_excess = false;
};

// Regime where the Turan formula is disproved in general: t <= (m+1)/2.
// Reports the exact value against the formula; only value >= construction
// lower bound is asserted.
inline ProbeReport probe_outside_range(int m, int n, int two_t,
                                       bool override_guard = false) {
  if (two_t > m + 1)
    throw EnumError("probe_outside_range expects t <= (m+1)/2");
  ProbeReport p;
  p.result = turan_exact(m, n, two_t, override_guard);
  p.formula_value = p.result.formula_value;
  auto seed = detail::turan_seed(m, n, two_t / 2);
  p.lower_bound = seed ? seed->edge_count() : 0;
  if (p.result.value < p.lower_bound)
    throw std::logic_error("exact value below construction lower bound");
  p.strict_excess = p.result.value > p.formula_value;
  return p;
}

struct VerifyParams {
  int m = 0, n = 0;
  int t = 0;  // used by T1.2
  int k = 0;  // used by T1.4, T1.5i, T1.5ii
};

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int samples = 0;
};

namespace detail {

inline std::string details_line(const BipartiteGraph& g,
                                const std::string& extra) {
  return "e=" + std::to_string(g.edge_count()) +
         (extra.empty() ? "" : " " + extra);
}

// Deterministic small-int helper (std::uniform_int_distribution is not
// portable across standard libraries).
inline int rng_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

inline BipartiteGraph random_graph(int m, int n, std::mt19937_64& rng) {
  int density = rng_below(rng, 9) + 1;  // edge probability density/10
  std::vector<Bits> rows(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (rng_below(rng, 10) < density) rows[i] |= Bits{1} << j;
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

struct TheoremChecker {
  std::string clause;
  int min_edges = 0;  // exhaustive-mode edge filter implied by hypotheses
  std::function<std::optional<std::string>(const BipartiteGraph&)> check;
};

inline TheoremChecker make_checker(const std::string& id,
                                   const VerifyParams& p) {
  auto spectrum_gap = [](const BipartiteGraph& g, int lo, int hi)
      -> std::optional<std::string> {
    SpectrumReport r = even_spectrum(g);
    for (int L = lo; L <= hi; L += 2)
      if (!r.has(L)) return "missing cycle length " + std::to_string(L);
    return std::nullopt;
  };

  if (id == "T1.2") {
    int t = p.t;
    long long threshold = static_cast<long long>(t - 1) * (p.n - 1) + p.m;
    return {"e(G) > (t-1)(n-1)+m implies a cycle of length 2t",
            static_cast<int>(threshold + 1),
            [t, threshold](const BipartiteGraph& g)
                -> std::optional<std::string> {
              if (g.edge_count() <= threshold) return std::nullopt;
              if (2 * t > 2 * std::min(g.m(), g.n()))
                return "forbidden length exceeds 2*min(m,n)";
              if (!find_cycle_of_length(g, 2 * t))
                return "no cycle of length " + std::to_string(2 * t);
              return std::nullopt;
            }};
  }
  if (id == "T1.4") {
    int k = p.k;
    long long threshold = static_cast<long long>(p.n) * (p.m - k - 1) + k + 2;
    return {"e(G) >= n(m-k-1)+k+2 implies all even cycles 4..2m-2k",
            static_cast<int>(threshold),
            [k, threshold, spectrum_gap](const BipartiteGraph& g)
                -> std::optional<std::string> {
              if (g.edge_count() < threshold) return std::nullopt;
              return spectrum_gap(g, 4, 2 * g.m() - 2 * k);
            }};
  }
  if (id == "T1.5i" || id == "T1.5ii") {
    int k = p.k;
    long long threshold =
        static_cast<long long>(p.n - k - 1) * p.n + k + 2;
    bool part_one = id == "T1.5i";
    std::string clause =
        part_one ? "balanced: e(G) >= (n-k-1)n+k+2 implies c(G) >= 2n-2k"
                 : "balanced: e(G) >= (n-k-1)n+k+2 implies a full even "
                   "spectrum 4..c(G)";
    return {clause, static_cast<int>(threshold),
            [k, threshold, part_one, spectrum_gap](const BipartiteGraph& g)
                -> std::optional<std::string> {
              if (g.m() != g.n() || g.edge_count() < threshold)
                return std::nullopt;
              int c = circumference(g);
              if (part_one) {
                if (c < 2 * g.n() - 2 * k)
                  return "circumference " + std::to_string(c) + " < " +
                         std::to_string(2 * g.n() - 2 * k);
                return std::nullopt;
              }
              if (c == 0) return std::nullopt;  // hypothesis forces c>0 via (i)
              return spectrum_gap(g, 4, c);
            }};
  }
  if (id == "T1.7") {
    return {"rho(G-C) <= varrho(a,b) for a longest cycle C", 0,
            [](const BipartiteGraph& g) -> std::optional<std::string> {
              auto cyc = longest_cycle(g);
              if (!cyc) return std::nullopt;
              int a = std::max(g.m(), g.n()), b = std::min(g.m(), g.n());
              int c = cyc->length() / 2;
              VertexSet outside = g.all_vertices();
              for (VertexRef v : cyc->vertices) outside.erase(v);
              long long lhs = rho(g, outside);
              if (b <= 2 * c) {
                long long bound = static_cast<long long>(c) * (a - 1 - c) + b;
                if (lhs > bound)
                  return "rho(G-C)=" + std::to_string(lhs) + " > case-1 bound " +
                         std::to_string(bound);
              }
              if (b >= 2 * c) {
                long long bound =
                    static_cast<long long>(c) * (a + b + 1 - 3 * c);
                if (lhs > bound)
                  return "rho(G-C)=" + std::to_string(lhs) + " > case-2 bound " +
                         std::to_string(bound);
              }
              return std::nullopt;
            }};
  }
  if (id == "ES") {
    long long threshold = static_cast<long long>(p.n) * p.n / 2 + 1;
    return {"hamiltonian and e(G) > n^2/2 implies bipancyclic",
            static_cast<int>(threshold),
            [](const BipartiteGraph& g) -> std::optional<std::string> {
              if (g.m() != g.n() || 2 * g.n() < 8) return std::nullopt;
              if (2 * g.edge_count() <= g.n() * g.n()) return std::nullopt;
              if (!is_hamiltonian(g)) return std::nullopt;
              if (!is_bipancyclic(g)) return "hamiltonian, dense, not bipancyclic";
              return std::nullopt;
            }};
  }
  if (id == "L2.4") {
    return {"2-connected min-degree circumference bound", 0,
            [](const BipartiteGraph& g) -> std::optional<std::string> {
              if (!is_2connected(g)) return std::nullopt;
              // Orient so the X role is the larger part.
              const BipartiteGraph gg = g.m() >= g.n() ? g : g.transpose();
              int k = gg.n() + 1, l = gg.m() + 1;
              for (int i = 0; i < gg.m(); ++i) k = std::min(k, gg.deg_x(i));
              for (int j = 0; j < gg.n(); ++j) l = std::min(l, gg.deg_y(j));
              int c = circumference(gg);
              int bound = 2 * std::min({gg.n(), k + l - 1, 2 * k - 2});
              if (c < bound)
                return "c(G)=" + std::to_string(c) + " < " +
                       std::to_string(bound);
              if (k == l && gg.m() == gg.n()) {
                int bound2 = 2 * std::min(gg.n(), 2 * k - 1);
                if (c < bound2)
                  return "balanced equal-degree bound: c(G)=" +
                         std::to_string(c) + " < " + std::to_string(bound2);
              }
              return std::nullopt;
            }};
  }
  if (id == "L2.5") {
    return {"d(x)+d(y) >= n+2 for all cross pairs implies Hamilton-biconnected",
            0, [](const BipartiteGraph& g) -> std::optional<std::string> {
              if (g.m() != g.n()) return std::nullopt;
              for (int i = 0; i < g.m(); ++i)
                for (int j = 0; j < g.n(); ++j)
                  if (g.deg_x(i) + g.deg_y(j) < g.n() + 2)
                    return std::nullopt;
              if (!is_hamilton_biconnected(g))
                return "degree hypothesis holds but not Hamilton-biconnected";
              return std::nullopt;
            }};
  }
  if (id == "L2.7") {
    return {"maximal-path circumference bound", 0,
            [](const BipartiteGraph& g) -> std::optional<std::string> {
              if (!is_2connected(g)) return std::nullopt;
              int c = circumference(g);
              for (auto [i, j] : g.edge_list()) {
                PathWitness seed;
                seed.vertices = {vx(i), vy(j)};
                PathWitness pw = extend_to_maximal(g, seed);
                VertexRef u0 = pw.origin(), v0 = pw.terminus();
                int du = g.degree(u0), dv = g.degree(v0);
                int bound =
                    u0.side != v0.side
                        ? std::min(pw.order(), 2 * (du + dv - 1))
                        : std::min(pw.order() - 1, 2 * (du + dv - 2));
                if (c < bound)
                  return "maximal path of order " +
                         std::to_string(pw.order()) + ": c(G)=" +
                         std::to_string(c) + " < " + std::to_string(bound);
              }
              return std::nullopt;
            }};
  }
  if (id == "L2.8") {
    return {"d(x) >= max(|X|, |Y|/2+1) implies a cycle through X", 0,
            [](const BipartiteGraph& g) -> std::optional<std::string> {
              const BipartiteGraph gg = g.m() <= g.n() ? g : g.transpose();
              for (int i = 0; i < gg.m(); ++i) {
                int d = gg.deg_x(i);
                if (d < gg.m() || 2 * d < gg.n() + 2) return std::nullopt;
              }
              if (!cycle_through_X(gg)) return "no cycle through all of X";
              return std::nullopt;
            }};
  }
  throw UnknownTheorem("unknown theorem id: " + id);
}

}  // namespace detail

// Checks the theorem's conclusion on every in-scope graph satisfying its
// hypotheses; returns all violations (expected none). Exhaustive runs are
// sharded deterministically; jobs > 1 distributes shards across threads
// and merges in shard order, so results are independent of jobs.
inline std::vector<Violation> verify_theorem(const std::string& id,
                                             const VerifyParams& params,
                                             const VerifyMode& mode,
                                             int jobs = 1,
                                             bool override_guard = false) {
  detail::TheoremChecker checker = detail::make_checker(id, params);
  std::vector<Violation> out;
  auto record = [&](std::vector<Violation>& sink, const BipartiteGraph& g,
                    const std::string& why) {
    sink.push_back({g, id, checker.clause, detail::details_line(g, why)});
  };

  if (!mode.exhaustive) {
    std::mt19937_64 rng(mode.seed);
    for (int s = 0; s < mode.samples; ++s) {
      BipartiteGraph g = detail::random_graph(params.m, params.n, rng);
      if (auto why = checker.check(g)) record(out, g, *why);
    }
    return out;
  }

  int cells = params.m * params.n;
  int shard_bits = std::min(4, cells);
  int num_shards = 1 << shard_bits;
  std::vector<std::vector<Violation>> per_shard(num_shards);
  auto run_shard = [&](int s) {
    enumerate_graphs_shard(
        params.m, params.n, checker.min_edges, shard_bits,
        static_cast<std::uint64_t>(s),
        [&](const BipartiteGraph& g) {
          if (auto why = checker.check(g)) record(per_shard[s], g, *why);
        },
        override_guard);
  };
  if (jobs <= 1) {
    for (int s = 0; s < num_shards; ++s) run_shard(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (int s = next++; s < num_shards; s = next++) run_shard(s);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& shard : per_shard)
    out.insert(out.end(), shard.begin(), shard.end());
  return out;
}

}  // namespace bct

#endif  // BCT_ENUMERATION_HPP
