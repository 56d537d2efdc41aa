#ifndef BCT_CONSTRUCTIONS_HPP
#define BCT_CONSTRUCTIONS_HPP

// Extremal graph generators and closed-form edge counts / thresholds.

#include <cmath>
#include <string>
#include <vector>

#include "bct/bigraph.hpp"

namespace bct {

struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtremalParamsL {
  int a = 0, b = 0, c = 0;

  void check() const {
    if (a < 1 || b < 1 || c < 1)
      throw InvalidParams("L params require a, b, c >= 1");
    if (a > BipartiteGraph::kMaxSide || b > BipartiteGraph::kMaxSide)
      throw InvalidParams("L params too large");
  }
};

struct ExtremalParamsGyori {
  int m = 0, n = 0, k = 0;

  void check() const {
    if (k < 0 || m < 2 * k + 2 || n < m || m - k - 1 < 1)
      throw InvalidParams("gyori params require n >= m >= 2k+2, k >= 0");
    if (n > BipartiteGraph::kMaxSide)
      throw InvalidParams("gyori params too large");
  }
};

// Case dispatch for the longest-cycle-at-most-2c extremal graph. The four
// cases are tried in order; the first match wins (at a = b the star can
// attach on either side, the two graphs are isomorphic under a part swap).
// 1: min(a,b) <= c          -> K_{a,b}
// 2: c < b <= min(a, 2c)    -> K_{a,c} with a K_{1,b-c} star at an X vertex
// 3: c < a <= min(b, 2c)    -> K_{b,c} with a K_{1,a-c} star at a Y vertex
// 4: 2c < max(a,b)          -> K_{c,b-c} and K_{a-c+1,c} sharing an X vertex
inline int l_case(const ExtremalParamsL& p) {
  p.check();
  if (p.a <= p.c || p.b <= p.c) return 1;
  if (p.b <= std::min(p.a, 2 * p.c)) return 2;
  if (p.a <= std::min(p.b, 2 * p.c)) return 3;
  return 4;  // here min(a,b) > c and max(a,b) > 2c
}

// X part has size a and Y part size b in every case. The identified vertex
// is index 0 of its side; star leaves occupy the highest indices.
inline BipartiteGraph build_L(const ExtremalParamsL& p) {
  const auto [a, b, c] = p;
  std::vector<Bits> rows(a, 0);
  switch (l_case(p)) {
    case 1:
      for (int i = 0; i < a; ++i) rows[i] = low_mask(b);
      break;
    case 2:
      for (int i = 0; i < a; ++i) rows[i] = low_mask(c);
      rows[0] |= low_mask(b) & ~low_mask(c);  // pendant leaves y_c..y_{b-1}
      break;
    case 3:
      for (int i = 0; i < c; ++i) rows[i] = low_mask(b);
      for (int i = c; i < a; ++i) rows[i] = 1;  // leaves hang off y_0
      break;
    case 4:
      // Block A = K_{c,b-c} on X {0..c-1} x Y {c..b-1};
      // block B = K_{a-c+1,c} on X {0, c..a-1} x Y {0..c-1}; shared x_0.
      for (int i = 0; i < c; ++i) rows[i] = low_mask(b) & ~low_mask(c);
      rows[0] |= low_mask(c);
      for (int i = c; i < a; ++i) rows[i] = low_mask(c);
      break;
  }
  return BipartiteGraph::from_rows(a, b, std::move(rows));
}

inline long long edge_count_L(const ExtremalParamsL& p) {
  const auto [a, b, c] = p;
  switch (l_case(p)) {
    case 1: return static_cast<long long>(a) * b;
    case 2: return static_cast<long long>(a) * c + (b - c);
    case 3: return static_cast<long long>(b) * c + (a - c);
    default: return static_cast<long long>(c) * (b - c) +
                    static_cast<long long>(a - c + 1) * c;
  }
}

// e(L_{a,b}^c) - c^2, the extremal value of rho(G - C). Only defined in the
// regime c <= b <= a.
inline long long varrho(const ExtremalParamsL& p) {
  p.check();
  if (!(p.c <= p.b && p.b <= p.a))
    throw InvalidParams("varrho requires c <= b <= a");
  return edge_count_L(p) - static_cast<long long>(p.c) * p.c;
}

namespace detail {

// K_{m-k-1,n} with the star K_{1,k+1} identified at Y vertex 0; the k+1
// leaves take the top X indices. No regime check (the Turan search also
// wants this graph outside n >= m >= 2k+2).
inline BipartiteGraph gyori_shape(int m, int n, int k) {
  std::vector<Bits> rows(m, 0);
  for (int i = 0; i < m - k - 1; ++i) rows[i] = low_mask(n);
  for (int i = m - k - 1; i < m; ++i) rows[i] = 1;
  return BipartiteGraph::from_rows(m, n, std::move(rows));
}

}  // namespace detail

// Edge count (m-k-1)n + k + 1; circumference 2m-2k-2 (when >= 4).
inline BipartiteGraph build_gyori_extremal(const ExtremalParamsGyori& p) {
  p.check();
  return detail::gyori_shape(p.m, p.n, p.k);
}

inline long long gyori_edge_count(const ExtremalParamsGyori& p) {
  p.check();
  return static_cast<long long>(p.m - p.k - 1) * p.n + p.k + 1;
}

struct BoundEntry {
  std::string name;
  double value = 0;
  bool integral = true;
  bool applicable = false;
  std::string note;
};

inline long long turan_formula_value(int m, int n, int t) {
  return static_cast<long long>(t - 1) * n + m - t + 1;
}

// Known thresholds and bounds evaluated at (m, n, t); out-of-range
// parameters are reported with applicable = false rather than rejected.
inline std::vector<BoundEntry> known_bounds(int m, int n, int t) {
  std::vector<BoundEntry> out;
  int big = std::max(m, n), small = std::min(m, n);

  // Long-cycle edge thresholds (cycle of length >= 2t above these).
  out.push_back({"jackson_small_part",
                 static_cast<double>((big - 1) * (t - 1) + small), true,
                 small >= t && t >= 2 && small <= 2 * t - 2,
                 "e(G) > (N-1)(t-1)+M forces a cycle of length >= 2t, M <= 2t-2"});
  out.push_back({"jackson_large_part",
                 static_cast<double>((big + small - 2 * t + 3) * (t - 1)), true,
                 small >= t && t >= 2 && small >= 2 * t - 2,
                 "e(G) > (M+N-2t+3)(t-1) forces a cycle of length >= 2t, M >= 2t-2"});
  // Exact-length threshold: e(G) > (t-1)(n-1)+m forces C_{2t}.
  out.push_back({"exact_c2t_threshold",
                 static_cast<double>((t - 1) * (n - 1) + m), true,
                 n >= m && t <= m && m <= 2 * t - 2,
                 "e(G) > (t-1)(n-1)+m forces C_{2t}, for t <= m <= 2t-2"});
  // Consecutive even cycles threshold, with k = m - t.
  {
    int k = m - t;
    out.push_back({"consecutive_cycles_threshold",
                   static_cast<double>(n * (m - k - 1) + k + 2), true,
                   k >= 0 && n >= m && m >= 2 * k + 2,
                   "e(G) >= n(m-k-1)+k+2 gives all even cycles 4..2m-2k, k = m-t"});
    out.push_back({"balanced_circumference_threshold",
                   static_cast<double>((n - k - 1) * n + k + 2), true,
                   k >= 0 && m == n && n >= 2 * k + 2,
                   "balanced: e(G) >= (n-k-1)n+k+2 gives c(G) >= 2n-2k and a full spectrum"});
  }
  out.push_back({"turan_formula",
                 static_cast<double>(turan_formula_value(m, n, t)), true,
                 n >= m && m >= t && 2 * t >= m + 2,
                 "ex(m,n,C_2t) = (t-1)n+m-t+1 for n >= m >= t >= m/2+1"});
  {
    double mn = static_cast<double>(m) * n;
    double v;
    if (t % 2 == 1)
      v = (2.0 * t - 3) * (std::pow(mn, (t + 1.0) / (2.0 * t)) + m + n);
    else
      v = (2.0 * t - 3) *
          (std::pow(m, (t + 2.0) / (2.0 * t)) * std::sqrt(static_cast<double>(n)) + m + n);
    out.push_back({"naor_verstraete", v, false, m <= n && t >= 2,
                   "ex(m,n,C_2t) upper bound, parity-of-t branch applied"});
  }
  return out;
}

}  // namespace bct

#endif  // BCT_CONSTRUCTIONS_HPP
