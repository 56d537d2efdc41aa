#include <catch2/catch_amalgamated.hpp>

#include "bct/bigraph.hpp"
#include "bct/constructions.hpp"
#include "bct/cycles.hpp"
#include "test_util.hpp"

using namespace bct;

TEST_CASE("case dispatch") {
  CHECK(l_case({3, 3, 3}) == 1);
  CHECK(l_case({5, 2, 2}) == 1);
  CHECK(l_case({4, 4, 3}) == 2);
  CHECK(l_case({4, 5, 3}) == 3);
  CHECK(l_case({5, 5, 2}) == 4);
  // (6,3,2): both the one-side-star and the two-block shapes qualify; the
  // star wins with 13 edges over 12, so case 2 fires first.
  CHECK(l_case({6, 3, 2}) == 2);
  CHECK(l_case({3, 6, 2}) == 3);
  CHECK(l_case({6, 6, 2}) == 4);
}

TEST_CASE("build_L matches its closed-form edge count") {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      for (int c = 1; c <= 8; ++c) {
        ExtremalParamsL p{a, b, c};
        auto g = build_L(p);
        CHECK(g.m() == a);
        CHECK(g.n() == b);
        CHECK(g.edge_count() == edge_count_L(p));
      }
}

TEST_CASE("build_L examples") {
  auto g = build_L({5, 5, 2});
  CHECK(g.edge_count() == 14);
  auto h = build_L({4, 4, 3});
  CHECK(h.edge_count() == 13);
  CHECK(build_L({3, 3, 3}) == test::complete(3, 3));
  CHECK_THROWS_AS(build_L({0, 3, 2}), InvalidParams);
}

TEST_CASE("build_L circumference is 2 * min(a, b, c)") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 6; ++c)
        CHECK(circumference(build_L({a, b, c})) ==
              2 * std::min({a, b, c}));
}

TEST_CASE("varrho") {
  CHECK(varrho({5, 5, 2}) == 10);
  CHECK(varrho({4, 4, 3}) == 4);
  CHECK(varrho({3, 3, 3}) == 0);
  CHECK_THROWS_AS(varrho({3, 4, 2}), InvalidParams);  // wants c <= b <= a
}

TEST_CASE("varrho is attained by deleting a longest cycle") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c) {
        ExtremalParamsL p{a, b, c};
        auto g = build_L(p);
        auto cyc = find_cycle_of_length(g, 2 * c);
        REQUIRE(cyc);
        auto s = cyc->vertex_set();
        int induced = rho(g, s) - e_between(g, s, VertexSet{low_mask(a) & ~s.x,
                                                            low_mask(b) & ~s.y});
        CHECK(g.edge_count() - induced == varrho(p));
      }
}

TEST_CASE("gyori extremal graph") {
  ExtremalParamsGyori p{6, 6, 1};
  auto g = build_gyori_extremal(p);
  CHECK(g.m() == 6);
  CHECK(g.n() == 6);
  CHECK(g.edge_count() == gyori_edge_count(p));
  CHECK(gyori_edge_count(p) == 26);
  CHECK(circumference(g) == 8);

  // k = 0: one pendant X vertex on y_0
  ExtremalParamsGyori q{4, 5, 0};
  auto h = build_gyori_extremal(q);
  CHECK(h.edge_count() == 16);
  CHECK(circumference(h) == 6);

  CHECK_THROWS_AS(build_gyori_extremal({4, 4, 2}), InvalidParams);  // m < 2k+2
  CHECK_THROWS_AS(build_gyori_extremal({5, 4, 1}), InvalidParams);  // n < m
}

TEST_CASE("gyori circumference across a small sweep") {
  for (int k = 0; k <= 2; ++k)
    for (int m = 2 * k + 2; m <= 7; ++m)
      for (int n = m; n <= 8; ++n) {
        auto g = build_gyori_extremal({m, n, k});
        if (2 * m - 2 * k - 2 >= 4)
          CHECK(circumference(g) == 2 * m - 2 * k - 2);
      }
}

TEST_CASE("turan formula value") {
  CHECK(turan_formula_value(4, 5, 3) == 12);
  CHECK(turan_formula_value(5, 5, 3) == 13);
  CHECK(turan_formula_value(2, 3, 2) == 4);
}

TEST_CASE("known_bounds") {
  auto bounds = known_bounds(5, 5, 3);
  auto get = [&](const std::string& name) -> const BoundEntry& {
    for (const auto& b : bounds)
      if (b.name == name) return b;
    FAIL("missing bound " + name);
    return bounds.front();
  };
  const auto& tf = get("turan_formula");
  CHECK_FALSE(tf.applicable);  // t = 3 < 5/2 + 1, the disproved regime
  CHECK(tf.value == 13.0);
  CHECK(known_bounds(5, 5, 4)[5].name == "turan_formula");
  CHECK(known_bounds(5, 5, 4)[5].applicable);  // 5 >= 5 >= 4 >= 5/2 + 1
  const auto& jl = get("jackson_large_part");
  CHECK(jl.applicable);  // small = 5 >= 2t-2 = 4
  CHECK(jl.value == (5 + 5 - 6 + 3) * 2);
  const auto& ex = get("exact_c2t_threshold");
  CHECK_FALSE(ex.applicable);  // needs m <= 2t-2 = 4
  const auto& nv = get("naor_verstraete");
  CHECK(nv.applicable);
  CHECK_FALSE(nv.integral);
  CHECK(nv.value > 0);

  auto b2 = known_bounds(4, 6, 3);
  for (const auto& b : b2)
    if (b.name == "exact_c2t_threshold") {
      CHECK(b.applicable);  // 3 <= 4 <= 4
      CHECK(b.value == 2 * 5 + 4);
    }
}
