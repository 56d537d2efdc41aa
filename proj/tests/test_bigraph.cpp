#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bct/bigraph.hpp"
#include "bct/graph_io.hpp"
#include "test_util.hpp"

using namespace bct;
using test::complete;
using test::from_mask;

TEST_CASE("from_edge_list basics") {
  auto k22 = BipartiteGraph::from_edge_list(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(k22.edge_count() == 4);
  CHECK(k22 == complete(2, 2));

  auto empty = BipartiteGraph::from_edge_list(1, 1, {});
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(BipartiteGraph::from_edge_list(2, 3, {{0, 0}, {0, 3}}),
                  IndexOutOfRange);
  CHECK_THROWS_AS(BipartiteGraph::from_edge_list(2, 2, {{0, 0}, {0, 0}}),
                  DuplicateEdge);
}

TEST_CASE("rho") {
  auto k22 = complete(2, 2);
  for (int i = 0; i < 2; ++i) {
    VertexSet s;
    s.insert(vx(i));
    CHECK(rho(k22, s) == k22.deg_x(i));
  }
  CHECK(rho(k22, {}) == 0);
  CHECK(rho(k22, k22.x_side()) == 4);
}

TEST_CASE("rho equals removed-edge difference, exhaustively at (3,3)") {
  for (std::uint64_t mask = 0; mask < (1u << 9); mask += 7) {
    auto g = from_mask(3, 3, mask);
    for (Bits sx = 0; sx < 8; ++sx)
      for (Bits sy = 0; sy < 8; ++sy) {
        VertexSet s{sx, sy};
        if (s.size() == 6 || (sx == 7 || sy == 7)) continue;  // keep sides nonempty
        int expected = g.edge_count() - remove_vertices(g, s).edge_count();
        CHECK(rho(g, s) == expected);
      }
  }
}

TEST_CASE("rho monotone under set inclusion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(4, 4, 50, rng);
    Bits sx = rng() & 0xF, sy = rng() & 0xF;
    Bits tx = sx | (rng() & 0xF), ty = sy | (rng() & 0xF);
    CHECK(rho(g, {sx, sy}) <= rho(g, {tx, ty}));
  }
}

TEST_CASE("e_between") {
  auto k22 = complete(2, 2);
  CHECK(e_between(k22, {0b01, 0}, {0, 0b11}) == 2);
  auto edgeless = BipartiteGraph(2, 2);
  CHECK(e_between(edgeless, {0b01, 0}, {0b10, 0b11}) == 0);
  auto k33 = complete(3, 3);
  CHECK(e_between(k33, k33.x_side(), k33.y_side()) == 9);
  CHECK_THROWS_AS(e_between(k22, {0b01, 0}, {0b01, 0b01}), OverlappingSets);
}

TEST_CASE("degree-sum identity restricted to S") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = test::random_graph(4, 3, 60, rng);
    Bits sx = rng() & 0xF, sy = rng() & 0x7;
    VertexSet s{sx, sy};
    VertexSet rest{low_mask(4) & ~sx, low_mask(3) & ~sy};
    int inside = 0;
    for (Bits b = sx; b; b &= b - 1)
      inside += bit_count(g.row(lowest_bit(b)) & sy);
    int deg_sum = 0;
    for (Bits b = sx; b; b &= b - 1) deg_sum += g.deg_x(lowest_bit(b));
    for (Bits b = sy; b; b &= b - 1) deg_sum += g.deg_y(lowest_bit(b));
    CHECK(e_between(g, s, rest) + 2 * inside == deg_sum);
  }
}

TEST_CASE("components and connectivity") {
  // two disjoint K_{2,2}
  auto g = BipartiteGraph::from_edge_list(
      4, 4,
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 4);
  CHECK_FALSE(is_connected(g));

  CHECK(is_2connected(complete(2, 2)));
  auto path = BipartiteGraph::from_edge_list(2, 1, {{0, 0}, {1, 0}});
  CHECK_FALSE(is_2connected(path));
}

TEST_CASE("components partition the vertices and edges stay inside") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = test::random_graph(4, 4, 25, rng);
    auto comps = components(g);
    VertexSet all;
    int total = 0;
    for (const auto& c : comps) {
      CHECK((all & c).empty());
      all = all | c;
      total += c.size();
    }
    CHECK(all == g.all_vertices());
    CHECK(total == 8);
    for (auto [i, j] : g.edge_list()) {
      for (const auto& c : comps)
        CHECK(c.contains(vx(i)) == c.contains(vy(j)));
    }
  }
}

TEST_CASE("block decomposition examples") {
  auto bd = block_decomposition(complete(2, 2));
  CHECK(bd.blocks.size() == 1);
  CHECK(bd.cut_vertices.empty());

  // two K_{2,2}'s sharing the Y vertex y0
  auto shared = BipartiteGraph::from_edge_list(
      4, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 0}, {3, 2}});
  auto bd2 = block_decomposition(shared);
  CHECK(bd2.blocks.size() == 2);
  CHECK(bd2.cut_vertices.size() == 1);
  CHECK(bd2.cut_vertices.contains(vy(0)));
  CHECK(bd2.end_block == std::vector<bool>{true, true});

  // path x0 - y0 - x1
  auto path = BipartiteGraph::from_edge_list(2, 1, {{0, 0}, {1, 0}});
  auto bd3 = block_decomposition(path);
  CHECK(bd3.blocks.size() == 2);
  CHECK(bd3.cut_vertices.size() == 1);
  CHECK(bd3.cut_vertices.contains(vy(0)));

  auto disconnected = BipartiteGraph(2, 2);
  CHECK_THROWS_AS(block_decomposition(disconnected), DisconnectedInput);
}

TEST_CASE("block decomposition vs naive cut-vertex oracle") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (std::uint64_t mask = 0; mask < (Bits{1} << (m * n)); ++mask) {
        auto g = from_mask(m, n, mask);
        if (!is_connected(g)) continue;
        auto bd = block_decomposition(g);
        for (int i = 0; i < m; ++i)
          CHECK(bd.cut_vertices.contains(vx(i)) ==
                test::naive_is_cut_vertex(g, vx(i)));
        for (int j = 0; j < n; ++j)
          CHECK(bd.cut_vertices.contains(vy(j)) ==
                test::naive_is_cut_vertex(g, vy(j)));
        // every edge lies in exactly one block
        for (auto [i, j] : g.edge_list()) {
          int hits = 0;
          for (const auto& b : bd.blocks)
            if (b.contains(vx(i)) && b.contains(vy(j))) ++hits;
          CHECK(hits == 1);
        }
        // a vertex is a cut vertex iff it lies in >= 2 blocks
        for (int i = 0; i < m; ++i) {
          int in_blocks = 0;
          for (const auto& b : bd.blocks)
            if (b.contains(vx(i))) ++in_blocks;
          if (g.deg_x(i) > 0)
            CHECK((in_blocks >= 2) == bd.cut_vertices.contains(vx(i)));
        }
      }
}

TEST_CASE("good pairs") {
  // two K_{2,2}'s sharing Y vertex y0; x0 is an inner vertex of block 1.
  auto shared = BipartiteGraph::from_edge_list(
      4, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 2}, {3, 0}, {3, 2}});
  CHECK(is_good_pair(shared, vx(0), vy(0)));
  // both inner in one end-block, neither in the other: no block sees
  // exactly one of them
  CHECK_FALSE(is_good_pair(shared, vx(0), vx(1)));
  // one inner vertex per end-block: good (each end-block sees exactly one).
  CHECK(is_good_pair(shared, vx(0), vx(2)));

  CHECK_THROWS_AS(is_good_pair(complete(2, 2), vx(0), vx(1)),
                  NotConnectivityOne);
}

TEST_CASE("graph file round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = test::random_graph(5, 4, 40, rng);
    std::stringstream ss;
    serialize_graph(ss, g);
    auto h = parse_graph(ss);
    CHECK(g == h);
  }
}

TEST_CASE("graph file parser rejects bad input") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_graph(in);
  };
  CHECK_THROWS_AS(parse("e 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p bip 2 2\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse("p bip 2 2\ne 1 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p bip 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse("q bip 2 2\n"), ParseError);
  auto g = parse("c a comment\np bip 2 3\ne 1 1\ne 2 3\n");
  CHECK(g.m() == 2);
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 0));
  CHECK(g.has_edge(1, 2));
}
