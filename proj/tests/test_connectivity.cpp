#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "matchfactory/connectivity.hpp"
#include "matchfactory/constructions.hpp"

using namespace matchfactory;

namespace {

Multigraph random_connected(std::mt19937& rng, VertexId n, EdgeId extra) {
  Multigraph g(n);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  for (VertexId v = 1; v < n; ++v)
    g.add_edge(v, static_cast<VertexId>(rng() % v));
  for (EdgeId i = 0; i < extra; ++i) {
    VertexId a = pick(rng), b = pick(rng);
    if (a == b) b = (b + 1) % n;
    g.add_edge(a, b);
  }
  return g;
}

// Brute-force global min cut by subset enumeration.
std::uint64_t brute_min_cut(const Multigraph& g) {
  std::uint64_t best = UINT64_MAX;
  VertexId n = g.vertex_count();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::uint64_t w = 0;
    for (const Edge& e : g.edges())
      if (((mask >> e.a) & 1) != ((mask >> e.b) & 1)) ++w;
    best = std::min(best, w);
  }
  return best;
}

Multigraph bridged_cubic() {
  // two K_4's with one subdivided edge each, bridge between the
  // subdivision vertices
  Multigraph g(10);
  for (int side = 0; side < 2; ++side) {
    VertexId o = static_cast<VertexId>(5 * side);
    g.add_edge(o + 0, o + 1);
    g.add_edge(o + 0, o + 2);
    g.add_edge(o + 0, o + 3);
    g.add_edge(o + 1, o + 2);
    g.add_edge(o + 1, o + 3);
    g.add_edge(o + 2, o + 4);  // subdivided edge 2-3 via vertex 4
    g.add_edge(o + 3, o + 4);
  }
  g.add_edge(4, 9);
  return g;
}

}  // namespace

TEST_CASE("edge connectivity on known graphs") {
  auto [p, lab] = petersen();
  CHECK(edge_connectivity(p) == 3);

  // two triangles joined by one edge -> bridge
  Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  g.add_edge(0, 3);
  CHECK(edge_connectivity(g) == 1);

  Multigraph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK(edge_connectivity(disconnected) == 0);
}

TEST_CASE("stoer-wagner matches subset brute force") {
  std::mt19937 rng(17);
  for (int it = 0; it < 40; ++it) {
    Multigraph g = random_connected(rng, 8, 10);
    CHECK(edge_connectivity(g) == brute_min_cut(g));
  }
}

TEST_CASE("edge connectivity is at most the minimum degree") {
  std::mt19937 rng(23);
  for (int it = 0; it < 40; ++it) {
    Multigraph g = random_connected(rng, 10, 14);
    auto deg = g.degrees();
    CHECK(edge_connectivity(g) <=
          *std::min_element(deg.begin(), deg.end()));
  }
}

TEST_CASE("max_flow equals min cut on parallel edges") {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(max_flow(g, 0, 1) == 2);
}

TEST_CASE("gomory-hu tree on simple known graphs") {
  // star K_{1,3}: the tree is the star itself with unit capacities
  Multigraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  GomoryHuTree t = gomory_hu(star);
  REQUIRE(t.edges.size() == 3);
  for (const auto& e : t.edges) CHECK(e.capacity == 1);

  // C_4: every pairwise min cut is 2
  Multigraph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  GomoryHuTree tc = gomory_hu(c4);
  for (VertexId s = 0; s < 4; ++s)
    for (VertexId u = s + 1; u < 4; ++u) CHECK(tc.min_cut(s, u) == 2);

  CHECK_THROWS_AS(gomory_hu(Multigraph(2)), std::invalid_argument);
}

TEST_CASE("gomory-hu pairwise values equal direct max flows") {
  // Petersen: all 45 pairwise min cuts are 3.
  auto [p, lab] = petersen();
  GomoryHuTree t = gomory_hu(p);
  for (VertexId s = 0; s < 10; ++s)
    for (VertexId u = s + 1; u < 10; ++u) {
      CHECK(t.min_cut(s, u) == 3);
      CHECK(max_flow(p, s, u) == 3);
    }

  // random pairs on random multigraphs
  std::mt19937 rng(41);
  int pairs_checked = 0;
  while (pairs_checked < 200) {
    Multigraph g = random_connected(rng, 3 + rng() % 14, rng() % 30);
    GomoryHuTree t2 = gomory_hu(g);
    std::uniform_int_distribution<VertexId> pick(0, g.vertex_count() - 1);
    for (int i = 0; i < 5; ++i) {
      VertexId s = pick(rng), u = pick(rng);
      if (s == u) continue;
      CHECK(t2.min_cut(s, u) == max_flow(g, s, u));
      ++pairs_checked;
    }
  }
}

TEST_CASE("gomory-hu fundamental cuts achieve their capacity") {
  std::mt19937 rng(43);
  for (int it = 0; it < 20; ++it) {
    Multigraph g = random_connected(rng, 9, 12);
    GomoryHuTree t = gomory_hu(g);
    for (std::size_t i = 0; i < t.edges.size(); ++i)
      CHECK(boundary(g, t.fundamental_side(i)).size() == t.edges[i].capacity);
  }
}

TEST_CASE("min odd cut on known graphs") {
  auto [p, lab] = petersen();
  Cut c = min_odd_cut(p);
  CHECK(c.weight == 3);
  CHECK(c.side.size() % 2 == 1);

  Multigraph dbl(2);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  CHECK(min_odd_cut(dbl).weight == 2);

  Multigraph odd(3);
  odd.add_edge(0, 1);
  odd.add_edge(1, 2);
  CHECK_THROWS_AS(min_odd_cut(odd), std::invalid_argument);

  Multigraph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK_THROWS_AS(min_odd_cut(disconnected), std::invalid_argument);
}

TEST_CASE("min odd cut dominates edge connectivity") {
  std::mt19937 rng(47);
  for (int it = 0; it < 30; ++it) {
    Multigraph g = random_connected(rng, 10, 15);
    CHECK(min_odd_cut(g).weight >= edge_connectivity(g));
  }
}

TEST_CASE("min odd cut agrees with subset brute force") {
  std::mt19937 rng(53);
  for (int it = 0; it < 30; ++it) {
    Multigraph g = random_connected(rng, 8, 11);
    std::uint64_t best = UINT64_MAX;
    for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      std::uint64_t w = 0;
      for (const Edge& e : g.edges())
        if (((mask >> e.a) & 1) != ((mask >> e.b) & 1)) ++w;
      best = std::min(best, w);
    }
    CHECK(min_odd_cut(g).weight == best);
  }
}

TEST_CASE("is_r_graph") {
  auto [p, lab] = petersen();
  CHECK(is_r_graph(p) == std::optional<std::uint32_t>{3});
  CHECK(!is_r_graph(bridged_cubic()));  // bridge gives an odd cut of size 1
  CHECK(is_regular(bridged_cubic()) == std::optional<std::uint32_t>{3});
}
