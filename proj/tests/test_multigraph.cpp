#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "matchfactory/constructions.hpp"
#include "matchfactory/io.hpp"
#include "matchfactory/multigraph.hpp"

using namespace matchfactory;

namespace {

Multigraph random_multigraph(std::mt19937& rng, VertexId n, EdgeId m) {
  Multigraph g(n);
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  for (EdgeId i = 0; i < m; ++i) {
    VertexId a = pick(rng), b = pick(rng);
    if (a == b) b = (b + 1) % n;
    g.add_edge(a, b);
  }
  return g;
}

std::vector<VertexId> identity_map(VertexId n) {
  std::vector<VertexId> v(n);
  for (VertexId i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("loops and range errors are rejected") {
  Multigraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("boundary counts multiplicity") {
  auto [p, lab] = petersen();
  CHECK(boundary(p, {lab.outer[0]}).size() == 3);  // cubic vertex
  std::vector<VertexId> all(10);
  for (VertexId v = 0; v < 10; ++v) all[v] = v;
  CHECK(boundary(p, all).empty());
  CHECK_THROWS_AS(boundary(p, {42}), std::invalid_argument);

  // P_1: u1 has two parallel spokes plus two pentagram edges.
  PetersenHost p1 = build_p(1);
  CHECK(boundary(p1.g, {p1.labeling.inner[0]}).size() == 4);
}

TEST_CASE("boundary is symmetric under complement") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Multigraph g = random_multigraph(rng, 12, 24);
    std::vector<VertexId> s;
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < 12; ++v)
      (rng() % 2 ? s : rest).push_back(v);
    CHECK(boundary(g, s).size() == boundary(g, rest).size());
  }
}

TEST_CASE("add_matchings appends fresh copies in family order") {
  auto [p, lab] = petersen();
  const auto& cm = canonical_matchings();

  Multigraph p1 = add_matchings(p, {cm.m[0]});
  CHECK(p1.edge_count() == 20);
  CHECK(is_regular(p1) == std::optional<std::uint32_t>{4});

  CHECK(add_matchings(p, {}).edge_count() == 15);

  Multigraph twice = add_matchings(p, {cm.m[0], cm.m[0]});
  CHECK(twice.edge_count() == 25);
  auto pc = pair_classes(twice);
  for (EdgeId spoke : cm.m[0])
    CHECK(pc.members[pc.class_of[spoke]].size() == 3);

  CHECK_THROWS_AS(add_matchings(p, {{99}}), std::invalid_argument);
}

TEST_CASE("add then delete the added copies is the identity") {
  std::mt19937 rng(13);
  for (int it = 0; it < 25; ++it) {
    Multigraph g = random_multigraph(rng, 10, 18);
    std::vector<EdgeId> member{0, 3, 7};
    Multigraph bigger = add_matchings(g, {member});
    std::vector<EdgeId> added;
    for (EdgeId e = g.edge_count(); e < bigger.edge_count(); ++e)
      added.push_back(e);
    Multigraph back = delete_edges(bigger, added).graph;
    CHECK(edge_multiset_equal(back, g, identity_map(10)));
  }
}

TEST_CASE("identify_vertices merges and forbids loops") {
  // two disjoint edges x-y, a-b; identifying y and a gives a path
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto res = identify_vertices(g, 1, 2);
  CHECK(res.graph.vertex_count() == 3);
  CHECK(res.graph.edge_count() == 2);
  auto deg = res.graph.degrees();
  CHECK(deg[res.merged] == 2);

  Multigraph h(2);
  h.add_edge(0, 1);
  CHECK_THROWS_AS(identify_vertices(h, 0, 1), std::invalid_argument);
}

TEST_CASE("identify_vertices adds degrees") {
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  auto res = identify_vertices(g, 0, 3);
  CHECK(res.graph.degrees()[res.merged] == 3);
}

TEST_CASE("delete_edges returns a consistent id map") {
  auto [p, lab] = petersen();
  auto res = delete_edges(p, {lab.spokes[0], lab.spokes[2]});
  CHECK(res.graph.edge_count() == 13);
  CHECK(res.edge_map[lab.spokes[0]] == kNoEdge);
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    if (res.edge_map[e] != kNoEdge) {
      CHECK(res.graph.edge(res.edge_map[e]).a == p.edge(e).a);
      CHECK(res.graph.edge(res.edge_map[e]).b == p.edge(e).b);
    }
  CHECK(delete_edges(p, {}).graph.edge_count() == 15);
  CHECK_THROWS_AS(delete_edges(p, {99}), std::invalid_argument);
}

TEST_CASE("is_regular") {
  auto [p, lab] = petersen();
  CHECK(is_regular(p) == std::optional<std::uint32_t>{3});
  Multigraph g(3);
  g.add_edge(0, 1);
  CHECK(!is_regular(g));
}

TEST_CASE("edge_multiset_equal compares under a vertex bijection") {
  auto [p, lab] = petersen();
  CHECK(edge_multiset_equal(p, p, identity_map(10)));

  const auto& cm = canonical_matchings();
  Multigraph p1 = add_matchings(p, {cm.m[0]});
  Multigraph pm1 = add_matchings(p, {cm.m[1]});
  CHECK(!edge_multiset_equal(p1, pm1, identity_map(10)));

  std::vector<VertexId> not_bijective(10, 0);
  CHECK_THROWS_AS(edge_multiset_equal(p, p, not_bijective),
                  std::invalid_argument);

  // invariance under a relabeling applied to both sides
  std::mt19937 rng(3);
  std::vector<VertexId> perm = identity_map(10);
  std::shuffle(perm.begin(), perm.end(), rng);
  Multigraph moved = permute_vertices(p1, perm);
  CHECK(edge_multiset_equal(p1, moved, perm));
}

TEST_CASE("serialize/parse round trip") {
  std::mt19937 rng(99);
  for (int it = 0; it < 20; ++it) {
    Multigraph g = random_multigraph(rng, 9, 15);
    Multigraph back = parse(serialize(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(back.edge(e).a == g.edge(e).a);
      CHECK(back.edge(e).b == g.edge(e).b);
    }
  }
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(parse("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse("{\"n\": 10}"), std::invalid_argument);
  CHECK_THROWS_AS(parse("{\"n\": 10, \"edges\": [[3,3]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse("{\"n\": 10, \"edges\": [[0,99]]}"),
                  std::invalid_argument);
}

TEST_CASE("dot export repeats parallel edges") {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  std::string dot = to_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 4);  // two "--" statements
}

TEST_CASE("pair classes group parallel copies") {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 0);
  auto pc = pair_classes(g);
  CHECK(pc.count() == 2);
  CHECK(pc.class_of[0] == pc.class_of[2]);
  CHECK(pc.members[pc.class_of[0]] == std::vector<EdgeId>{0, 2});
}
