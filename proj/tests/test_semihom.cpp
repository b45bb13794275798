#include "dichroma/semihom.hpp"

#include "doctest.h"

#include "dichroma/rng.hpp"
#include "dichroma/solver.hpp"
#include "test_util.hpp"

using namespace dichroma;
using test_util::cycle_graph;
using test_util::graph;

namespace {

VertexMap identity_on(const Digraph& d) {
  VertexMap map;
  for (VertexId v : d.vertices()) map[v] = v;
  return map;
}

VertexMap constant_map(const Digraph& d, VertexId target) {
  VertexMap map;
  for (VertexId v : d.vertices()) map[v] = target;
  return map;
}

// Random triple where the map is a semihomomorphism by construction.
struct Triple {
  Digraph source, target;
  VertexMap map;
};

Triple random_semihom_triple(Rng& rng, bool forbid_intra_fiber_edges) {
  int target_n = 1 + rng.below(4);
  Digraph target = random_digraph(rng, target_n, 100 * (1 + rng.below(9)));
  int source_n = 1 + rng.below(8);
  VertexMap map;
  for (int v = 0; v < source_n; ++v) map[v] = rng.below(target_n);
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (int v = 0; v < source_n; ++v) vertices.push_back(v);
  for (int u = 0; u < source_n; ++u)
    for (int v = 0; v < source_n; ++v) {
      if (u == v) continue;
      bool allowed =
          map[u] == map[v] ? !forbid_intra_fiber_edges : target.has_edge(map[u], map[v]);
      if (allowed && rng.chance(500)) edges.emplace_back(u, v);
    }
  return {Digraph::validate(std::move(vertices), std::move(edges)), std::move(target),
          std::move(map)};
}

}  // namespace

TEST_CASE("is_semihom accepts identity and collapse, rejects a broken edge") {
  Digraph tri = cycle_graph(3);
  CHECK(is_semihom(tri, tri, identity_on(tri)));

  Digraph point = graph({7}, {});
  CHECK(is_semihom(tri, point, constant_map(tri, 7)));

  Digraph pair_no_edge = graph({0, 1}, {});
  Digraph one_edge = graph({0, 1}, {{0, 1}});
  CHECK_FALSE(is_semihom(one_edge, pair_no_edge, identity_on(one_edge)));

  VertexMap partial{{0, 0}};
  CHECK_THROWS_AS(is_semihom(one_edge, one_edge, partial), PartialMap);
}

TEST_CASE("acyclicity of a semihomomorphism is about its fibers") {
  Digraph tri = cycle_graph(3);
  CHECK(is_acyclic_semihom(tri, tri, identity_on(tri)));

  Digraph two_cycle = cycle_graph(2);
  Digraph point = graph({0}, {});
  CHECK_FALSE(is_acyclic_semihom(two_cycle, point, constant_map(two_cycle, 0)));

  Digraph edgeless_pair = graph({0, 1}, {});
  CHECK(is_acyclic_semihom(edgeless_pair, point, constant_map(edgeless_pair, 0)));

  Digraph one_edge = graph({0, 1}, {{0, 1}});
  Digraph pair_no_edge = graph({0, 1}, {});
  CHECK_THROWS_AS(is_acyclic_semihom(one_edge, pair_no_edge, identity_on(one_edge)), NotSemihom);
}

TEST_CASE("transfer_coloring pulls colourings back") {
  Digraph tri = cycle_graph(3);
  Coloring c({{0, 0}, {1, 0}, {2, 1}});
  CHECK(transfer_coloring(tri, tri, identity_on(tri), c) == c);

  Digraph two_tris = disjoint_union({cycle_graph(3), cycle_graph(3)});
  VertexMap fold;
  for (VertexId v : two_tris.vertices()) fold[v] = v % 3;
  Coloring pulled = transfer_coloring(two_tris, tri, fold, c);
  CHECK(is_chromatic(two_tris, pulled));
  CHECK(pulled.colors_used() <= c.colors_used());

  Digraph edgeless5 = graph({0, 1, 2, 3, 4}, {});
  Digraph point = graph({9}, {});
  Coloring constant = transfer_coloring(edgeless5, point, constant_map(edgeless5, 9),
                                        Coloring({{9, 0}}));
  for (VertexId v : edgeless5.vertices()) CHECK(constant.color_of(v) == 0);

  Digraph two_cycle = cycle_graph(2);
  CHECK_THROWS_AS(
      transfer_coloring(two_cycle, point, constant_map(two_cycle, 9), Coloring({{9, 0}})),
      NotAcyclicSemihom);
  CHECK_THROWS_AS(transfer_coloring(tri, tri, identity_on(tri), Coloring({{0, 0}, {1, 0}, {2, 0}})),
                  NotChromatic);
}

TEST_CASE("compose_coloring degenerates to transfer when fibers are acyclic") {
  Digraph two_tris = disjoint_union({cycle_graph(3), cycle_graph(3)});
  Digraph tri = cycle_graph(3);
  VertexMap fold;
  for (VertexId v : two_tris.vertices()) fold[v] = v % 3;
  Coloring c({{0, 0}, {1, 0}, {2, 1}});
  std::map<VertexId, Coloring> fiber_colorings;
  for (const auto& [image, fiber] : fibers(two_tris, fold)) {
    std::map<VertexId, int> zeros;
    for (VertexId v : fiber) zeros[v] = 0;
    fiber_colorings[image] = Coloring(zeros);
  }
  CHECK(compose_coloring(two_tris, tri, fold, fiber_colorings, c) ==
        transfer_coloring(two_tris, tri, fold, c));
}

TEST_CASE("compose_coloring colours a collapsed 4-cycle with two colours") {
  Digraph c4 = cycle_graph(4);
  Digraph point = graph({0}, {});
  VertexMap collapse = constant_map(c4, 0);
  std::map<VertexId, Coloring> fiber_colorings{
      {0, Coloring({{0, 0}, {1, 0}, {2, 0}, {3, 1}})}};
  Coloring result = compose_coloring(c4, point, collapse, fiber_colorings, Coloring({{0, 0}}));
  CHECK(is_chromatic(c4, result));
  CHECK(result.colors_used() <= 2);
}

TEST_CASE("compose_coloring rejects bad fiber colourings") {
  Digraph c2 = cycle_graph(2);
  Digraph point = graph({0}, {});
  std::map<VertexId, Coloring> monochrome{{0, Coloring({{0, 0}, {1, 0}})}};
  CHECK_THROWS_AS(
      compose_coloring(c2, point, constant_map(c2, 0), monochrome, Coloring({{0, 0}})),
      FiberColoringNotChromatic);
}

TEST_CASE("colour bounds hold along random semihomomorphisms") {
  Rng rng(7070);
  int acyclic_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Triple t = random_semihom_triple(rng, trial % 3 == 0);
    REQUIRE(is_semihom(t.source, t.target, t.map));
    int chi_source = chi_exact(t.source);
    int chi_target = chi_exact(t.target);
    int excess = 0;
    std::map<VertexId, Coloring> fiber_colorings;
    for (const auto& [image, fiber] : fibers(t.source, t.map)) {
      Digraph fiber_graph = induced_subgraph(t.source, fiber);
      int k_v = chi_exact(fiber_graph) - 1;
      excess += k_v;
      fiber_colorings[image] = *can_partition_acyclic(fiber_graph, k_v + 1);
    }
    CHECK(chi_source <= chi_target + excess);
    if (is_acyclic_semihom(t.source, t.target, t.map)) {
      ++acyclic_seen;
      CHECK(chi_source <= chi_target);
    }
    Coloring composed = compose_coloring(t.source, t.target, t.map, fiber_colorings,
                                         *can_partition_acyclic(t.target, chi_target));
    CHECK(is_chromatic(t.source, composed));
    CHECK(composed.colors_used() <= chi_target + excess);
  }
  CHECK(acyclic_seen > 0);
}
