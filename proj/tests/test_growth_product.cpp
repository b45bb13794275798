#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"

#include "dichroma/growth.hpp"
#include "dichroma/product.hpp"
#include "dichroma/rng.hpp"
#include "dichroma/solver.hpp"
#include "test_util.hpp"

using namespace dichroma;

TEST_CASE("normalize_nondecreasing runs the maximum and clamps to 1") {
  CHECK(normalize_nondecreasing({3, 1, 5}).values() == std::vector<int>{3, 3, 5});
  CHECK(normalize_nondecreasing({2, 3, 4}).values() == std::vector<int>{2, 3, 4});
  CHECK(normalize_nondecreasing({0, 0}).values() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(normalize_nondecreasing({}), EmptyInput);
}

TEST_CASE("growth function tail convention and equality") {
  GrowthFunction g({2, 5});
  CHECK(g.at(0) == 2);
  CHECK(g.at(1) == 5);
  CHECK(g.at(17) == 5);
  CHECK(g == GrowthFunction({2, 5, 5, 5}));
  CHECK_FALSE(g == GrowthFunction({2, 5, 6}));
  CHECK_THROWS_AS(GrowthFunction({3, 2}), Error);
  CHECK_THROWS_AS(GrowthFunction(std::vector<int>{}), EmptyInput);
}

TEST_CASE("derive_g_from_f evaluates f at 2^(m+1)-2") {
  GrowthFunction f({3, 4, 5, 6, 7, 8, 9});  // f(n) = n+3
  CHECK(derive_g_from_f(f, 3).values() == std::vector<int>{3, 5, 9});
  CHECK(derive_g_from_f(GrowthFunction({1}), 4).values() == std::vector<int>{1, 1, 1, 1});
  CHECK(derive_g_from_f(GrowthFunction({2}), 2).values() == std::vector<int>{2, 2});
}

namespace {

// Brute-force helper: dichromatic number of each subset by mask.
std::vector<int> chi_by_mask(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> chi(static_cast<size_t>(1) << n, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> ids;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ids.push_back(d.id_at(i));
    chi[mask] = brute_force_chi(induced_subgraph(d, ids));
  }
  return chi;
}

}  // namespace

TEST_CASE("the derived widths bridge the two bound styles") {
  // If a digraph keeps every subset below g(m) vertices at dichromatic
  // number <= 2^m, then subsets at dichromatic number n+2 have at least
  // f(n) vertices, with g derived from f. Checked by brute force.
  GrowthFunction f = normalize_nondecreasing({3, 4, 5, 6, 7, 8, 9});  // f(n) = n+3
  GrowthFunction g = derive_g_from_f(f, 3);

  Rng rng(99);
  int premise_holders = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Digraph d = trial == 0 ? test_util::cycle_graph(5)
                           : random_digraph(rng, 1 + rng.below(8), 100 * (1 + rng.below(9)));
    int n = d.vertex_count();
    auto chi = chi_by_mask(d);
    bool premise = true;
    for (unsigned mask = 1; mask < (1u << n) && premise; ++mask) {
      int size = std::popcount(mask);
      for (int m = 0; m < 3; ++m)
        if (size < g.at(m) && chi[mask] > (1 << m)) premise = false;
    }
    if (!premise) continue;
    ++premise_holders;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (chi[mask] < 2) continue;
      CHECK(std::popcount(mask) >= f.at(chi[mask] - 2));
    }
  }
  CHECK(premise_holders > 0);
}

TEST_CASE("edge_rule follows the first differing coordinate") {
  GrowthFunction g({3, 4, 5});
  CHECK(edge_rule({{0, 0, 0}}, {{1, 3, 4}}, g));
  CHECK(edge_rule({{2, 0, 0}}, {{0, 0, 0}}, g));   // wrap-around
  CHECK_FALSE(edge_rule({{0, 0, 0}}, {{2, 0, 0}}, g));
  CHECK_THROWS_AS(edge_rule({{0, 0}}, {{0, 0, 0}}, g), LengthMismatch);
  CHECK_THROWS_AS(edge_rule({{1, 2, 3}}, {{1, 2, 3}}, g), EqualVertices);
}

TEST_CASE("depth-1 truncation is the successor cycle") {
  Truncation t = build_truncation(GrowthFunction({3}), 1);
  CHECK(t.graph().vertices() == std::vector<VertexId>{0, 1, 2});
  CHECK(t.graph().edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("width-2 levels connect every ordered pair") {
  Truncation t = build_truncation(GrowthFunction({2, 2}), 2);
  CHECK(t.graph().vertex_count() == 4);
  CHECK(t.graph().edge_count() == 12);
  // oracle: compare against the rule applied to every ordered pair
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      if (u == v) continue;
      CHECK(t.graph().has_edge(u, v) == edge_rule(t.vertex_of(u), t.vertex_of(v), t.g()));
    }
}

TEST_CASE("truncation edges equal the rule on every ordered pair") {
  Rng rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> widths;
    int depth = 1 + rng.below(3);
    for (int k = 0; k < depth; ++k) widths.push_back(1 + rng.below(4));
    std::sort(widths.begin(), widths.end());
    GrowthFunction g(widths);
    Truncation t = build_truncation(g, depth);
    int n = t.graph().vertex_count();
    long long expected_edges = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        bool rule = edge_rule(t.vertex_of(u), t.vertex_of(v), g);
        CHECK(t.graph().has_edge(u, v) == rule);
        expected_edges += rule;
      }
    CHECK(t.graph().edge_count() == expected_edges);
  }
}

TEST_CASE("the 60-vertex instance builds with digirth 3") {
  Truncation t = build_truncation(GrowthFunction({3, 4, 5}), 3);
  CHECK(t.graph().vertex_count() == 60);
  CHECK(digirth(t.graph()) == 3);
}

TEST_CASE("build_truncation guards depth and size") {
  CHECK_THROWS_AS(build_truncation(GrowthFunction({3}), 2), DepthExceedsG);
  CHECK_THROWS_AS(build_truncation(GrowthFunction({100, 100, 100}), 3), SizeCapExceeded);
  CHECK_THROWS_AS(build_truncation(GrowthFunction({0, 1}), 2), Error);
  CHECK(build_truncation(GrowthFunction({5}), 0).graph().vertex_count() == 1);
}

TEST_CASE("subtree selects prefix extensions") {
  Truncation t = build_truncation(GrowthFunction({3, 4}), 2);
  CHECK(subtree(t, {0}) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(subtree(t, {}) == t.graph().vertices());
  CHECK(subtree(t, {2, 3}) == std::vector<VertexId>{11});
  CHECK_THROWS_AS(subtree(t, {3}), InvalidPrefix);
  CHECK_THROWS_AS(subtree(t, {0, 0, 0}), InvalidPrefix);
}

TEST_CASE("sgn coloring packs coordinate signs") {
  Truncation t = build_truncation(GrowthFunction({3, 3}), 2);
  VertexId u02 = t.id_of({{0, 2}});
  VertexId u21 = t.id_of({{2, 1}});
  Coloring one_bit = sgn_coloring(t, {u02, u21}, 1);
  CHECK(one_bit.color_of(u02) == 0);
  CHECK(one_bit.color_of(u21) == 1);

  Coloring zero_bits = sgn_coloring(t, t.graph().vertices(), 0);
  for (VertexId v : t.graph().vertices()) CHECK(zero_bits.color_of(v) == 0);

  CHECK_THROWS_AS(sgn_coloring(t, {0}, 3), DepthTooSmall);
}

TEST_CASE("sgn coloring is chromatic on every subset below g(1)") {
  Truncation t = build_truncation(GrowthFunction({3, 4, 5}), 3);
  const Digraph& d = t.graph();
  int n = d.vertex_count();
  // exhaustively: |U| <= 3 < g(1) = 4, one coordinate suffices
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CHECK(is_chromatic(induced_subgraph(d, {a, b}), sgn_coloring(t, {a, b}, 1)));
      for (int c = b + 1; c < n; ++c)
        CHECK(is_chromatic(induced_subgraph(d, {a, b, c}), sgn_coloring(t, {a, b, c}, 1)));
    }
}

TEST_CASE("sgn coloring separates small directed cycles") {
  Truncation t = build_truncation(GrowthFunction({3, 4, 5}), 3);
  Rng rng(808);
  int cycles_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    int level = 1 + rng.below(2);
    int size = 2 + rng.below(t.g().at(level) - 2);  // 2 <= |U| < g(level)
    std::vector<VertexId> u = random_subset(rng, t.graph().vertex_count(), size);
    auto cycle = shortest_cycle(induced_subgraph(t.graph(), u));
    if (!cycle) continue;
    ++cycles_seen;
    Coloring c = sgn_coloring(t, u, level);
    std::set<int> on_cycle;
    for (VertexId v : *cycle) on_cycle.insert(c.color_of(v));
    CHECK(on_cycle.size() >= 2);
  }
  CHECK(cycles_seen > 0);
}

TEST_CASE("digirth across subtree levels, including width 2") {
  Truncation t34 = build_truncation(GrowthFunction({3, 4}), 2);
  CHECK(digirth(t34.graph()) == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(digirth(induced_subgraph(t34.graph(), subtree(t34, {i}))) == 4);

  Truncation t23 = build_truncation(GrowthFunction({2, 3}), 2);
  CHECK(digirth(t23.graph()) == 2);
  for (int i = 0; i < 2; ++i)
    CHECK(digirth(induced_subgraph(t23.graph(), subtree(t23, {i}))) == 3);
}

TEST_CASE("small subsets have small dichromatic number") {
  Truncation t = build_truncation(GrowthFunction({3, 4}), 2);
  const Digraph& d = t.graph();
  int n = d.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CHECK(is_acyclic(induced_subgraph(d, {a, b})));  // |U| < g(0) = 3
      for (int c = b + 1; c < n; ++c)
        CHECK(chi_exact(induced_subgraph(d, {a, b, c})) <= 2);  // |U| < g(1) = 4
    }
}

TEST_CASE("every transversal of the child subtrees carries a cycle") {
  Truncation t = build_truncation(GrowthFunction({3, 4, 5}), 3);
  Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    int len = rng.below(3);
    std::vector<int> prefix;
    for (int k = 0; k < len; ++k) prefix.push_back(rng.below(t.g().at(k)));
    int width = t.g().at(len);
    std::vector<VertexId> transversal;
    for (int i = 0; i < width; ++i) {
      std::vector<int> child = prefix;
      child.push_back(i);
      std::vector<VertexId> pool = subtree(t, child);
      transversal.push_back(pool[static_cast<size_t>(rng.below(static_cast<int>(pool.size())))]);
    }
    for (int i = 0; i < width; ++i)
      CHECK(t.graph().has_edge(transversal[static_cast<size_t>(i)],
                               transversal[static_cast<size_t>((i + 1) % width)]));
  }
}

TEST_CASE("depth lower bound at small scale") {
  Truncation t22 = build_truncation(GrowthFunction({2, 2}), 2);
  CHECK(chi_exact(t22.graph()) == brute_force_chi(t22.graph()));
  CHECK(chi_exact(t22.graph()) >= 3);

  Truncation t33 = build_truncation(GrowthFunction({3, 3}), 2);
  CHECK(chi_exact(t33.graph()) == brute_force_chi(t33.graph()));
  CHECK(chi_exact(t33.graph()) >= 3);
}

TEST_CASE("embed_deeper zero-pads and preserves the edge rule") {
  CHECK(embed_deeper({{1, 2}}, 4).coords == std::vector<int>{1, 2, 0, 0});
  CHECK(embed_deeper({{1, 2}}, 2).coords == std::vector<int>{1, 2});
  CHECK_THROWS_AS(embed_deeper({{1, 2, 3}}, 2), Error);

  GrowthFunction g({3, 3});
  Truncation shallow = build_truncation(g, 1);
  Truncation deep = build_truncation(g, 2);
  // the embedded image induces an isomorphic copy
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 0; v < 3; ++v) {
      if (u == v) continue;
      VertexId iu = deep.id_of(embed_deeper(shallow.vertex_of(u), 2));
      VertexId iv = deep.id_of(embed_deeper(shallow.vertex_of(v), 2));
      CHECK(shallow.graph().has_edge(u, v) == deep.graph().has_edge(iu, iv));
    }

  Rng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    int w0 = 2 + rng.below(3);
    int w1 = std::max(w0, 3 + rng.below(2));
    GrowthFunction wide({w0, w1, std::max(w1, 4)});
    ProductVertex a{{rng.below(wide.at(0)), rng.below(wide.at(1))}};
    ProductVertex b{{rng.below(wide.at(0)), rng.below(wide.at(1))}};
    if (a == b) continue;
    int deeper = 2 + rng.below(2);
    CHECK(edge_rule(a, b, wide) ==
          edge_rule(embed_deeper(a, deeper), embed_deeper(b, deeper), wide));
  }
}
