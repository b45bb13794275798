#include "dichroma/io.hpp"

#include "doctest.h"

#include "dichroma/rng.hpp"
#include "test_util.hpp"

using namespace dichroma;
using test_util::graph;

TEST_CASE("digraph JSON round trip is byte-stable") {
  Digraph d = graph({0, 2, 5}, {{0, 2}, {5, 0}});
  std::string text = canonical_text(digraph_to_json(d));
  Digraph back = digraph_from_json(Json::parse(text));
  CHECK(back == d);
  CHECK(canonical_text(digraph_to_json(back)) == text);
}

TEST_CASE("digraph JSON validates on load") {
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"vertices":[0],"edges":[[0,0]]})")), LoopEdge);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"vertices":[0],"edges":[[0,1]]})")),
                  DanglingEndpoint);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"vertices":[0]})")), Error);
}

TEST_CASE("edge list round trip with isolated vertices") {
  Digraph d = graph({0, 1, 7}, {{0, 1}});
  std::string text = digraph_to_edge_list(d);
  CHECK(text == "7\n0 1\n");
  Digraph back = digraph_from_edge_list(text);
  CHECK(back == d);
  CHECK(digraph_to_edge_list(back) == text);

  CHECK(digraph_from_edge_list("") == Digraph{});
  CHECK_THROWS_AS(digraph_from_edge_list("0 1 2\n"), Error);
  CHECK_THROWS_AS(digraph_from_edge_list("0 0\n"), LoopEdge);
}

TEST_CASE("random digraphs survive both formats") {
  Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph d = random_digraph(rng, 1 + rng.below(9), 100 * (1 + rng.below(9)));
    CHECK(digraph_from_json(Json::parse(canonical_text(digraph_to_json(d)))) == d);
    CHECK(digraph_from_edge_list(digraph_to_edge_list(d)) == d);
  }
}

TEST_CASE("dot export shape") {
  Digraph d = graph({0, 1, 2}, {{0, 1}});
  CHECK(digraph_to_dot(d) == "digraph {\n  2;\n  0 -> 1;\n}\n");
}

TEST_CASE("truncation documents reconstruct and verify") {
  Truncation t = build_truncation(GrowthFunction({3, 4}), 2);
  std::string text = canonical_text(truncation_to_json(t));
  Truncation back = truncation_from_json(Json::parse(text));
  CHECK(back.graph() == t.graph());
  CHECK(back.depth() == 2);
  CHECK(canonical_text(truncation_to_json(back)) == text);

  Json tampered = Json::parse(text);
  tampered["edges"] = Json::array();
  CHECK_THROWS_AS(truncation_from_json(tampered), Error);
}

TEST_CASE("condition JSON re-verifies membership") {
  Condition c = make_condition(graph({2, 5, 8, 11}, {{2, 5}, {5, 8}, {8, 11}, {11, 2}}),
                               GrowthFunction({0, 0, 4}), 5);
  std::string text = canonical_text(condition_to_json(c));
  Condition back = condition_from_json(Json::parse(text));
  CHECK(back == c);
  CHECK(canonical_text(condition_to_json(back)) == text);

  Json bad = Json::parse(text);
  bad["f"] = std::vector<int>{0, 0, 5};
  CHECK_THROWS_AS(condition_from_json(bad), FBoundViolated);
}

TEST_CASE("coloring JSON round trip") {
  Coloring c({{0, 1}, {3, 0}, {9, 1}});
  std::string text = canonical_text(coloring_to_json(c));
  CHECK(coloring_from_json(Json::parse(text)) == c);
}

TEST_CASE("profile and report serialization") {
  FProfile p;
  p.size_cap = 5;
  p.entries[1] = FProfile::Entry::finite(1);
  p.entries[2] = FProfile::Entry::infinite();
  p.entries[3] = FProfile::Entry::unknown();
  Json j = profile_to_json(p);
  CHECK(j.at("cap") == 5);
  CHECK(j.at("profile").at("1") == 1);
  CHECK(j.at("profile").at("2") == "inf");
  CHECK(j.at("profile").at("3") == "unknown");

  FBoundReport holds;
  holds.verdict = FBoundReport::Verdict::holds;
  Json hj = fbound_report_to_json(holds, 4);
  CHECK(hj.at("verdict") == "HOLDS");
  CHECK(hj.at("witness").is_null());
  CHECK(hj.at("cap") == 4);

  FBoundReport violated;
  violated.verdict = FBoundReport::Verdict::violated;
  violated.witness = {0, 1, 2};
  Json vj = fbound_report_to_json(violated, 4);
  CHECK(vj.at("verdict") == "VIOLATED");
  CHECK(vj.at("witness") == Json::array({0, 1, 2}));
}
