#ifndef DICHROMA_TEST_UTIL_HPP
#define DICHROMA_TEST_UTIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/rng.hpp"

namespace test_util {

inline dichroma::Digraph graph(std::vector<dichroma::VertexId> vertices,
                               std::vector<dichroma::Edge> edges) {
  return dichroma::Digraph::validate(std::move(vertices), std::move(edges));
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline dichroma::Digraph cycle_graph(int n) {
  std::vector<dichroma::VertexId> vertices;
  std::vector<dichroma::Edge> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(i);
    edges.emplace_back(i, (i + 1) % n);
  }
  return graph(std::move(vertices), std::move(edges));
}

/// Complete bidirected digraph on 0..n-1.
inline dichroma::Digraph bidirected_complete(int n) {
  std::vector<dichroma::VertexId> vertices;
  std::vector<dichroma::Edge> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(i);
    for (int j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, j);
  }
  return graph(std::move(vertices), std::move(edges));
}

}  // namespace test_util

#endif
