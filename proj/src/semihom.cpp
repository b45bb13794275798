#include "dichroma/semihom.hpp"

#include <algorithm>

namespace dichroma {

namespace {

VertexId image_of(const Digraph& source, const Digraph& target, const VertexMap& map, VertexId v) {
  auto it = map.find(v);
  if (it == map.end()) throw PartialMap(v);
  if (!target.has_vertex(it->second))
    throw Error("image " + std::to_string(it->second) + " of vertex " + std::to_string(v) +
                " is not a vertex of the target");
  (void)source;
  return it->second;
}

}  // namespace

bool is_semihom(const Digraph& source, const Digraph& target, const VertexMap& map) {
  for (VertexId v : source.vertices()) image_of(source, target, map, v);
  for (const auto& [u, v] : source.edges()) {
    VertexId iu = map.at(u);
    VertexId iv = map.at(v);
    if (iu != iv && !target.has_edge(iu, iv)) return false;
  }
  return true;
}

std::map<VertexId, std::vector<VertexId>> fibers(const Digraph& source, const VertexMap& map) {
  std::map<VertexId, std::vector<VertexId>> result;
  for (VertexId v : source.vertices()) {
    auto it = map.find(v);
    if (it == map.end()) throw PartialMap(v);
    result[it->second].push_back(v);
  }
  return result;
}

bool is_acyclic_semihom(const Digraph& source, const Digraph& target, const VertexMap& map) {
  if (!is_semihom(source, target, map)) throw NotSemihom();
  for (const auto& [image, fiber] : fibers(source, map))
    if (!is_acyclic(induced_subgraph(source, fiber))) return false;
  return true;
}

Coloring transfer_coloring(const Digraph& source, const Digraph& target, const VertexMap& map,
                           const Coloring& target_coloring) {
  if (!is_acyclic_semihom(source, target, map)) throw NotAcyclicSemihom();
  if (!is_chromatic(target, target_coloring)) throw NotChromatic();
  std::map<VertexId, int> assignment;
  for (VertexId v : source.vertices()) assignment[v] = target_coloring.color_of(map.at(v));
  return Coloring(std::move(assignment));
}

Coloring compose_coloring(const Digraph& source, const Digraph& target, const VertexMap& map,
                          const std::map<VertexId, Coloring>& fiber_colorings,
                          const Coloring& target_coloring) {
  if (!is_semihom(source, target, map)) throw NotSemihom();
  if (!is_chromatic(target, target_coloring)) throw NotChromatic();

  auto fiber_sets = fibers(source, map);
  int budget = target_coloring.colors_used();
  int base = 0;  // fresh pair colours start above every target colour id
  for (const auto& [v, c] : target_coloring.assignment()) base = std::max(base, c + 1);

  for (const auto& [image, fiber] : fiber_sets) {
    auto it = fiber_colorings.find(image);
    if (it == fiber_colorings.end())
      throw Error("missing fiber colouring for target vertex " + std::to_string(image));
    int k_v = 0;
    for (VertexId v : fiber) {
      if (!it->second.contains(v)) throw FiberColoringNotChromatic(image);
      k_v = std::max(k_v, it->second.color_of(v));
    }
    if (!is_chromatic(induced_subgraph(source, fiber), it->second))
      throw FiberColoringNotChromatic(image);
    budget += k_v;
  }

  // Phase 1: nonzero fiber colours become fresh (image, colour) pair ids.
  std::map<std::pair<VertexId, int>, int> pair_ids;
  for (const auto& [image, fiber] : fiber_sets)
    for (VertexId v : fiber) {
      int fc = fiber_colorings.at(image).color_of(v);
      if (fc != 0) pair_ids.emplace(std::pair<VertexId, int>{image, fc}, 0);
    }
  int next = base;
  for (auto& [pair, id] : pair_ids) id = next++;

  // Phase 2: the zero-coloured rest inherits the target colouring.
  std::map<VertexId, int> assignment;
  for (VertexId v : source.vertices()) {
    int fc = fiber_colorings.at(map.at(v)).color_of(v);
    if (fc != 0)
      assignment[v] = pair_ids.at({map.at(v), fc});
    else
      assignment[v] = target_coloring.color_of(map.at(v));
  }
  Coloring result(std::move(assignment));

  if (result.colors_used() > budget)
    throw ColourBudgetViolated(result.colors_used(), budget);
  if (!source.empty() && !is_chromatic(source, result))
    throw Error("internal: composed colouring is not chromatic");
  return result;
}

}  // namespace dichroma
