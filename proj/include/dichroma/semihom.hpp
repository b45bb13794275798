#ifndef DICHROMA_SEMIHOM_HPP
#define DICHROMA_SEMIHOM_HPP

#include <map>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

/// Total vertex map, source id -> target id.
using VertexMap = std::map<VertexId, VertexId>;

/// True iff every source edge is mapped to a target edge or collapsed to a
/// single vertex. The map must be total on the source and land in the target.
bool is_semihom(const Digraph& source, const Digraph& target, const VertexMap& map);

/// True iff additionally every fiber induces an acyclic subdigraph of the
/// source. Requires is_semihom.
bool is_acyclic_semihom(const Digraph& source, const Digraph& target, const VertexMap& map);

/// Fibers of the map: target vertex -> ascending list of source vertices.
std::map<VertexId, std::vector<VertexId>> fibers(const Digraph& source, const VertexMap& map);

/// Pulls a chromatic colouring of the target back along an acyclic
/// semihomomorphism. The result is chromatic for the source and uses no new
/// colours, which witnesses chi(source) <= chi(target).
Coloring transfer_coloring(const Digraph& source, const Digraph& target, const VertexMap& map,
                           const Coloring& target_coloring);

/// Two-phase colouring along an arbitrary semihomomorphism: vertices whose
/// fiber colour is nonzero get a fresh colour per (target vertex, fiber
/// colour) pair, and the zero-coloured rest — on which the restricted map is
/// an acyclic semihomomorphism — inherits the target colouring. Uses at most
/// (colours of target_coloring) + sum of per-fiber maxima, witnessing
/// chi(source) <= chi(target) + sum k_v.
Coloring compose_coloring(const Digraph& source, const Digraph& target, const VertexMap& map,
                          const std::map<VertexId, Coloring>& fiber_colorings,
                          const Coloring& target_coloring);

}  // namespace dichroma

#endif
