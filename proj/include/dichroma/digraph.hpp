#ifndef DICHROMA_DIGRAPH_HPP
#define DICHROMA_DIGRAPH_HPP

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dichroma/errors.hpp"

namespace dichroma {

using Edge = std::pair<VertexId, VertexId>;

/// Sentinel for "no directed cycle": compares above every finite length.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Immutable loop-free digraph on arbitrary non-negative integer vertex ids.
/// Vertices and edges iterate in ascending (lexicographic) order, so every
/// algorithm downstream is deterministic.
class Digraph {
 public:
  Digraph() = default;

  /// Checks the invariants (no loops, endpoints inside the vertex set, unique
  /// ids) and builds the digraph. Duplicate edges are collapsed; duplicate
  /// vertices are an error.
  static Digraph validate(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// Dense index of a vertex id (position in the ascending vertex list), or -1.
  int index_of(VertexId v) const;
  VertexId id_at(int index) const { return vertices_[static_cast<size_t>(index)]; }

  /// Out-/in-neighbourhoods as dense indices, ascending.
  const std::vector<int>& out_at(int index) const { return out_[static_cast<size_t>(index)]; }
  const std::vector<int>& in_at(int index) const { return in_[static_cast<size_t>(index)]; }

  bool operator==(const Digraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  Digraph(std::vector<VertexId> vertices, std::vector<Edge> edges);
  void build_adjacency();

  std::vector<VertexId> vertices_;  // ascending
  std::vector<Edge> edges_;         // lexicographically ascending, unique
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Total colour assignment on a set of vertex ids.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::map<VertexId, int> assignment) : assignment_(std::move(assignment)) {}
  Coloring(std::initializer_list<std::pair<const VertexId, int>> init) : assignment_(init) {}

  const std::map<VertexId, int>& assignment() const { return assignment_; }
  bool contains(VertexId v) const { return assignment_.count(v) != 0; }
  int color_of(VertexId v) const;

  int size() const { return static_cast<int>(assignment_.size()); }
  /// Number of distinct colours actually used.
  int colors_used() const;

  bool operator==(const Coloring& other) const { return assignment_ == other.assignment_; }

 private:
  std::map<VertexId, int> assignment_;
};

/// Subdigraph induced by a set of vertex ids (duplicates tolerated).
Digraph induced_subgraph(const Digraph& d, const std::vector<VertexId>& ids);

/// Strongly connected components, listed in a topological order of the
/// condensation (edges between components always point forward in the list).
/// Each component is an ascending id list.
std::vector<std::vector<VertexId>> scc(const Digraph& d);

/// True iff the digraph has no directed cycle.
bool is_acyclic(const Digraph& d);

/// Length of a shortest directed cycle, or kInfinity if the digraph is acyclic.
int digirth(const Digraph& d);

/// One shortest directed cycle as an id sequence (closing edge back to the
/// first element implied), or nullopt if acyclic.
std::optional<std::vector<VertexId>> shortest_cycle(const Digraph& d);

/// Disjoint union with vertex ids relabelled into consecutive blocks,
/// one block per input, preserving each input's ascending order.
Digraph disjoint_union(const std::vector<Digraph>& parts);

/// True iff no colour class induces a directed cycle. The colouring must
/// cover every vertex of `d`; ids coloured outside `d` are ignored.
bool is_chromatic(const Digraph& d, const Coloring& c);

}  // namespace dichroma

#endif
