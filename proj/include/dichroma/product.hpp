#ifndef DICHROMA_PRODUCT_HPP
#define DICHROMA_PRODUCT_HPP

#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/growth.hpp"

namespace dichroma {

/// Point of the product space: coordinate k ranges over [0, g(k)-1].
struct ProductVertex {
  std::vector<int> coords;

  int size() const { return static_cast<int>(coords.size()); }
  int operator[](int k) const { return coords[static_cast<size_t>(k)]; }
  bool operator==(const ProductVertex& other) const { return coords == other.coords; }
  bool operator<(const ProductVertex& other) const { return coords < other.coords; }
};

/// Edge test for the product digraph: u -> v iff at the first coordinate
/// where they differ, v holds u's value plus one modulo the level width.
bool edge_rule(const ProductVertex& u, const ProductVertex& v, const GrowthFunction& g);

inline constexpr long long kDefaultSizeCap = 100000;

/// Depth-d truncation of the product digraph, together with the bijection
/// between dense vertex ids and coordinate sequences. Ids follow the
/// lexicographic order of the sequences.
class Truncation {
 public:
  const Digraph& graph() const { return graph_; }
  const GrowthFunction& g() const { return g_; }
  int depth() const { return depth_; }

  const std::vector<ProductVertex>& labels() const { return labels_; }
  const ProductVertex& vertex_of(VertexId id) const;
  VertexId id_of(const ProductVertex& v) const;

 private:
  friend Truncation build_truncation(const GrowthFunction&, int, long long);
  Digraph graph_;
  GrowthFunction g_{std::vector<int>{1}};
  int depth_ = 0;
  std::vector<ProductVertex> labels_;
  std::vector<long long> strides_;
};

/// Materializes the depth-d truncation. Every coordinate sequence of length
/// `depth` becomes a vertex; edges are exactly the pairs accepted by
/// edge_rule. Vertex count is the product of the first `depth` widths and
/// must stay within `size_cap`.
Truncation build_truncation(const GrowthFunction& g, int depth,
                            long long size_cap = kDefaultSizeCap);

/// Ids of all vertices whose coordinate sequence extends the given prefix.
std::vector<VertexId> subtree(const Truncation& t, const std::vector<int>& prefix);

/// Colours each vertex of U by the zero/nonzero pattern of its first n
/// coordinates, packed into an integer in [0, 2^n): bit k is set iff
/// coordinate k is nonzero.
Coloring sgn_coloring(const Truncation& t, const std::vector<VertexId>& ids, int n);

/// Zero-pads a product vertex to a deeper truncation. The first differing
/// coordinate of any pair is unchanged, so edges are preserved and
/// reflected by the embedding.
ProductVertex embed_deeper(const ProductVertex& u, int deeper_depth);

}  // namespace dichroma

#endif
