#ifndef DICHROMA_CONDITION_HPP
#define DICHROMA_CONDITION_HPP

#include <optional>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/growth.hpp"
#include "dichroma/semihom.hpp"
#include "dichroma/solver.hpp"

namespace dichroma {

/// Finite digraph on ordinal-like integer labels whose subgraph-size profile
/// dominates a prescribed bound f (for every k >= 2, subgraphs with
/// dichromatic number k have at least f(k) vertices). Extension order is
/// reverse inclusion. Membership is verified exhaustively on construction.
class Condition {
 public:
  const Digraph& graph() const { return graph_; }
  const GrowthFunction& f() const { return f_; }
  const std::optional<VertexId>& distinguished() const { return distinguished_; }

  bool operator==(const Condition& other) const {
    return graph_ == other.graph_ && f_ == other.f_ && distinguished_ == other.distinguished_;
  }

 private:
  friend Condition make_condition(Digraph, GrowthFunction, std::optional<VertexId>);
  Condition(Digraph graph, GrowthFunction f, std::optional<VertexId> distinguished)
      : graph_(std::move(graph)), f_(std::move(f)), distinguished_(distinguished) {}

  Digraph graph_;
  GrowthFunction f_;
  std::optional<VertexId> distinguished_;
};

/// Verifies the bound exhaustively (the whole vertex set is the cap, so the
/// verdict is never unknown) and wraps the digraph; FBoundViolated carries
/// the minimal offending subgraph otherwise.
Condition make_condition(Digraph graph, GrowthFunction f,
                         std::optional<VertexId> distinguished = std::nullopt);

struct DeltaSystem {
  std::vector<int> indices;     // positions into the input family, ascending
  std::vector<VertexId> root;   // the common pairwise intersection
};

/// Largest subfamily whose pairwise intersections all coincide, if one of at
/// least `target_size` sets exists. Exact search over candidate roots (all
/// pairwise intersections); ties resolve to the lexicographically least index
/// list.
std::optional<DeltaSystem> find_delta_system(const std::vector<std::vector<VertexId>>& family,
                                             int target_size);

/// The unique order-preserving bijection V(p) -> V(q) when it fixes the root
/// pointwise, maps edges exactly onto edges, and matches the distinguished
/// vertices (required in both or neither); nullopt otherwise. The vertex sets
/// must intersect exactly in the root.
std::optional<VertexMap> order_isomorphism(const Condition& p, const Condition& q,
                                           const std::vector<VertexId>& root);

struct AmalgamationResult {
  Condition result;
  VertexMap certificate;  // acyclic semihomomorphism folding the union onto q
};

/// Union of two order-isomorphic conditions over their shared root. The union
/// is re-verified as a condition; the certificate map collapses p onto q and
/// is checked to be an acyclic semihomomorphism.
AmalgamationResult amalgamate_pair(const Condition& p, const Condition& q,
                                   const std::vector<VertexId>& root);

struct ThreadCycleResult {
  Condition result;
  VertexMap certificate;  // semihomomorphism folding the union onto the first condition
  int m_required = 0;
};

/// Joins pairwise order-isomorphic conditions (each with a distinguished
/// vertex outside the root) by a directed cycle through the distinguished
/// vertices of the first m conditions, where
///   m = n + max over 0 <= k <= n of (f(k+1) - f(k))
/// and n is the common vertex count. The result is re-verified as a
/// condition.
ThreadCycleResult thread_cycle(const std::vector<Condition>& conditions,
                               const std::vector<VertexId>& root, const GrowthFunction& f);

}  // namespace dichroma

#endif
