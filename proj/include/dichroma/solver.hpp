#ifndef DICHROMA_SOLVER_HPP
#define DICHROMA_SOLVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "dichroma/digraph.hpp"
#include "dichroma/growth.hpp"

namespace dichroma {

/// Knobs for the exhaustive subset searches. `subset_budget` bounds the total
/// number of subsets visited before the search gives up with UNKNOWN; `jobs`
/// fans the per-size sweep out to worker threads (results are deterministic
/// regardless of the schedule).
struct SearchLimits {
  long long subset_budget = 20'000'000;
  int jobs = 1;
};

/// A chromatic colouring with at most k colours, or nullopt if none exists.
/// The empty digraph succeeds for every k >= 0.
std::optional<Coloring> can_partition_acyclic(const Digraph& d, int k);

/// Exact dichromatic number: the least k accepted by can_partition_acyclic.
/// 0 for the empty digraph, 1 for a nonempty acyclic one.
int chi_exact(const Digraph& d);

/// Independent oracle: exhaustive minimum over all set partitions of the
/// vertex set with every part acyclic. Only for cross-validation; refuses
/// more than 10 vertices.
int brute_force_chi(const Digraph& d);

/// Upper bound from a single greedy sweep in ascending id order, each vertex
/// taking the least colour whose class stays acyclic.
int chi_upper_greedy(const Digraph& d);

/// Minimum subgraph sizes per dichromatic number.
struct FProfile {
  struct Entry {
    enum class Kind { finite, infinite, unknown };
    Kind kind = Kind::infinite;
    int value = 0;  // meaningful only when finite

    static Entry finite(int v) { return {Kind::finite, v}; }
    static Entry infinite() { return {Kind::infinite, 0}; }
    static Entry unknown() { return {Kind::unknown, 0}; }
    bool operator==(const Entry& other) const = default;
  };

  std::map<int, Entry> entries;  // k -> min |U| with chi(D[U]) = k
  int size_cap = 0;              // largest subset size the search may touch
};

/// For each 1 <= k <= k_max, the minimum size of a vertex set inducing a
/// subgraph with dichromatic number k; infinite when the whole digraph stays
/// below k, unknown when the size cap or budget stopped the search first.
FProfile f_profile(const Digraph& d, int k_max, int size_cap, const SearchLimits& limits = {});

enum class BoundMode {
  pointwise,  // subgraphs with dichromatic number k need at least f(k) vertices
  shifted2,   // subgraphs with dichromatic number n+2 need at least f(n) vertices
};

struct FBoundReport {
  enum class Verdict { holds, violated, unknown };
  Verdict verdict = Verdict::unknown;
  std::vector<VertexId> witness;  // minimal violating set (empty unless violated)
  int witness_chi = 0;
  int bound = 0;  // the bound the witness missed
};

/// Checks the subgraph-size bound against f, exhaustively over subsets of
/// size at most `size_cap`. HOLDS is only reported when the search space
/// needed for certainty was fully covered; a capped search returns UNKNOWN.
/// The witness of a violation is the lexicographically least vertex set of
/// minimal size.
FBoundReport check_f_bound(const Digraph& d, const GrowthFunction& f, BoundMode mode, int size_cap,
                           const SearchLimits& limits = {});

}  // namespace dichroma

#endif
