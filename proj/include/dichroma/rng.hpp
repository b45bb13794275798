#ifndef DICHROMA_RNG_HPP
#define DICHROMA_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

/// splitmix64; self-contained so seeded runs reproduce bit-for-bit on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n); 0 when n <= 0.
  int below(int n) {
    if (n <= 0) return 0;
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  bool chance(int permille) { return below(1000) < permille; }

 private:
  std::uint64_t state_;
};

/// Digraph on ids 0..n-1 where every ordered pair becomes an edge with the
/// given permille probability.
inline Digraph random_digraph(Rng& rng, int n, int permille) {
  std::vector<VertexId> vertices(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<size_t>(i)] = i;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(permille)) edges.emplace_back(u, v);
  return Digraph::validate(std::move(vertices), std::move(edges));
}

/// Sample of `count` distinct values from [0, n), ascending.
inline std::vector<VertexId> random_subset(Rng& rng, int n, int count) {
  std::vector<VertexId> picked;
  while (static_cast<int>(picked.size()) < count) {
    VertexId candidate = rng.below(n);
    bool fresh = true;
    for (VertexId x : picked) fresh = fresh && x != candidate;
    if (fresh) picked.push_back(candidate);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace dichroma

#endif
