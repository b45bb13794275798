#include "dichroma/product.hpp"

#include <algorithm>

namespace dichroma {

bool edge_rule(const ProductVertex& u, const ProductVertex& v, const GrowthFunction& g) {
  if (u.size() != v.size()) throw LengthMismatch(u.size(), v.size());
  for (int m = 0; m < u.size(); ++m) {
    if (u[m] == v[m]) continue;
    return v[m] == (u[m] + 1) % g.at(m);
  }
  throw EqualVertices();
}

const ProductVertex& Truncation::vertex_of(VertexId id) const {
  if (id < 0 || id >= graph_.vertex_count()) throw VertexNotInGraph(id);
  return labels_[static_cast<size_t>(id)];
}

VertexId Truncation::id_of(const ProductVertex& v) const {
  if (v.size() != depth_) throw LengthMismatch(v.size(), depth_);
  long long id = 0;
  for (int k = 0; k < depth_; ++k) {
    if (v[k] < 0 || v[k] >= g_.at(k)) throw Error("coordinate out of range for the truncation");
    id += v[k] * strides_[static_cast<size_t>(k)];
  }
  return static_cast<VertexId>(id);
}

Truncation build_truncation(const GrowthFunction& g, int depth, long long size_cap) {
  if (depth < 0) throw Error("depth must be non-negative");
  if (depth > g.explicit_size()) throw DepthExceedsG(depth, g.explicit_size());
  if (size_cap < 1) throw Error("size cap must be positive");

  std::vector<int> widths(static_cast<size_t>(depth));
  unsigned __int128 full = 1;
  const unsigned __int128 saturate = static_cast<unsigned __int128>(1) << 62;
  for (int k = 0; k < depth; ++k) {
    widths[static_cast<size_t>(k)] = g.at(k);
    if (widths[static_cast<size_t>(k)] < 1)
      throw Error("level widths must be at least 1; normalize the growth function first");
    if (full < saturate) full *= static_cast<unsigned>(widths[static_cast<size_t>(k)]);
  }
  if (full > static_cast<unsigned __int128>(size_cap))
    throw SizeCapExceeded(static_cast<long long>(full > saturate ? saturate : full), size_cap);
  long long count = static_cast<long long>(full);

  Truncation t;
  t.g_ = g;
  t.depth_ = depth;
  t.strides_.assign(static_cast<size_t>(depth), 1);
  for (int k = depth - 2; k >= 0; --k)
    t.strides_[static_cast<size_t>(k)] =
        t.strides_[static_cast<size_t>(k + 1)] * widths[static_cast<size_t>(k + 1)];

  // Vertices in lexicographic order via mixed-radix counting.
  int n = static_cast<int>(count);
  t.labels_.reserve(static_cast<size_t>(n));
  ProductVertex current{std::vector<int>(static_cast<size_t>(depth), 0)};
  for (int id = 0; id < n; ++id) {
    t.labels_.push_back(current);
    for (int k = depth - 1; k >= 0; --k) {
      if (++current.coords[static_cast<size_t>(k)] < widths[static_cast<size_t>(k)]) break;
      current.coords[static_cast<size_t>(k)] = 0;
    }
  }

  // An edge leaves u at its first differing coordinate m; the target takes
  // u(m)+1 mod g(m) there and anything below. Enumerating by (u, m, suffix)
  // emits every edge exactly once.
  std::vector<Edge> edges;
  std::vector<VertexId> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
  ProductVertex target;
  for (int u = 0; u < n; ++u) {
    const ProductVertex& from = t.labels_[static_cast<size_t>(u)];
    for (int m = 0; m < depth; ++m) {
      if (widths[static_cast<size_t>(m)] == 1) continue;  // inert level, never differs
      target = from;
      target.coords[static_cast<size_t>(m)] =
          (from[m] + 1) % widths[static_cast<size_t>(m)];
      for (int k = m + 1; k < depth; ++k) target.coords[static_cast<size_t>(k)] = 0;
      // Walk all suffixes below level m.
      while (true) {
        edges.emplace_back(u, t.id_of(target));
        int k = depth - 1;
        for (; k > m; --k) {
          if (++target.coords[static_cast<size_t>(k)] < widths[static_cast<size_t>(k)]) break;
          target.coords[static_cast<size_t>(k)] = 0;
        }
        if (k == m) break;
      }
    }
  }
  t.graph_ = Digraph::validate(std::move(ids), std::move(edges));
  return t;
}

std::vector<VertexId> subtree(const Truncation& t, const std::vector<int>& prefix) {
  int len = static_cast<int>(prefix.size());
  if (len > t.depth()) throw InvalidPrefix("longer than the truncation depth");
  long long start = 0;
  for (int k = 0; k < len; ++k) {
    if (prefix[static_cast<size_t>(k)] < 0 || prefix[static_cast<size_t>(k)] >= t.g().at(k))
      throw InvalidPrefix("coordinate " + std::to_string(k) + " out of range");
    long long stride = 1;
    for (int j = k + 1; j < t.depth(); ++j) stride *= t.g().at(j);
    start += prefix[static_cast<size_t>(k)] * stride;
  }
  long long block = 1;
  for (int j = len; j < t.depth(); ++j) block *= t.g().at(j);
  std::vector<VertexId> ids(static_cast<size_t>(block));
  for (long long i = 0; i < block; ++i) ids[static_cast<size_t>(i)] = static_cast<VertexId>(start + i);
  return ids;
}

Coloring sgn_coloring(const Truncation& t, const std::vector<VertexId>& ids, int n) {
  if (n < 0) throw Error("coordinate count must be non-negative");
  if (n > t.depth()) throw DepthTooSmall(n, t.depth());
  std::map<VertexId, int> assignment;
  for (VertexId id : ids) {
    const ProductVertex& v = t.vertex_of(id);
    int color = 0;
    for (int k = 0; k < n; ++k)
      if (v[k] > 0) color |= 1 << k;
    assignment[id] = color;
  }
  return Coloring(std::move(assignment));
}

ProductVertex embed_deeper(const ProductVertex& u, int deeper_depth) {
  if (deeper_depth < u.size()) throw Error("target depth is smaller than the vertex length");
  ProductVertex result = u;
  result.coords.resize(static_cast<size_t>(deeper_depth), 0);
  return result;
}

}  // namespace dichroma
