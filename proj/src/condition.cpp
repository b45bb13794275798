#include "dichroma/condition.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dichroma {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Condition make_condition(Digraph graph, GrowthFunction f, std::optional<VertexId> distinguished) {
  if (distinguished && !graph.has_vertex(*distinguished)) throw BadDistinguished(*distinguished);
  FBoundReport report =
      check_f_bound(graph, f, BoundMode::pointwise, graph.vertex_count());
  if (report.verdict == FBoundReport::Verdict::violated) throw FBoundViolated(report.witness);
  if (report.verdict != FBoundReport::Verdict::holds)
    throw Error("internal: exhaustive membership check did not reach a verdict");
  return Condition(std::move(graph), std::move(f), distinguished);
}

std::optional<DeltaSystem> find_delta_system(const std::vector<std::vector<VertexId>>& family,
                                             int target_size) {
  int n = static_cast<int>(family.size());
  if (target_size > n) return std::nullopt;
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(family.size());
  for (const auto& s : family) sets.push_back(sorted_unique(s));

  if (target_size <= 0) return DeltaSystem{{}, {}};
  if (target_size == 1) return DeltaSystem{{0}, sets[0]};

  // Roots of any subfamily of size >= 2 appear among the pairwise
  // intersections.
  std::set<std::vector<VertexId>> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.insert(intersect(sets[static_cast<size_t>(i)], sets[static_cast<size_t>(j)]));

  long long nodes = 0;
  const long long node_budget = 5'000'000;
  std::vector<int> best_indices;
  std::vector<VertexId> best_root;

  for (const auto& root : roots) {
    // Members containing the root; their petals must be pairwise disjoint.
    std::vector<int> members;
    std::vector<std::vector<VertexId>> petals;
    for (int i = 0; i < n; ++i) {
      if (std::includes(sets[static_cast<size_t>(i)].begin(), sets[static_cast<size_t>(i)].end(),
                        root.begin(), root.end())) {
        members.push_back(i);
        std::vector<VertexId> petal;
        std::set_difference(sets[static_cast<size_t>(i)].begin(), sets[static_cast<size_t>(i)].end(),
                            root.begin(), root.end(), std::back_inserter(petal));
        petals.push_back(std::move(petal));
      }
    }
    int m = static_cast<int>(members.size());
    std::vector<int> chosen;
    std::vector<int> chosen_petal_idx;
    // Exact max packing with include-first branching, so the first solution
    // of each size is the lexicographically least one.
    std::function<void(int)> search = [&](int from) {
      if (++nodes > node_budget) throw Error("delta-system search budget exceeded");
      bool better = chosen.size() > best_indices.size() ||
                    (!chosen.empty() && chosen.size() == best_indices.size() &&
                     chosen < best_indices);
      if (better) {
        best_indices = chosen;
        best_root = root;
      }
      if (static_cast<int>(chosen.size()) + (m - from) < static_cast<int>(best_indices.size()))
        return;  // cannot reach the best size any more
      for (int i = from; i < m; ++i) {
        bool disjoint = true;
        for (int j : chosen_petal_idx)
          if (!intersect(petals[static_cast<size_t>(i)], petals[static_cast<size_t>(j)]).empty()) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        chosen.push_back(members[static_cast<size_t>(i)]);
        chosen_petal_idx.push_back(i);
        search(i + 1);
        chosen.pop_back();
        chosen_petal_idx.pop_back();
      }
    };
    search(0);
  }

  if (static_cast<int>(best_indices.size()) < target_size) return std::nullopt;
  return DeltaSystem{best_indices, best_root};
}

std::optional<VertexMap> order_isomorphism(const Condition& p, const Condition& q,
                                           const std::vector<VertexId>& root) {
  const auto& vp = p.graph().vertices();
  const auto& vq = q.graph().vertices();
  if (vp.size() != vq.size())
    throw SizeMismatch(static_cast<int>(vp.size()), static_cast<int>(vq.size()));
  std::vector<VertexId> r = sorted_unique(root);
  if (intersect(vp, vq) != r)
    throw Error("the vertex sets do not intersect exactly in the root");

  VertexMap map;
  for (size_t i = 0; i < vp.size(); ++i) map[vp[i]] = vq[i];

  for (VertexId x : r)
    if (map.at(x) != x) return std::nullopt;
  if (p.graph().edge_count() != q.graph().edge_count()) return std::nullopt;
  for (const auto& [u, v] : p.graph().edges())
    if (!q.graph().has_edge(map.at(u), map.at(v))) return std::nullopt;
  if (p.distinguished().has_value() != q.distinguished().has_value()) return std::nullopt;
  if (p.distinguished() && map.at(*p.distinguished()) != *q.distinguished()) return std::nullopt;
  return map;
}

AmalgamationResult amalgamate_pair(const Condition& p, const Condition& q,
                                   const std::vector<VertexId>& root) {
  if (!(p.f() == q.f())) throw Error("the conditions carry different bound functions");
  auto iso = order_isomorphism(p, q, root);
  if (!iso) throw NotIsomorphic();

  std::vector<VertexId> vertices = p.graph().vertices();
  vertices.insert(vertices.end(), q.graph().vertices().begin(), q.graph().vertices().end());
  std::vector<Edge> edges = p.graph().edges();
  edges.insert(edges.end(), q.graph().edges().begin(), q.graph().edges().end());
  Digraph union_graph = Digraph::validate(sorted_unique(std::move(vertices)), std::move(edges));

  // Fold p onto q along the isomorphism; q stays fixed. Fibers are root
  // singletons or edgeless pairs, so the fold is an acyclic semihomomorphism.
  VertexMap certificate;
  for (VertexId v : q.graph().vertices()) certificate[v] = v;
  for (VertexId v : p.graph().vertices()) certificate[v] = iso->at(v);
  if (!is_acyclic_semihom(union_graph, q.graph(), certificate))
    throw Error("internal: fold onto q is not an acyclic semihomomorphism");

  std::optional<VertexId> distinguished;
  if (p.distinguished() && p.distinguished() == q.distinguished())
    distinguished = p.distinguished();
  Condition result = make_condition(std::move(union_graph), p.f(), distinguished);
  return AmalgamationResult{std::move(result), std::move(certificate)};
}

ThreadCycleResult thread_cycle(const std::vector<Condition>& conditions,
                               const std::vector<VertexId>& root, const GrowthFunction& f) {
  if (conditions.empty()) throw Error("no conditions supplied");
  std::vector<VertexId> r = sorted_unique(root);
  const Condition& first = conditions.front();
  int n = first.graph().vertex_count();

  for (size_t i = 0; i < conditions.size(); ++i) {
    const Condition& c = conditions[i];
    if (!(c.f() == f)) throw Error("condition " + std::to_string(i) + " carries a different bound function");
    if (!c.distinguished())
      throw Error("condition " + std::to_string(i) + " has no distinguished vertex");
    if (std::binary_search(r.begin(), r.end(), *c.distinguished()))
      throw DistinguishedInRoot(*c.distinguished());
    for (size_t j = i + 1; j < conditions.size(); ++j)
      if (intersect(c.graph().vertices(), conditions[j].graph().vertices()) != r)
        throw Error("the vertex sets do not form a delta system with the given root");
  }
  for (size_t i = 1; i < conditions.size(); ++i)
    if (!order_isomorphism(first, conditions[i], r)) throw NotPairwiseIsomorphic();

  int max_step = 0;
  for (int k = 0; k <= n; ++k) max_step = std::max(max_step, f.at(k + 1) - f.at(k));
  int m = n + max_step;
  if (m < 2) throw Error("cycle threading needs m >= 2; the bound function is too flat");
  if (static_cast<int>(conditions.size()) < m)
    throw TooFewConditions(m, static_cast<int>(conditions.size()));

  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const Digraph& g = conditions[static_cast<size_t>(i)].graph();
    vertices.insert(vertices.end(), g.vertices().begin(), g.vertices().end());
    edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  }
  for (int i = 0; i < m; ++i) {
    VertexId a = *conditions[static_cast<size_t>(i)].distinguished();
    VertexId b = *conditions[static_cast<size_t>((i + 1) % m)].distinguished();
    edges.emplace_back(a, b);
  }
  Digraph union_graph = Digraph::validate(sorted_unique(std::move(vertices)), std::move(edges));

  // Fold every condition onto the first, positionally; the fiber over the
  // first distinguished vertex is exactly the threaded cycle, every other
  // non-root fiber is an edgeless m-set.
  VertexMap certificate;
  for (int i = 0; i < m; ++i) {
    const auto& vi = conditions[static_cast<size_t>(i)].graph().vertices();
    const auto& v0 = first.graph().vertices();
    for (size_t j = 0; j < vi.size(); ++j) certificate[vi[j]] = v0[j];
  }
  if (!is_semihom(union_graph, first.graph(), certificate))
    throw Error("internal: fold onto the first condition is not a semihomomorphism");

  Condition result = make_condition(std::move(union_graph), f);
  return ThreadCycleResult{std::move(result), std::move(certificate), m};
}

}  // namespace dichroma
