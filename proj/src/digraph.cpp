#include "dichroma/digraph.hpp"

#include <algorithm>
#include <deque>

namespace dichroma {

Digraph Digraph::validate(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw Error("vertex ids must be non-negative");
    if (i > 0 && vertices[i] == vertices[i - 1]) throw DuplicateVertex(vertices[i]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    if (u == v) throw LoopEdge(u);
    if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
        !std::binary_search(vertices.begin(), vertices.end(), v))
      throw DanglingEndpoint(u, v);
  }
  return Digraph(std::move(vertices), std::move(edges));
}

Digraph::Digraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  build_adjacency();
}

void Digraph::build_adjacency() {
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (const auto& [u, v] : edges_) {
    int iu = index_of(u);
    int iv = index_of(v);
    out_[static_cast<size_t>(iu)].push_back(iv);
    in_[static_cast<size_t>(iv)].push_back(iu);
  }
  // edges_ is sorted by (u,v), so out-lists are already ascending; in-lists
  // receive tails in ascending order for each head as well.
}

bool Digraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Digraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Coloring::color_of(VertexId v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw IncompleteColoring(v);
  return it->second;
}

int Coloring::colors_used() const {
  std::vector<int> cs;
  cs.reserve(assignment_.size());
  for (const auto& [v, c] : assignment_) cs.push_back(c);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return static_cast<int>(cs.size());
}

Digraph induced_subgraph(const Digraph& d, const std::vector<VertexId>& ids) {
  std::vector<VertexId> u = ids;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (VertexId v : u)
    if (!d.has_vertex(v)) throw VertexNotInGraph(v);

  std::vector<Edge> sub_edges;
  // For small vertex sets, probing each ordered pair beats scanning the
  // full edge list; subset sweeps in the solver lean on this.
  size_t pairs = u.size() * (u.size() > 0 ? u.size() - 1 : 0);
  if (pairs < d.edges().size()) {
    for (VertexId a : u)
      for (VertexId b : u)
        if (a != b && d.has_edge(a, b)) sub_edges.emplace_back(a, b);
  } else {
    for (const auto& e : d.edges())
      if (std::binary_search(u.begin(), u.end(), e.first) &&
          std::binary_search(u.begin(), u.end(), e.second))
        sub_edges.push_back(e);
  }
  return Digraph::validate(std::move(u), std::move(sub_edges));
}

namespace {

// Iterative Tarjan; emits components in reverse topological order.
std::vector<std::vector<int>> tarjan_components(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> order(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    size_t next_child;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (order[static_cast<size_t>(root)] != -1) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.next_child == 0) {
        order[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<size_t>(v)] = 1;
      }
      const auto& succ = d.out_at(v);
      bool descended = false;
      while (f.next_child < succ.size()) {
        int w = succ[f.next_child++];
        if (order[static_cast<size_t>(w)] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)])
          low[static_cast<size_t>(v)] =
              std::min(low[static_cast<size_t>(v)], order[static_cast<size_t>(w)]);
      }
      if (descended) continue;
      if (low[static_cast<size_t>(v)] == order[static_cast<size_t>(v)]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        Frame& parent = frames.back();
        low[static_cast<size_t>(parent.v)] =
            std::min(low[static_cast<size_t>(parent.v)], low[static_cast<size_t>(v)]);
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<std::vector<VertexId>> scc(const Digraph& d) {
  auto comps = tarjan_components(d);
  std::reverse(comps.begin(), comps.end());
  std::vector<std::vector<VertexId>> result;
  result.reserve(comps.size());
  for (auto& comp : comps) {
    std::vector<VertexId> ids;
    ids.reserve(comp.size());
    for (int idx : comp) ids.push_back(d.id_at(idx));
    std::sort(ids.begin(), ids.end());
    result.push_back(std::move(ids));
  }
  return result;
}

bool is_acyclic(const Digraph& d) {
  // Kahn's algorithm: the digraph is acyclic iff every vertex gets peeled.
  int n = d.vertex_count();
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = static_cast<int>(d.in_at(v).size());
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
  int peeled = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++peeled;
    for (int w : d.out_at(v))
      if (--indeg[static_cast<size_t>(w)] == 0) queue.push_back(w);
  }
  return peeled == n;
}

std::optional<std::vector<VertexId>> shortest_cycle(const Digraph& d) {
  int n = d.vertex_count();
  int best = kInfinity;
  std::vector<VertexId> best_cycle;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));

  for (int s = 0; s < n; ++s) {
    // BFS from s; an edge u->s closes a cycle of length dist(u)+1.
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<size_t>(s)] = 0;
    parent[static_cast<size_t>(s)] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (dist[static_cast<size_t>(v)] + 1 >= best - 1) continue;  // cannot improve
      for (int w : d.out_at(v)) {
        if (dist[static_cast<size_t>(w)] != -1) continue;
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
    }
    for (int u : d.in_at(s)) {
      if (u == s || dist[static_cast<size_t>(u)] == -1) continue;
      int length = dist[static_cast<size_t>(u)] + 1;
      if (length < best) {
        best = length;
        best_cycle.clear();
        for (int x = u; x != -1; x = parent[static_cast<size_t>(x)])
          best_cycle.push_back(d.id_at(x));
        std::reverse(best_cycle.begin(), best_cycle.end());
      }
    }
  }
  if (best == kInfinity) return std::nullopt;
  return best_cycle;
}

int digirth(const Digraph& d) {
  auto cycle = shortest_cycle(d);
  return cycle ? static_cast<int>(cycle->size()) : kInfinity;
}

Digraph disjoint_union(const std::vector<Digraph>& parts) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  int offset = 0;
  for (const Digraph& part : parts) {
    for (int i = 0; i < part.vertex_count(); ++i) vertices.push_back(offset + i);
    for (const auto& [u, v] : part.edges())
      edges.emplace_back(offset + part.index_of(u), offset + part.index_of(v));
    offset += part.vertex_count();
  }
  return Digraph::validate(std::move(vertices), std::move(edges));
}

bool is_chromatic(const Digraph& d, const Coloring& c) {
  std::map<int, std::vector<VertexId>> classes;
  for (VertexId v : d.vertices()) {
    if (!c.contains(v)) throw IncompleteColoring(v);
    classes[c.color_of(v)].push_back(v);
  }
  for (const auto& [color, members] : classes)
    if (!is_acyclic(induced_subgraph(d, members))) return false;
  return true;
}

}  // namespace dichroma
