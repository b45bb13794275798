#include "dichroma/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <thread>

namespace dichroma {
namespace {

// True iff giving dense vertex v colour c keeps the class acyclic. Any new
// monochromatic cycle must pass through v, so a DFS from v over class members
// that returns to v decides it.
bool stays_acyclic(const Digraph& d, const std::vector<int>& assigned, int v, int c,
                   std::vector<char>& seen, std::vector<int>& stack) {
  std::fill(seen.begin(), seen.end(), 0);
  stack.assign(1, v);
  seen[static_cast<size_t>(v)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int w : d.out_at(x)) {
      if (w == v) return false;
      if (assigned[static_cast<size_t>(w)] == c && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

// Ascending-id greedy; fills `assigned` (dense) and returns the colour count.
int greedy_color(const Digraph& d, std::vector<int>& assigned) {
  int n = d.vertex_count();
  assigned.assign(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n));
  std::vector<int> stack;
  int used = 0;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    while (!stays_acyclic(d, assigned, v, c, seen, stack)) ++c;
    assigned[static_cast<size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

enum class SearchOutcome { found, refuted, aborted };

// Branch and bound for a chromatic colouring with at most k colours.
// Fail-first: always branch on the uncoloured vertex with the fewest
// feasible colours, seeded by a shortest cycle (its vertices cannot all
// share one colour); colour symmetry is broken by allowing at most one
// fresh colour per step. Fills `result` on success. A non-negative node
// budget turns the search into an attempt that may come back `aborted`.
SearchOutcome kcolor_search(const Digraph& d, int k, std::vector<int>& result,
                            long long node_budget) {
  int n = d.vertex_count();
  if (n == 0) {
    result.clear();
    return SearchOutcome::found;
  }
  if (k <= 0) return SearchOutcome::refuted;

  // Static tie-break order: shortest-cycle vertices first, then by degree.
  std::vector<int> priority(static_cast<size_t>(n), 0);
  {
    std::vector<int> order;
    std::vector<char> placed(static_cast<size_t>(n), 0);
    if (auto cycle = shortest_cycle(d)) {
      for (VertexId id : *cycle) {
        int idx = d.index_of(id);
        order.push_back(idx);
        placed[static_cast<size_t>(idx)] = 1;
      }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!placed[static_cast<size_t>(v)]) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      size_t da = d.out_at(a).size() + d.in_at(a).size();
      size_t db = d.out_at(b).size() + d.in_at(b).size();
      if (da != db) return da > db;
      return a < b;
    });
    order.insert(order.end(), rest.begin(), rest.end());
    for (size_t i = 0; i < order.size(); ++i) priority[static_cast<size_t>(order[i])] = static_cast<int>(i);
  }

  std::vector<int> assigned(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n));
  std::vector<int> stack;
  long long nodes = 0;

  std::function<SearchOutcome(int, int)> rec = [&](int placed_count,
                                                   int used) -> SearchOutcome {
    if (node_budget >= 0 && ++nodes > node_budget) return SearchOutcome::aborted;
    if (placed_count == n) return SearchOutcome::found;
    // Fewest feasible colours first; ties by the static priority.
    int best_v = -1;
    std::vector<int> best_feasible;
    int best_count = k + 2;
    std::vector<int> current;
    for (int v = 0; v < n; ++v) {
      if (assigned[static_cast<size_t>(v)] != -1) continue;
      int top = std::min(k - 1, used);
      current.clear();
      for (int c = 0; c <= top; ++c)
        if (stays_acyclic(d, assigned, v, c, seen, stack)) current.push_back(c);
      if (static_cast<int>(current.size()) < best_count ||
          (static_cast<int>(current.size()) == best_count &&
           priority[static_cast<size_t>(v)] < priority[static_cast<size_t>(best_v)])) {
        best_count = static_cast<int>(current.size());
        best_v = v;
        best_feasible = current;
        if (best_count == 0) return SearchOutcome::refuted;  // dead end, no colour fits
      }
    }
    for (int c : best_feasible) {
      assigned[static_cast<size_t>(best_v)] = c;
      SearchOutcome sub = rec(placed_count + 1, std::max(used, c + 1));
      if (sub == SearchOutcome::found) return sub;
      assigned[static_cast<size_t>(best_v)] = -1;
      if (sub == SearchOutcome::aborted) return sub;
    }
    return SearchOutcome::refuted;
  };
  SearchOutcome outcome = rec(0, 0);
  if (outcome == SearchOutcome::found) result = assigned;
  return outcome;
}

// Exact k-colourability with an escalation ladder: cheap budgeted refutation
// attempts on ascending id-prefix subgraphs often kill infeasible k long
// before the unbudgeted full search would. Sound either way, since a
// subgraph needing more than k colours settles the whole digraph.
bool kcolor_decide(const Digraph& d, int k, std::vector<int>& result) {
  int n = d.vertex_count();
  const long long rung_budget = 200'000;
  std::vector<int> scratch;
  for (int size = std::max(8, k + 2); size < n; size += std::max(2, size / 4)) {
    std::vector<VertexId> prefix(d.vertices().begin(), d.vertices().begin() + size);
    if (kcolor_search(induced_subgraph(d, prefix), k, scratch, rung_budget) ==
        SearchOutcome::refuted)
      return false;
  }
  return kcolor_search(d, k, result, -1) == SearchOutcome::found;
}

// Kahn's algorithm restricted to `members` (dense indices). Used by the
// brute-force oracle so its feasibility test shares nothing with the
// branch-and-bound path.
bool part_acyclic(const Digraph& d, const std::vector<int>& members) {
  std::vector<int> indeg(members.size(), 0);
  auto pos_of = [&](int v) -> int {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return -1;
    return static_cast<int>(it - members.begin());
  };
  for (size_t i = 0; i < members.size(); ++i)
    for (int w : d.in_at(members[i]))
      if (pos_of(w) != -1) ++indeg[i];
  std::deque<int> queue;
  for (size_t i = 0; i < members.size(); ++i)
    if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
  size_t peeled = 0;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    ++peeled;
    for (int w : d.out_at(members[static_cast<size_t>(i)])) {
      int j = pos_of(w);
      if (j != -1 && --indeg[static_cast<size_t>(j)] == 0) queue.push_back(j);
    }
  }
  return peeled == members.size();
}

bool strongly_connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n == 0) return false;
  auto reach_all = [&](bool forward) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : forward ? d.out_at(v) : d.in_at(v)) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reach_all(true) && reach_all(false);
}

long long binom_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Dense-index groups (strongly connected components of size >= 2): every
// subset inducing a digraph with a cycle lies inside one of them, and the
// minimal ones induce strongly connected subgraphs.
struct SubsetGroups {
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of;  // -1 for vertices outside every group
};

SubsetGroups cycle_groups(const Digraph& d) {
  SubsetGroups sg;
  sg.group_of.assign(static_cast<size_t>(d.vertex_count()), -1);
  for (const auto& comp : scc(d)) {
    if (comp.size() < 2) continue;
    std::vector<int> idxs;
    idxs.reserve(comp.size());
    for (VertexId id : comp) idxs.push_back(d.index_of(id));
    std::sort(idxs.begin(), idxs.end());
    for (int idx : idxs) sg.group_of[static_cast<size_t>(idx)] = static_cast<int>(sg.groups.size());
    sg.groups.push_back(std::move(idxs));
  }
  return sg;
}

long long count_size_class(const SubsetGroups& sg, int s, long long cap) {
  long long total = 0;
  for (const auto& g : sg.groups) {
    total += binom_capped(static_cast<int>(g.size()), s, cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

// Enumerates, in lexicographic order, the size-s subsets whose least element
// is `x`; all members come from x's group. `handle` sees dense indices and
// returns true to stop the walk.
bool enumerate_first(const SubsetGroups& sg, int x, int s,
                     const std::function<bool(const std::vector<int>&)>& handle) {
  int gid = sg.group_of[static_cast<size_t>(x)];
  if (gid < 0) return false;
  const auto& group = sg.groups[static_cast<size_t>(gid)];
  size_t pos = static_cast<size_t>(
      std::lower_bound(group.begin(), group.end(), x) - group.begin());
  if (group.size() - pos < static_cast<size_t>(s)) return false;
  std::vector<int> members{x};
  std::function<bool(size_t)> rec = [&](size_t from) -> bool {
    if (static_cast<int>(members.size()) == s) return handle(members);
    size_t need = static_cast<size_t>(s) - members.size();
    for (size_t i = from; i + need <= group.size(); ++i) {
      members.push_back(group[i]);
      if (rec(i + 1)) return true;
      members.pop_back();
    }
    return false;
  };
  return rec(pos + 1);
}

std::vector<VertexId> to_ids(const Digraph& d, const std::vector<int>& dense) {
  std::vector<VertexId> ids;
  ids.reserve(dense.size());
  for (int idx : dense) ids.push_back(d.id_at(idx));
  return ids;
}

// chi of the induced subgraph, or -1 when the subset is skipped because it
// is not strongly connected (such subsets never carry a minimal answer).
int chi_if_strongly_connected(const Digraph& d, const std::vector<int>& dense) {
  Digraph sub = induced_subgraph(d, to_ids(d, dense));
  if (!strongly_connected(sub)) return -1;
  return chi_exact(sub);
}

struct Violation {
  std::vector<int> dense;
  int chi = 0;
  int bound = 0;
};

// Lexicographically least violating subset of size s, if any. With several
// jobs the first elements are dealt round-robin and the per-task results
// merged, which is schedule-independent.
std::optional<Violation> sweep_for_violation(const Digraph& d, const SubsetGroups& sg, int s,
                                             const std::function<int(int)>& bound_of, int jobs) {
  int n = d.vertex_count();
  auto scan = [&](int start, int step) -> std::optional<Violation> {
    std::optional<Violation> found;
    for (int x = start; x < n; x += step) {
      bool stop = enumerate_first(sg, x, s, [&](const std::vector<int>& members) {
        int chi = chi_if_strongly_connected(d, members);
        if (chi < 2) return false;
        int bound = bound_of(chi);
        if (s < bound) {
          found = Violation{members, chi, bound};
          return true;
        }
        return false;
      });
      if (stop) return found;
    }
    return found;
  };

  if (jobs <= 1 || n < 2) return scan(0, 1);

  std::vector<std::optional<Violation>> results(static_cast<size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] { results[static_cast<size_t>(t)] = scan(t, jobs); });
  for (auto& w : workers) w.join();
  std::optional<Violation> best;
  for (const auto& r : results)
    if (r && (!best || r->dense < best->dense)) best = r;
  return best;
}

}  // namespace

std::optional<Coloring> can_partition_acyclic(const Digraph& d, int k) {
  if (d.empty()) return Coloring{};
  if (k <= 0) return std::nullopt;
  std::map<VertexId, int> assignment;
  for (const auto& comp : scc(d)) {
    if (comp.size() == 1) {
      assignment[comp[0]] = 0;
      continue;
    }
    Digraph sub = induced_subgraph(d, comp);
    std::vector<int> colors;
    if (int ub = greedy_color(sub, colors); ub > k) {
      if (!kcolor_decide(sub, k, colors)) return std::nullopt;
    }
    for (int i = 0; i < sub.vertex_count(); ++i)
      assignment[sub.id_at(i)] = colors[static_cast<size_t>(i)];
  }
  return Coloring(std::move(assignment));
}

int chi_exact(const Digraph& d) {
  if (d.empty()) return 0;
  int best = 1;
  std::vector<int> scratch;
  for (const auto& comp : scc(d)) {
    if (comp.size() < 2) continue;
    Digraph sub = induced_subgraph(d, comp);
    int ub = greedy_color(sub, scratch);
    if (ub <= best) continue;  // cannot raise the maximum
    int value = ub;
    for (int k = 2; k < ub; ++k) {
      if (kcolor_decide(sub, k, scratch)) {
        value = k;
        break;
      }
    }
    best = std::max(best, value);
  }
  return best;
}

int brute_force_chi(const Digraph& d) {
  int n = d.vertex_count();
  if (n > 10) throw TooLarge(n, 10);
  if (n == 0) return 0;

  std::vector<std::vector<int>> parts;
  int best = n;  // singletons always work in a loop-free digraph
  std::function<void(int)> place = [&](int v) {
    if (static_cast<int>(parts.size()) >= best) return;
    if (v == n) {
      best = static_cast<int>(parts.size());
      return;
    }
    for (size_t p = 0; p <= parts.size(); ++p) {
      if (p == parts.size()) parts.push_back({});
      parts[p].push_back(v);
      std::vector<int> sorted = parts[p];
      std::sort(sorted.begin(), sorted.end());
      if (part_acyclic(d, sorted)) place(v + 1);
      parts[p].pop_back();
      if (parts[p].empty()) parts.pop_back();
    }
  };
  place(0);
  return best;
}

int chi_upper_greedy(const Digraph& d) {
  if (d.empty()) return 0;
  std::vector<int> colors;
  return greedy_color(d, colors);
}

FProfile f_profile(const Digraph& d, int k_max, int size_cap, const SearchLimits& limits) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  if (size_cap < 0) throw Error("size cap must be non-negative");
  FProfile profile;
  int n = d.vertex_count();
  profile.size_cap = std::min(size_cap, n);
  if (n == 0) {
    for (int k = 1; k <= k_max; ++k) profile.entries[k] = FProfile::Entry::infinite();
    return profile;
  }
  profile.entries[1] = FProfile::Entry::finite(1);

  std::vector<int> unresolved;
  for (int k = 2; k <= k_max; ++k) unresolved.push_back(k);

  SubsetGroups sg = cycle_groups(d);
  // Subsets reaching dichromatic number >= 2 live inside one strongly
  // connected component, so the largest component bounds the useful sizes.
  int max_group = 0;
  for (const auto& g : sg.groups) max_group = std::max(max_group, static_cast<int>(g.size()));
  int sweep_limit = std::min(profile.size_cap, max_group);
  bool capped = sweep_limit < max_group;
  long long budget_left = limits.subset_budget;
  if (!unresolved.empty() && !sg.groups.empty()) {
    for (int s = 2; s <= sweep_limit && !unresolved.empty(); ++s) {
      long long class_count = count_size_class(sg, s, budget_left);
      if (class_count > budget_left) {
        capped = true;
        break;
      }
      budget_left -= class_count;
      // Lex-least subset per still-unresolved k; everything at this size is
      // scanned because a later subset may reach a higher dichromatic number.
      std::map<int, std::vector<int>> hits;
      for (int x = 0; x < n && static_cast<int>(hits.size()) < static_cast<int>(unresolved.size());
           ++x) {
        enumerate_first(sg, x, s, [&](const std::vector<int>& members) {
          int chi = chi_if_strongly_connected(d, members);
          if (chi >= 2) {
            for (int k : unresolved)
              if (k <= chi && hits.find(k) == hits.end()) hits[k] = members;
          }
          return static_cast<int>(hits.size()) == static_cast<int>(unresolved.size());
        });
      }
      std::vector<int> still;
      for (int k : unresolved) {
        auto it = hits.find(k);
        if (it != hits.end())
          profile.entries[k] = FProfile::Entry::finite(s);
        else
          still.push_back(k);
      }
      unresolved = std::move(still);
    }
  }

  if (!unresolved.empty()) {
    int greedy_ub = chi_upper_greedy(d);
    for (int k : unresolved) {
      if (!capped || greedy_ub < k)
        profile.entries[k] = FProfile::Entry::infinite();
      else
        profile.entries[k] = FProfile::Entry::unknown();
    }
  }
  return profile;
}

FBoundReport check_f_bound(const Digraph& d, const GrowthFunction& f, BoundMode mode, int size_cap,
                           const SearchLimits& limits) {
  if (size_cap < 0) throw Error("size cap must be non-negative");
  auto bound_of = std::function<int(int)>([&](int k) {
    return mode == BoundMode::pointwise ? f.at(k) : f.at(k - 2);
  });

  FBoundReport report;
  int n = d.vertex_count();
  if (n < 2) {
    report.verdict = FBoundReport::Verdict::holds;
    return report;
  }
  // A violating set of minimal size is strongly connected, hence at most as
  // large as the largest strongly connected component; f is non-decreasing,
  // so within that range the bound peaks at the component size itself.
  SubsetGroups sg = cycle_groups(d);
  int max_group = 0;
  for (const auto& g : sg.groups) max_group = std::max(max_group, static_cast<int>(g.size()));
  if (max_group < 2) {
    report.verdict = FBoundReport::Verdict::holds;
    return report;
  }
  int needed = std::min(bound_of(max_group) - 1, max_group);
  if (needed < 2) {
    report.verdict = FBoundReport::Verdict::holds;
    return report;
  }
  int limit = std::min(needed, size_cap);
  long long budget_left = limits.subset_budget;
  bool budget_hit = false;
  for (int s = 2; s <= limit; ++s) {
    long long class_count = count_size_class(sg, s, budget_left);
    if (class_count > budget_left) {
      budget_hit = true;
      break;
    }
    budget_left -= class_count;
    if (auto violation = sweep_for_violation(d, sg, s, bound_of, std::max(1, limits.jobs))) {
      report.verdict = FBoundReport::Verdict::violated;
      report.witness = to_ids(d, violation->dense);
      report.witness_chi = violation->chi;
      report.bound = violation->bound;
      return report;
    }
  }
  report.verdict = (!budget_hit && limit >= needed) ? FBoundReport::Verdict::holds
                                                    : FBoundReport::Verdict::unknown;
  return report;
}

}  // namespace dichroma
