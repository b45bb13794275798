#include "dichroma/selftest.hpp"

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "dichroma/condition.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/growth.hpp"
#include "dichroma/io.hpp"
#include "dichroma/product.hpp"
#include "dichroma/rng.hpp"
#include "dichroma/semihom.hpp"
#include "dichroma/solver.hpp"

namespace dichroma {
namespace {

struct Ctx {
  SelftestOptions opt;
  std::vector<std::pair<std::string, std::string>> emitted;  // path, kind
  std::optional<Truncation> shared_345;

  const Truncation& truncation_345() {
    if (!shared_345) shared_345 = build_truncation(GrowthFunction({3, 4, 5}), 3);
    return *shared_345;
  }

  std::string file(const std::string& name) const { return opt.work_dir + "/" + name; }

  void emit(const std::string& name, const std::string& kind, const std::string& content) {
    std::string path = file(name);
    write_file(path, content);
    emitted.emplace_back(path, kind);
  }
};

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

RunResult run_cli(Ctx& ctx, const std::vector<std::string>& args, const std::string& tag) {
  std::string capture = ctx.file("cli_" + tag + ".log");
  std::string cmd = shell_quote(ctx.opt.cli_path);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(capture) + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult result;
  if (rc != -1 && WIFEXITED(rc)) result.exit_code = WEXITSTATUS(rc);
  try {
    result.output = read_file(capture);
  } catch (const Error&) {
  }
  return result;
}

// 1. The whole depth-3 instance on widths (3,4,5) has shortest cycle 3, and
//    every subtree one/two levels down has shortest cycle 4/5 exactly.
bool criterion_digirth(Ctx& ctx, std::string& detail) {
  const Truncation& t = ctx.truncation_345();
  if (t.graph().vertex_count() != 60) {
    detail = "expected 60 vertices, got " + std::to_string(t.graph().vertex_count());
    return false;
  }
  if (digirth(t.graph()) != 3) {
    detail = "whole digraph has digirth " + std::to_string(digirth(t.graph()));
    return false;
  }
  for (int i = 0; i < 3; ++i) {
    int g1 = digirth(induced_subgraph(t.graph(), subtree(t, {i})));
    if (g1 != 4) {
      detail = "subtree (" + std::to_string(i) + ") has digirth " + std::to_string(g1);
      return false;
    }
    for (int j = 0; j < 4; ++j) {
      int g2 = digirth(induced_subgraph(t.graph(), subtree(t, {i, j})));
      if (g2 != 5) {
        detail = "subtree (" + std::to_string(i) + "," + std::to_string(j) + ") has digirth " +
                 std::to_string(g2);
        return false;
      }
    }
  }
  detail = "digirth 3; 3 level-1 subtrees at 4; 12 level-2 subtrees at 5";
  return true;
}

// 2. Exhaustively: subsets of size <= 2 induce acyclic digraphs, size-3
//    subsets stay 2-colourable, size-4 subsets stay 4-colourable.
bool criterion_small_subgraphs(Ctx& ctx, std::string& detail) {
  const Digraph& d = ctx.truncation_345().graph();
  int n = d.vertex_count();
  long long checked2 = 0, checked3 = 0, checked4 = 0;
  for (int a = 0; a < n; ++a) {
    if (!is_acyclic(induced_subgraph(d, {a}))) {
      detail = "singleton not acyclic";
      return false;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ++checked2;
      if (!is_acyclic(induced_subgraph(d, {a, b}))) {
        detail = "pair {" + std::to_string(a) + "," + std::to_string(b) + "} has a cycle";
        return false;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        ++checked3;
        if (chi_exact(induced_subgraph(d, {a, b, c})) > 2) {
          detail = "a 3-set needs more than 2 colours";
          return false;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          ++checked4;
          if (chi_exact(induced_subgraph(d, {a, b, c, e})) > 4) {
            detail = "a 4-set needs more than 4 colours";
            return false;
          }
        }
  if (checked2 != 1770 || checked3 != 34220 || checked4 != 487635) {
    detail = "enumeration counts off: " + std::to_string(checked2) + ", " +
             std::to_string(checked3) + ", " + std::to_string(checked4);
    return false;
  }
  detail = "1770 pairs acyclic; 34220 triples chi<=2; 487635 quadruples chi<=4";
  return true;
}

// 3. The signum colouring is chromatic on random subsets smaller than the
//    matching level width.
bool criterion_sgn_coloring(Ctx& ctx, std::string& detail) {
  const Truncation& t = ctx.truncation_345();
  Rng rng(ctx.opt.seed ^ 0x300);
  int trials_per_level = 10000;
  for (int level : {1, 2}) {
    int width = t.g().at(level);
    for (int trial = 0; trial < trials_per_level; ++trial) {
      int size = 1 + rng.below(width - 1);  // |U| < g(level)
      std::vector<VertexId> u = random_subset(rng, t.graph().vertex_count(), size);
      Coloring c = sgn_coloring(t, u, level);
      if (!is_chromatic(induced_subgraph(t.graph(), u), c)) {
        detail = "non-chromatic signum colouring at level " + std::to_string(level);
        return false;
      }
    }
  }
  detail = "20000 random subsets, zero failures";
  return true;
}

// 4. Depth-d truncations need at least d+1 colours; exact values match the
//    exhaustive oracle.
bool criterion_depth_lower_bound(Ctx&, std::string& detail) {
  Truncation t33 = build_truncation(GrowthFunction({3, 3}), 2);
  int chi33 = chi_exact(t33.graph());
  int oracle33 = brute_force_chi(t33.graph());
  if (chi33 < 3 || chi33 != oracle33) {
    detail = "widths (3,3): chi " + std::to_string(chi33) + ", oracle " + std::to_string(oracle33);
    return false;
  }
  Truncation t222 = build_truncation(GrowthFunction({2, 2, 2}), 3);
  int chi222 = chi_exact(t222.graph());
  int oracle222 = brute_force_chi(t222.graph());
  if (chi222 < 4 || chi222 != oracle222) {
    detail = "widths (2,2,2): chi " + std::to_string(chi222) + ", oracle " +
             std::to_string(oracle222);
    return false;
  }
  detail = "chi=" + std::to_string(chi33) + " and chi=" + std::to_string(chi222) +
           ", both matching the oracle";
  return true;
}

// 5. Solver vs. exhaustive-partition oracle on seeded random digraphs.
bool criterion_oracle_agreement(Ctx& ctx, std::string& detail) {
  Rng rng(ctx.opt.seed ^ 0x500);
  for (int i = 0; i < 500; ++i) {
    int density = 100 * (1 + i % 9);
    int n = 1 + rng.below(8);
    Digraph d = random_digraph(rng, n, density);
    int fast = chi_exact(d);
    int slow = brute_force_chi(d);
    if (fast != slow) {
      detail = "disagreement on trial " + std::to_string(i) + ": " + std::to_string(fast) +
               " vs " + std::to_string(slow);
      return false;
    }
  }
  detail = "500 digraphs, 100% agreement";
  return true;
}

// 6. Colour bounds along semihomomorphisms, and the two-phase composed
//    colouring stays chromatic and within budget.
bool criterion_semihom_bounds(Ctx& ctx, std::string& detail) {
  Rng rng(ctx.opt.seed ^ 0x600);
  int acyclic_cases = 0;
  for (int i = 0; i < 300; ++i) {
    int target_n = 1 + rng.below(4);
    Digraph target = random_digraph(rng, target_n, 100 * (1 + i % 9));
    int source_n = 1 + rng.below(8);
    VertexMap map;
    for (int v = 0; v < source_n; ++v) map[v] = rng.below(target_n);
    bool forbid_intra = (i % 3 == 0);

    std::vector<VertexId> vertices(static_cast<size_t>(source_n));
    for (int v = 0; v < source_n; ++v) vertices[static_cast<size_t>(v)] = v;
    std::vector<Edge> edges;
    for (int u = 0; u < source_n; ++u)
      for (int v = 0; v < source_n; ++v) {
        if (u == v) continue;
        bool allowed = map[u] == map[v] ? !forbid_intra : target.has_edge(map[u], map[v]);
        if (allowed && rng.chance(500)) edges.emplace_back(u, v);
      }
    Digraph source = Digraph::validate(std::move(vertices), std::move(edges));
    if (!is_semihom(source, target, map)) {
      detail = "generator produced a non-semihomomorphism";
      return false;
    }

    int chi_source = chi_exact(source);
    int chi_target = chi_exact(target);
    int excess_sum = 0;
    std::map<VertexId, Coloring> fiber_colorings;
    for (const auto& [image, fiber] : fibers(source, map)) {
      Digraph fiber_graph = induced_subgraph(source, fiber);
      int k_v = chi_exact(fiber_graph) - 1;
      excess_sum += k_v;
      fiber_colorings[image] = *can_partition_acyclic(fiber_graph, k_v + 1);
    }
    if (chi_source > chi_target + excess_sum) {
      detail = "chi bound failed on trial " + std::to_string(i);
      return false;
    }
    if (is_acyclic_semihom(source, target, map)) {
      ++acyclic_cases;
      if (chi_source > chi_target) {
        detail = "acyclic bound failed on trial " + std::to_string(i);
        return false;
      }
    }
    Coloring on_target = *can_partition_acyclic(target, chi_target);
    Coloring composed = compose_coloring(source, target, map, fiber_colorings, on_target);
    if (!is_chromatic(source, composed)) {
      detail = "composed colouring not chromatic on trial " + std::to_string(i);
      return false;
    }
    if (composed.colors_used() > chi_target + excess_sum) {
      detail = "composed colouring over budget on trial " + std::to_string(i);
      return false;
    }
  }
  detail = "300 triples, " + std::to_string(acyclic_cases) + " with acyclic maps";
  return true;
}

struct PairLabels {
  std::vector<VertexId> p, q, root;
};

PairLabels pair_labels(int n, unsigned root_mask, int q_offset = 2) {
  PairLabels out;
  for (int pos = 0; pos < n; ++pos) {
    VertexId base = 10 * (pos + 1);
    if (root_mask & (1u << pos)) {
      out.p.push_back(base);
      out.q.push_back(base);
      out.root.push_back(base);
    } else {
      out.p.push_back(base + 1);
      out.q.push_back(base + q_offset);
    }
  }
  return out;
}

Digraph graph_on(const std::vector<VertexId>& labels,
                 const std::vector<std::pair<int, int>>& slots, unsigned long long mask) {
  std::vector<Edge> edges;
  for (size_t s = 0; s < slots.size(); ++s)
    if (mask & (1ULL << s))
      edges.emplace_back(labels[static_cast<size_t>(slots[s].first)],
                         labels[static_cast<size_t>(slots[s].second)]);
  return Digraph::validate(labels, std::move(edges));
}

// Bound function dominated by the graph's own profile, so membership holds
// by construction. Entries start at 0 and never decrease.
GrowthFunction dominated_bound(Rng& rng, const Digraph& graph, int n, int length) {
  FProfile profile = f_profile(graph, std::max(2, length - 1), n);
  std::vector<int> values(static_cast<size_t>(length), 0);
  int prev = 0;
  for (int k = 2; k < length; ++k) {
    auto it = profile.entries.find(k);
    int limit;
    if (it != profile.entries.end() && it->second.kind == FProfile::Entry::Kind::finite)
      limit = it->second.value;
    else
      limit = prev + rng.below(3);
    values[static_cast<size_t>(k)] = prev + rng.below(std::max(0, limit - prev) + 1);
    prev = values[static_cast<size_t>(k)];
  }
  return GrowthFunction(std::move(values));
}

// 7. Unions of order-isomorphic conditions over a shared root stay inside
//    the family: exhaustively at small scale, then randomized.
bool criterion_amalgamation(Ctx& ctx, std::string& detail) {
  long long exhaustive_unions = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    for (unsigned root_mask = 0; root_mask < (1u << n); ++root_mask) {
      if (std::popcount(root_mask) > 2) continue;
      PairLabels labels = pair_labels(n, root_mask);
      for (unsigned long long mask = 0; mask < (1ULL << slots.size()); ++mask) {
        Digraph p_graph = graph_on(labels.p, slots, mask);
        for (int c : {2, 3, 4}) {
          GrowthFunction f({0, 0, c});
          std::optional<Condition> p;
          try {
            p = make_condition(p_graph, f);
          } catch (const FBoundViolated&) {
            continue;  // not a member; nothing to amalgamate
          }
          Condition q = make_condition(graph_on(labels.q, slots, mask), f);
          AmalgamationResult res = amalgamate_pair(*p, q, labels.root);
          if (res.result.graph().vertex_count() !=
              2 * n - std::popcount(root_mask)) {
            detail = "union has the wrong vertex count";
            return false;
          }
          ++exhaustive_unions;
        }
      }
    }
  }

  Rng rng(ctx.opt.seed ^ 0x700);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + rng.below(6);
    unsigned root_mask = 0;
    for (int pos = 0; pos < n; ++pos)
      if (rng.chance(300)) root_mask |= 1u << pos;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    unsigned long long mask = 0;
    int density = 100 + rng.below(500);
    for (size_t s = 0; s < slots.size(); ++s)
      if (rng.chance(density)) mask |= 1ULL << s;
    PairLabels labels = pair_labels(n, root_mask);
    Digraph p_graph = graph_on(labels.p, slots, mask);
    GrowthFunction f = dominated_bound(rng, p_graph, n, n + 1);
    Condition p = make_condition(p_graph, f);
    Condition q = make_condition(graph_on(labels.q, slots, mask), f);
    amalgamate_pair(p, q, labels.root);  // must not throw FBoundViolated
  }

  // keep one sample file for the round-trip criterion
  PairLabels labels = pair_labels(3, 0b001);
  std::vector<std::pair<int, int>> slots{{0, 1}, {1, 2}, {2, 0}};
  GrowthFunction f({0, 0, 3});
  Condition p = make_condition(graph_on(labels.p, slots, 0b111), f);
  Condition q = make_condition(graph_on(labels.q, slots, 0b111), f);
  AmalgamationResult sample = amalgamate_pair(p, q, labels.root);
  ctx.emit("amalgamation_sample.json", "condition",
           canonical_text(condition_to_json(sample.result)));

  detail = std::to_string(exhaustive_unions) + " exhaustive unions plus 1000 random trials, " +
           "no bound violations";
  return true;
}

// 8. Cycle threading stays inside the family; the singleton case yields
//    exactly a directed 4-cycle.
bool criterion_thread_cycle(Ctx& ctx, std::string& detail) {
  GrowthFunction f0({0, 0, 3});
  std::vector<Condition> singles;
  for (int i = 0; i < 4; ++i) {
    VertexId label = 10 * (i + 1);
    singles.push_back(make_condition(Digraph::validate({label}, {}), f0, label));
  }
  ThreadCycleResult fixed = thread_cycle(singles, {}, f0);
  if (fixed.m_required != 4) {
    detail = "singleton case computed m=" + std::to_string(fixed.m_required);
    return false;
  }
  std::vector<Edge> cycle_edges{{10, 20}, {20, 30}, {30, 40}, {40, 10}};
  std::sort(cycle_edges.begin(), cycle_edges.end());
  if (fixed.result.graph().vertices() != std::vector<VertexId>{10, 20, 30, 40} ||
      fixed.result.graph().edges() != cycle_edges) {
    detail = "singleton case is not the expected 4-cycle";
    return false;
  }
  FProfile fixed_profile = f_profile(fixed.result.graph(), 2, 4);
  if (!(fixed_profile.entries.at(2) == FProfile::Entry::finite(4))) {
    detail = "4-cycle profile entry at 2 is not 4";
    return false;
  }
  ctx.emit("threaded_4cycle.json", "condition",
           canonical_text(condition_to_json(fixed.result)));

  Rng rng(ctx.opt.seed ^ 0x800);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.below(3);
    int root_size = rng.below(n);
    int distinguished_pos = root_size + rng.below(n - root_size);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    unsigned long long mask = 0;
    for (size_t s = 0; s < slots.size(); ++s)
      if (rng.chance(400)) mask |= 1ULL << s;

    auto labels_for = [&](int copy) {
      std::vector<VertexId> labels;
      for (int pos = 0; pos < n; ++pos)
        labels.push_back(pos < root_size ? pos + 1 : 1000 * (copy + 1) + pos);
      return labels;
    };
    std::vector<VertexId> root;
    for (int pos = 0; pos < root_size; ++pos) root.push_back(pos + 1);

    Digraph base = graph_on(labels_for(0), slots, mask);
    GrowthFunction f = dominated_bound(rng, base, n, n + 2);
    int max_step = 0;
    for (int k = 0; k <= n; ++k) max_step = std::max(max_step, f.at(k + 1) - f.at(k));
    if (n + max_step < 2) {
      // raise the final value; it only bounds dichromatic numbers above n,
      // which no subgraph can reach
      std::vector<int> vals = f.values();
      vals.back() += 1;
      f = GrowthFunction(vals);
      max_step = 1;
    }
    int m = n + max_step;

    std::vector<Condition> family;
    for (int i = 0; i < m; ++i) {
      std::vector<VertexId> labels = labels_for(i);
      family.push_back(make_condition(graph_on(labels, slots, mask), f,
                                      labels[static_cast<size_t>(distinguished_pos)]));
    }
    ThreadCycleResult res = thread_cycle(family, root, f);
    if (res.m_required != m) {
      detail = "m mismatch on trial " + std::to_string(trial);
      return false;
    }

    // fiber structure of the fold onto the first condition
    auto fiber_sets = fibers(res.result.graph(), res.certificate);
    VertexId alpha0 = *family[0].distinguished();
    for (const auto& [image, fiber] : fiber_sets) {
      Digraph fiber_graph = induced_subgraph(res.result.graph(), fiber);
      bool in_root = std::binary_search(root.begin(), root.end(), image);
      if (in_root) {
        if (fiber.size() != 1) {
          detail = "root fiber not a singleton";
          return false;
        }
      } else if (image == alpha0) {
        if (static_cast<int>(fiber.size()) != m || fiber_graph.edge_count() != m ||
            digirth(fiber_graph) != m) {
          detail = "distinguished fiber is not exactly the threaded cycle";
          return false;
        }
      } else {
        if (static_cast<int>(fiber.size()) != m || fiber_graph.edge_count() != 0) {
          detail = "a non-root fiber is not an edgeless m-set";
          return false;
        }
      }
    }
  }
  detail = "singleton case is the 4-cycle with profile entry 4; 100 random families verified";
  return true;
}

// 9. End to end through the command line: build a witness for f(n) = n+3 at
//    n = 1 and verify the shifted bound on the emitted file.
bool criterion_cli_witness(Ctx& ctx, std::string& detail) {
  if (ctx.opt.cli_path.empty()) {
    detail = "no CLI binary configured";
    return false;
  }
  std::string witness_path = ctx.file("witness.json");
  std::string witness_report = ctx.file("witness_report.json");
  RunResult w = run_cli(ctx,
                        {"witness", "--f", "3,4,5", "--n", "1", "--out", witness_path, "--report",
                         witness_report},
                        "witness");
  if (w.exit_code != 0) {
    detail = "witness exited with " + std::to_string(w.exit_code);
    return false;
  }
  Json report = Json::parse(read_file(witness_report));
  int chi = report.at("chi").get<int>();
  if (chi < 3) {
    detail = "witness has chi " + std::to_string(chi) + " < 3";
    return false;
  }
  ctx.emitted.emplace_back(witness_path, "truncation");
  ctx.emitted.emplace_back(witness_report, "json");

  std::string verify_report = ctx.file("verify_report.json");
  RunResult v = run_cli(ctx,
                        {"verify", "--in", witness_path, "--f", "3,4,5", "--mode", "shifted2",
                         "--cap", "8", "--out", verify_report},
                        "verify");
  if (v.exit_code != 0) {
    detail = "verify exited with " + std::to_string(v.exit_code);
    return false;
  }
  Json vr = Json::parse(read_file(verify_report));
  if (vr.at("verdict").get<std::string>() != "HOLDS") {
    detail = "verdict " + vr.at("verdict").get<std::string>();
    return false;
  }
  if (vr.at("cap").get<int>() < 3) {  // f(1) - 1
    detail = "cap below f(1)-1";
    return false;
  }
  ctx.emitted.emplace_back(verify_report, "json");
  detail = "witness chi=" + std::to_string(chi) + ", shifted bound HOLDS at cap 8";
  return true;
}

// 10. Every emitted file re-parses to an equal value and re-emits to
//     identical bytes; the CLI and the library produce identical documents.
bool criterion_round_trip(Ctx& ctx, std::string& detail) {
  const Truncation& t = ctx.truncation_345();
  ctx.emit("truncation_3_4_5.json", "truncation", canonical_text(truncation_to_json(t)));

  Digraph triangle = Digraph::validate({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  ctx.emit("triangle.json", "digraph", canonical_text(digraph_to_json(triangle)));
  ctx.emit("triangle.txt", "edgelist", digraph_to_edge_list(triangle));

  Digraph c5 = Digraph::validate({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  ctx.emit("c5_profile.json", "json", canonical_text(profile_to_json(f_profile(c5, 3, 5))));
  GrowthFunction f({0, 0, 4});
  ctx.emit("c4_condition.json", "condition",
           canonical_text(condition_to_json(make_condition(
               Digraph::validate({2, 5, 8, 11}, {{2, 5}, {5, 8}, {8, 11}, {11, 2}}), f))));
  ctx.emit("sgn_coloring.json", "coloring",
           canonical_text(coloring_to_json(sgn_coloring(t, subtree(t, {0}), 2))));
  ctx.emit("verify_sample.json", "json",
           canonical_text(fbound_report_to_json(
               check_f_bound(c5, GrowthFunction({1, 1, 5}), BoundMode::pointwise, 5), 5)));

  if (!ctx.opt.cli_path.empty()) {
    std::string cli_out = ctx.file("cli_truncation.json");
    RunResult r = run_cli(ctx, {"construct", "--g", "3,4,5", "--depth", "3", "--out", cli_out},
                          "construct");
    if (r.exit_code != 0) {
      detail = "construct exited with " + std::to_string(r.exit_code);
      return false;
    }
    if (read_file(cli_out) != read_file(ctx.file("truncation_3_4_5.json"))) {
      detail = "CLI and library truncation documents differ";
      return false;
    }
    ctx.emitted.emplace_back(cli_out, "truncation");
  } else {
    detail = "no CLI binary configured";
    return false;
  }

  int files = 0;
  for (const auto& [path, kind] : ctx.emitted) {
    std::string original = read_file(path);
    std::string again;
    if (kind == "digraph")
      again = canonical_text(digraph_to_json(digraph_from_json(Json::parse(original))));
    else if (kind == "truncation")
      again = canonical_text(truncation_to_json(truncation_from_json(Json::parse(original))));
    else if (kind == "condition")
      again = canonical_text(condition_to_json(condition_from_json(Json::parse(original))));
    else if (kind == "coloring")
      again = canonical_text(coloring_to_json(coloring_from_json(Json::parse(original))));
    else if (kind == "edgelist")
      again = digraph_to_edge_list(digraph_from_edge_list(original));
    else
      again = canonical_text(Json::parse(original));
    if (again != original) {
      detail = "round trip changed " + path;
      return false;
    }
    ++files;
  }
  detail = std::to_string(files) + " files byte-identical after re-parsing";
  return true;
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  Ctx ctx{options, {}, std::nullopt};
  std::filesystem::create_directories(options.work_dir);

  struct Item {
    int number;
    const char* title;
    bool (*fn)(Ctx&, std::string&);
  };
  const std::vector<Item> items = {
      {1, "subtree digirth ladder", criterion_digirth},
      {2, "small subgraphs stay low-dichromatic", criterion_small_subgraphs},
      {3, "signum colouring chromatic on small subsets", criterion_sgn_coloring},
      {4, "depth forces the dichromatic number", criterion_depth_lower_bound},
      {5, "solver agrees with the exhaustive oracle", criterion_oracle_agreement},
      {6, "semihomomorphism colour bounds", criterion_semihom_bounds},
      {7, "amalgamation closure", criterion_amalgamation},
      {8, "cycle-threading closure", criterion_thread_cycle},
      {9, "end-to-end witness via the CLI", criterion_cli_witness},
      {10, "emitted files round-trip byte-identically", criterion_round_trip},
  };

  int failures = 0;
  int run = 0;
  for (const Item& item : items) {
    if (options.only && *options.only != item.number) continue;
    ++run;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = item.fn(ctx, detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (ok ? "[PASS]" : "[FAIL]") << " criterion " << item.number << ": " << item.title;
    if (!detail.empty()) out << " (" << detail << ")";
    out << " [" << std::fixed << std::setprecision(2) << secs << "s]\n";
    if (!ok) ++failures;
  }
  out << run << " criteria run, " << failures << " failed\n";

  if (failures == 0 && !options.keep_files) {
    std::error_code ec;
    std::filesystem::remove_all(options.work_dir, ec);
  }
  return failures;
}

}  // namespace dichroma
