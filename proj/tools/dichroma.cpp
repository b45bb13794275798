// Command-line front end: construction, solving, verification and the
// condition calculus, with JSON reports for scripting and terse tables on
// standard output.

#include <unistd.h>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dichroma/condition.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/growth.hpp"
#include "dichroma/io.hpp"
#include "dichroma/product.hpp"
#include "dichroma/selftest.hpp"
#include "dichroma/semihom.hpp"
#include "dichroma/solver.hpp"

namespace {

using namespace dichroma;

// Exit codes: 0 success, 1 bound violated, 2 unknown verdict or size cap hit,
// 3 input or usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error("empty entry in list '" + csv + "'");
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw Error("bad integer '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw Error("empty list");
  return values;
}

std::string digirth_text(int value) {
  return value == kInfinity ? std::string("inf") : std::to_string(value);
}

Digraph load_digraph(const std::string& path) {
  std::string text = read_file(path);
  if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
      text[text.find_first_not_of(" \t\r\n")] == '{')
    return digraph_from_json(Json::parse(text));
  return digraph_from_edge_list(text);
}

int verdict_exit(FBoundReport::Verdict v) {
  switch (v) {
    case FBoundReport::Verdict::holds:
      return kExitOk;
    case FBoundReport::Verdict::violated:
      return kExitViolated;
    case FBoundReport::Verdict::unknown:
      return kExitUnknown;
  }
  return kExitInputError;
}

std::string self_path() {
  char buffer[4096];
  ssize_t len = ::readlink("/proc/self/exe", buffer, sizeof(buffer) - 1);
  if (len <= 0) return "";
  buffer[len] = '\0';
  return std::string(buffer);
}

struct Cli {
  // construct
  std::string g_csv, f_csv, out_path, format = "json";
  int depth = 0;
  long long size_cap = kDefaultSizeCap;
  // solver-ish
  std::string in_path, report_path, mode = "pointwise";
  int k_max = 4;
  int verify_cap = 8;
  long long budget = 20'000'000;
  int jobs = 1;
  int sgn_n = 0;
  std::string subset_csv;
  int witness_n = 0;
  // conditions
  std::string p_path, q_path, root_csv, conditions_csv;
  // selftest
  std::string cli_path, work_dir;
  unsigned long long seed = 0xD1C40ULL;
  int only_criterion = 0;
  bool keep_files = false;
};

void write_report(const std::string& path, const Json& j) {
  if (!path.empty()) write_file(path, canonical_text(j));
}

int cmd_construct(const Cli& cli) {
  Truncation t = [&] {
    if (!cli.f_csv.empty()) {
      GrowthFunction f = normalize_nondecreasing(parse_int_list(cli.f_csv));
      return build_truncation(derive_g_from_f(f, cli.depth), cli.depth, cli.size_cap);
    }
    GrowthFunction g(parse_int_list(cli.g_csv));
    return build_truncation(g, cli.depth, cli.size_cap);
  }();
  if (cli.format == "json")
    write_file(cli.out_path, canonical_text(truncation_to_json(t)));
  else if (cli.format == "edgelist")
    write_file(cli.out_path, digraph_to_edge_list(t.graph()));
  else if (cli.format == "dot")
    write_file(cli.out_path, digraph_to_dot(t.graph()));
  else
    throw Error("unknown format '" + cli.format + "'");
  std::cout << "vertices: " << t.graph().vertex_count() << "\n"
            << "edges: " << t.graph().edge_count() << "\n"
            << "digirth: " << digirth_text(digirth(t.graph())) << "\n";
  return kExitOk;
}

int cmd_chi(const Cli& cli) {
  Digraph d = load_digraph(cli.in_path);
  int chi = chi_exact(d);
  std::cout << "chi: " << chi << "\n";
  Json j;
  j["chi"] = chi;
  write_report(cli.report_path, j);
  return kExitOk;
}

int cmd_digirth(const Cli& cli) {
  Digraph d = load_digraph(cli.in_path);
  int value = digirth(d);
  std::cout << "digirth: " << digirth_text(value) << "\n";
  Json j;
  if (value == kInfinity)
    j["digirth"] = "inf";
  else
    j["digirth"] = value;
  write_report(cli.report_path, j);
  return kExitOk;
}

int cmd_profile(const Cli& cli) {
  Digraph d = load_digraph(cli.in_path);
  SearchLimits limits{cli.budget, cli.jobs};
  FProfile profile = f_profile(d, cli.k_max, cli.verify_cap, limits);
  std::cout << "k min_size\n";
  bool unknown = false;
  for (const auto& [k, e] : profile.entries) {
    std::string text;
    switch (e.kind) {
      case FProfile::Entry::Kind::finite:
        text = std::to_string(e.value);
        break;
      case FProfile::Entry::Kind::infinite:
        text = "inf";
        break;
      case FProfile::Entry::Kind::unknown:
        text = "unknown";
        unknown = true;
        break;
    }
    std::cout << k << " " << text << "\n";
  }
  write_report(cli.report_path, profile_to_json(profile));
  return unknown ? kExitUnknown : kExitOk;
}

int cmd_verify(const Cli& cli) {
  Digraph d = load_digraph(cli.in_path);
  GrowthFunction f(parse_int_list(cli.f_csv));
  BoundMode mode;
  if (cli.mode == "pointwise")
    mode = BoundMode::pointwise;
  else if (cli.mode == "shifted2")
    mode = BoundMode::shifted2;
  else
    throw Error("mode must be pointwise or shifted2");
  SearchLimits limits{cli.budget, cli.jobs};
  FBoundReport report = check_f_bound(d, f, mode, cli.verify_cap, limits);
  switch (report.verdict) {
    case FBoundReport::Verdict::holds:
      std::cout << "verdict: HOLDS\n";
      break;
    case FBoundReport::Verdict::violated: {
      std::cout << "verdict: VIOLATED\n";
      std::cout << "witness:";
      for (VertexId v : report.witness) std::cout << " " << v;
      std::cout << "\nwitness chi: " << report.witness_chi << "\nrequired size: " << report.bound
                << "\n";
      break;
    }
    case FBoundReport::Verdict::unknown:
      std::cout << "verdict: UNKNOWN\n";
      break;
  }
  write_report(cli.report_path, fbound_report_to_json(report, cli.verify_cap));
  return verdict_exit(report.verdict);
}

int cmd_sgn_color(const Cli& cli) {
  Truncation t = truncation_from_json(Json::parse(read_file(cli.in_path)));
  std::vector<VertexId> ids;
  if (cli.subset_csv.empty())
    ids = t.graph().vertices();
  else
    for (int v : parse_int_list(cli.subset_csv)) ids.push_back(v);
  Coloring c = sgn_coloring(t, ids, cli.sgn_n);
  bool chromatic = is_chromatic(induced_subgraph(t.graph(), ids), c);
  std::cout << "colors used: " << c.colors_used() << "\n"
            << "chromatic on the induced subgraph: " << (chromatic ? "yes" : "no") << "\n";
  write_report(cli.report_path, coloring_to_json(c));
  return kExitOk;
}

int cmd_witness(const Cli& cli) {
  GrowthFunction f = normalize_nondecreasing(parse_int_list(cli.f_csv));
  int depth = cli.witness_n + 1;
  Truncation t = build_truncation(derive_g_from_f(f, depth), depth, cli.size_cap);
  int chi = chi_exact(t.graph());
  if (chi < cli.witness_n + 2)
    throw Error("internal: witness has dichromatic number " + std::to_string(chi) +
                ", below the guaranteed " + std::to_string(cli.witness_n + 2));
  SearchLimits limits{cli.budget, cli.jobs};
  FBoundReport report = check_f_bound(t.graph(), f, BoundMode::shifted2, cli.verify_cap, limits);
  write_file(cli.out_path, canonical_text(truncation_to_json(t)));

  Json j = fbound_report_to_json(report, cli.verify_cap);
  j["chi"] = chi;
  j["n"] = cli.witness_n;
  write_report(cli.report_path, j);

  std::cout << "vertices: " << t.graph().vertex_count() << "\n"
            << "edges: " << t.graph().edge_count() << "\n"
            << "chi: " << chi << "\n"
            << "verdict: " << j["verdict"].get<std::string>() << "\n";
  return verdict_exit(report.verdict);
}

int cmd_amalgamate(const Cli& cli) {
  Condition p = condition_from_json(Json::parse(read_file(cli.p_path)));
  Condition q = condition_from_json(Json::parse(read_file(cli.q_path)));
  std::vector<VertexId> root;
  if (cli.root_csv.empty()) {
    std::set_intersection(p.graph().vertices().begin(), p.graph().vertices().end(),
                          q.graph().vertices().begin(), q.graph().vertices().end(),
                          std::back_inserter(root));
  } else {
    for (int v : parse_int_list(cli.root_csv)) root.push_back(v);
  }
  AmalgamationResult res = amalgamate_pair(p, q, root);
  Json j;
  j["result"] = condition_to_json(res.result);
  Json cert = Json::array();
  for (const auto& [src, dst] : res.certificate) cert.push_back(Json::array({src, dst}));
  j["certificate_map"] = cert;
  j["m_required"] = nullptr;
  write_file(cli.out_path, canonical_text(j));
  std::cout << "vertices: " << res.result.graph().vertex_count() << "\n"
            << "edges: " << res.result.graph().edge_count() << "\n";
  return kExitOk;
}

int cmd_thread_cycle(const Cli& cli) {
  std::vector<Condition> conditions;
  std::stringstream ss(cli.conditions_csv);
  std::string path;
  while (std::getline(ss, path, ','))
    conditions.push_back(condition_from_json(Json::parse(read_file(path))));
  if (conditions.empty()) throw Error("no condition files given");

  std::vector<VertexId> root;
  if (cli.root_csv.empty()) {
    root = conditions.front().graph().vertices();
    for (const Condition& c : conditions) {
      std::vector<VertexId> next;
      std::set_intersection(root.begin(), root.end(), c.graph().vertices().begin(),
                            c.graph().vertices().end(), std::back_inserter(next));
      root = std::move(next);
    }
  } else {
    for (int v : parse_int_list(cli.root_csv)) root.push_back(v);
  }
  GrowthFunction f =
      cli.f_csv.empty() ? conditions.front().f() : GrowthFunction(parse_int_list(cli.f_csv));
  ThreadCycleResult res = thread_cycle(conditions, root, f);
  Json j;
  j["result"] = condition_to_json(res.result);
  Json cert = Json::array();
  for (const auto& [src, dst] : res.certificate) cert.push_back(Json::array({src, dst}));
  j["certificate_map"] = cert;
  j["m_required"] = res.m_required;
  write_file(cli.out_path, canonical_text(j));
  std::cout << "m_required: " << res.m_required << "\n"
            << "vertices: " << res.result.graph().vertex_count() << "\n"
            << "edges: " << res.result.graph().edge_count() << "\n";
  return kExitOk;
}

int cmd_selftest(const Cli& cli) {
  SelftestOptions options;
  options.cli_path = cli.cli_path.empty() ? self_path() : cli.cli_path;
  options.seed = cli.seed;
  options.jobs = cli.jobs;
  options.keep_files = cli.keep_files;
  if (cli.only_criterion > 0) options.only = cli.only_criterion;
  if (cli.work_dir.empty()) {
    options.work_dir = (std::filesystem::temp_directory_path() /
                        ("dichroma-selftest-" + std::to_string(::getpid())))
                           .string();
  } else {
    options.work_dir = cli.work_dir;
  }
  int failures = run_selftest(options, std::cout);
  return failures == 0 ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product-digraph construction and exact dichromatic-number toolkit"};
  app.require_subcommand(1);
  Cli cli;

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cli.jobs, "worker threads for subset sweeps")
        ->envname("DICHROMA_JOBS")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* construct = app.add_subcommand("construct", "build a product truncation");
  construct->add_option("--g", cli.g_csv, "level widths, comma separated");
  construct->add_option("--f", cli.f_csv, "bound profile; level widths are derived from it");
  construct->add_option("--depth", cli.depth, "number of coordinate levels")->required();
  construct->add_option("--cap", cli.size_cap, "vertex-count cap");
  construct->add_option("--out", cli.out_path, "output file")->required();
  construct->add_option("--format", cli.format, "json|edgelist|dot");

  CLI::App* chi = app.add_subcommand("chi", "exact dichromatic number of a digraph file");
  chi->add_option("--in", cli.in_path)->required();
  chi->add_option("--out", cli.report_path, "JSON report path");

  CLI::App* girth = app.add_subcommand("digirth", "shortest directed cycle length");
  girth->add_option("--in", cli.in_path)->required();
  girth->add_option("--out", cli.report_path, "JSON report path");

  CLI::App* profile = app.add_subcommand("profile", "minimum subgraph sizes per dichromatic number");
  profile->add_option("--in", cli.in_path)->required();
  profile->add_option("--kmax", cli.k_max, "largest dichromatic number to profile");
  profile->add_option("--cap", cli.verify_cap, "largest subset size searched");
  profile->add_option("--budget", cli.budget, "total subsets the search may visit");
  profile->add_option("--out", cli.report_path, "JSON report path");
  add_jobs(profile);

  CLI::App* verify = app.add_subcommand("verify", "check a subgraph-size bound");
  verify->add_option("--in", cli.in_path)->required();
  verify->add_option("--f", cli.f_csv, "bound profile, comma separated")->required();
  verify->add_option("--mode", cli.mode, "pointwise|shifted2")->required();
  verify->add_option("--cap", cli.verify_cap, "largest subset size searched");
  verify->add_option("--budget", cli.budget, "total subsets the search may visit");
  verify->add_option("--out", cli.report_path, "JSON report path");
  add_jobs(verify);

  CLI::App* sgn = app.add_subcommand("sgn-color", "signum colouring of a truncation file");
  sgn->add_option("--in", cli.in_path, "truncation JSON with labels")->required();
  sgn->add_option("--n", cli.sgn_n, "coordinates to use")->required();
  sgn->add_option("--subset", cli.subset_csv, "vertex ids, comma separated; default all");
  sgn->add_option("--out", cli.report_path, "colouring JSON path");

  CLI::App* witness = app.add_subcommand(
      "witness", "build a digraph with dichromatic number at least n+2 whose small subgraphs obey f");
  witness->add_option("--f", cli.f_csv, "bound profile")->required();
  witness->add_option("--n", cli.witness_n, "shift parameter")->required();
  witness->add_option("--cap", cli.size_cap, "vertex-count cap");
  witness->add_option("--verify-cap", cli.verify_cap, "largest subset size verified");
  witness->add_option("--budget", cli.budget, "total subsets the verification may visit");
  witness->add_option("--out", cli.out_path, "digraph output file")->required();
  witness->add_option("--report", cli.report_path, "JSON report path");
  add_jobs(witness);

  CLI::App* amalgamate = app.add_subcommand("amalgamate", "union of two order-isomorphic conditions");
  amalgamate->add_option("--p", cli.p_path, "first condition JSON")->required();
  amalgamate->add_option("--q", cli.q_path, "second condition JSON")->required();
  amalgamate->add_option("--root", cli.root_csv, "root labels; default: vertex intersection");
  amalgamate->add_option("--out", cli.out_path, "output JSON")->required();

  CLI::App* thread = app.add_subcommand("thread-cycle",
                                        "join conditions by a cycle through their distinguished vertices");
  thread->add_option("--conditions", cli.conditions_csv, "condition JSON paths, comma separated")
      ->required();
  thread->add_option("--root", cli.root_csv, "root labels; default: common intersection");
  thread->add_option("--f", cli.f_csv, "bound profile; default: taken from the first condition");
  thread->add_option("--out", cli.out_path, "output JSON")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification suite");
  selftest->add_option("--cli", cli.cli_path, "binary for the end-to-end criteria; default: self");
  selftest->add_option("--seed", cli.seed, "master seed for the randomized criteria");
  selftest->add_option("--criterion", cli.only_criterion, "run a single criterion");
  selftest->add_option("--work-dir", cli.work_dir, "where emitted files go");
  selftest->add_flag("--keep", cli.keep_files, "keep emitted files on success");
  add_jobs(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (construct->parsed()) {
      if (cli.g_csv.empty() == cli.f_csv.empty())
        throw Error("give exactly one of --g and --f");
      return cmd_construct(cli);
    }
    if (chi->parsed()) return cmd_chi(cli);
    if (girth->parsed()) return cmd_digirth(cli);
    if (profile->parsed()) return cmd_profile(cli);
    if (verify->parsed()) return cmd_verify(cli);
    if (sgn->parsed()) return cmd_sgn_color(cli);
    if (witness->parsed()) return cmd_witness(cli);
    if (amalgamate->parsed()) return cmd_amalgamate(cli);
    if (thread->parsed()) return cmd_thread_cycle(cli);
    if (selftest->parsed()) return cmd_selftest(cli);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
