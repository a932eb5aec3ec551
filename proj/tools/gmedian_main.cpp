#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "gmedian/bounds.hpp"
#include "gmedian/instance_gen.hpp"
#include "gmedian/io.hpp"
#include "gmedian/rng.hpp"
#include "gmedian/solvers.hpp"

namespace {

using namespace gmedian;

constexpr int kExitError = 1;   // I/O, budget, or validation failure
constexpr int kExitUsage = 2;   // contradictory or malformed request

struct GlobalOptions {
  std::string cost = "abs";
  bool cost_explicit = false;
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  double tol = 1e-9;
  std::string out;
  int workers = 0;
};

// All numeric CLI output carries 12 significant digits.
std::string fmt(double v) { return format_double(v, 12); }

std::string perm_str(const Permutation& p) {
  std::string s = "(";
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r) s += ' ';
    s += std::to_string(p(r) + 1);
  }
  return s + ")";
}

void print_labelling(const std::vector<Permutation>& perms, const char* symbol) {
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::cout << symbol << "_" << i + 1 << " = " << perm_str(perms[i]) << "\n";
  }
}

void print_median(const AttributedGraph& g) {
  std::cout << "median vertex_weights = [";
  for (std::size_t r = 0; r < g.n; ++r) std::cout << (r ? ", " : "") << fmt(g.vertex_weights[r]);
  std::cout << "]\n";
  std::cout << "median edges =";
  bool any = false;
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t s = r + 1; s < g.n; ++s) {
      if (g.edge(r, s) != 0.0) {
        std::cout << " [" << r + 1 << ", " << s + 1 << ", " << fmt(g.edge(r, s)) << "]";
        any = true;
      }
    }
  }
  if (!any) std::cout << " none";
  std::cout << "\n";
}

void write_or_print_document(const GraphSetDocument& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << write_document(doc);
  } else {
    save_document(doc, out);
  }
}

void save_median(const AttributedGraph& median, const std::string& out) {
  if (out.empty()) return;
  GraphSetDocument doc = from_graph_set(GraphSet::make({median}));
  save_document(doc, out);
}

int checks_exit_code(std::size_t failures) {
  return static_cast<int>(std::min<std::size_t>(failures, 255));
}

void print_report(const BoundReport& report) {
  for (const BoundCheck& c : report.checks) {
    const char* status = c.skipped ? "[skip]" : (c.pass ? "[pass]" : "[FAIL]");
    std::cout << status << " " << c.name << ": " << fmt(c.lhs)
              << (c.rel == CheckRelation::LessEq ? " <= " : " == ") << fmt(c.rhs)
              << " (slack " << fmt(c.slack) << ")";
    if (c.skipped) std::cout << "  hypothesis not met";
    std::cout << "\n";
  }
}

// --- subcommand handlers ---

int run_gen(const GlobalOptions& g, const GenConfig& cfg, const std::string& family) {
  validate(cfg);
  GraphSet set = [&] {
    if (family == "random") return random_graph_set(cfg);
    // Families built around a base graph: the base draws from substream 0,
    // the member permutations (and noise) from substream 1.
    GenConfig base_cfg = cfg;
    base_cfg.seed = derive_seed(cfg.seed, 0);
    const AttributedGraph base = random_weighted_graph(base_cfg);
    GenConfig family_cfg = cfg;
    family_cfg.seed = derive_seed(cfg.seed, 1);
    if (family == "permuted") return permuted_copies(base, cfg.m, family_cfg.seed);
    return perturbed_family(base, family_cfg);
  }();

  GraphSetDocument doc = from_graph_set(set);
  doc.generator = nlohmann::json{{"command", "gen"},     {"family", family},
                                 {"n", cfg.n},           {"m", cfg.m},
                                 {"edge_density", cfg.edge_density},
                                 {"noise", cfg.noise},   {"seed", cfg.seed}};
  write_or_print_document(doc, g.out);
  return 0;
}

int run_distance(const GlobalOptions& g, const std::string& in, std::size_t i, std::size_t j) {
  const GraphSet set = load_graph_set(in);
  if (i < 1 || i > set.size() || j < 1 || j > set.size()) {
    std::cerr << "error: member indices must lie in 1.." << set.size() << "\n";
    return kExitUsage;
  }
  const CostSpec cost = CostSpec::from_flag(g.cost);
  const DistanceResult d =
      pairwise_distance(set[i - 1], set[j - 1], cost, enumeration_cap_for_budget(g.budget));
  std::cout << "distance = " << fmt(d.value) << "\n";
  std::cout << "left = " << perm_str(d.left) << "\n";
  std::cout << "right = " << perm_str(d.right) << "\n";
  return 0;
}

int run_cl(const GlobalOptions& g, const std::string& in, std::size_t pivot) {
  const GraphSet set = load_graph_set(in);
  const CostSpec cost = CostSpec::from_flag(g.cost);
  const SolveMode mode = solve_mode_from_flag(g.mode);
  if (pivot < 1 || pivot > set.size()) {
    std::cerr << "error: pivot must lie in 1.." << set.size() << "\n";
    return kExitUsage;
  }
  const LabellingSolution sol =
      mode == SolveMode::Exact
          ? exact_common_labelling(set, cost, g.budget)
          : heuristic_common_labelling(set, cost, pivot - 1, enumeration_cap_for_budget(g.budget));
  std::cout << "cl = " << fmt(sol.objective_value) << "\n";
  std::cout << "exact = " << (sol.exact ? "true" : "false") << "\n";
  print_labelling(sol.permutations, "pi");
  return 0;
}

int run_gm(const GlobalOptions& g, const std::string& in) {
  const GraphSet set = load_graph_set(in);
  const CostSpec cost = CostSpec::from_flag(g.cost);
  const MedianResult result = exact_generalized_median(set, cost, g.budget);
  std::cout << "gm = " << fmt(result.gm_value) << "\n";
  print_labelling(result.labelling.permutations, "rho");
  print_median(result.median);
  save_median(result.median, g.out);
  return 0;
}

int run_approx_median(const GlobalOptions& g, const std::string& in, std::size_t pivot) {
  const GraphSet set = load_graph_set(in);
  const CostSpec cost = CostSpec::from_flag(g.cost);
  const SolveMode mode = solve_mode_from_flag(g.mode);
  if (pivot < 1 || pivot > set.size()) {
    std::cerr << "error: pivot must lie in 1.." << set.size() << "\n";
    return kExitUsage;
  }
  const MedianResult result = approximated_median(set, cost, mode, g.budget, pivot - 1);
  std::cout << "cl = " << fmt(result.labelling.objective_value) << "\n";
  std::cout << "gm_approx = " << fmt(result.gm_value) << "\n";
  std::cout << "exact = " << (result.labelling.exact ? "true" : "false") << "\n";
  print_labelling(result.labelling.permutations, "pi");
  print_median(result.median);
  save_median(result.median, g.out);
  return 0;
}

// The theorems fix their own cost model; --cost can only confirm it.
const char* intrinsic_cost(const std::string& theorem) {
  return theorem == "3" ? "sq" : "abs";
}

int run_verify(const GlobalOptions& g, const std::string& in, const std::string& theorem,
               double eps, bool eps_set, std::size_t pivot) {
  std::vector<std::string> selected;
  if (theorem == "all") {
    selected = {"1", "2", "3", "c1", "c2"};
    if (g.cost_explicit) {
      std::cerr << "note: --theorem all runs every statement under its own cost model; "
                   "--cost " << g.cost << " is ignored\n";
    }
  } else {
    selected = {theorem};
    if (g.cost_explicit && g.cost != intrinsic_cost(theorem)) {
      std::cerr << "error: theorem " << theorem << " is stated for --cost "
                << intrinsic_cost(theorem) << "; rerun without --cost " << g.cost << "\n";
      return kExitUsage;
    }
  }

  const GraphSet set = load_graph_set(in);
  VerifyOptions opt;
  opt.instance_id = std::filesystem::path(in).stem().string();
  opt.tol = g.tol;
  opt.budget = g.budget;
  if (pivot < 1 || pivot > set.size()) {
    std::cerr << "error: pivot must lie in 1.." << set.size() << "\n";
    return kExitUsage;
  }

  std::vector<BoundReport> reports;
  for (const std::string& t : selected) {
    if (t == "1") {
      reports.push_back(verify_theorem1(set, opt));
    } else if (t == "2") {
      reports.push_back(verify_theorem2(set, opt));
    } else if (t == "3") {
      reports.push_back(verify_theorem3(set, opt));
    } else if (t == "c1") {
      reports.push_back(eps_set ? verify_corollary1(set, eps, opt) : verify_corollary1(set, opt));
    } else {
      reports.push_back(verify_corollary2(set, pivot - 1, opt));
    }
  }

  std::size_t failures = 0;
  std::size_t total = 0;
  for (const BoundReport& report : reports) {
    std::cout << "instance " << report.instance_id << ", cost " << report.cost.flag()
              << ": cl = " << fmt(report.cl_value) << ", gm = " << fmt(report.gm_value)
              << ", gm_approx = " << fmt(report.gm_approx_value);
    if (report.dist_medians) std::cout << ", dist_medians = " << fmt(*report.dist_medians);
    std::cout << "\n";
    print_report(report);
    failures += report.failures();
    total += report.checks.size();
  }
  std::cout << total << " checks, " << total - failures << " passed, " << failures
            << " failed\n";
  if (!g.out.empty()) save_report_csv(reports, g.out);
  return checks_exit_code(failures);
}

int run_report(const GlobalOptions& g, std::size_t count, std::size_t pivot) {
  std::vector<BoundReport> reports;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const GraphSet set = verification_instance(g.seed, k);
    char id[32];
    std::snprintf(id, sizeof(id), "inst%04zu", k);
    VerifyOptions opt;
    opt.instance_id = id;
    opt.tol = g.tol;
    opt.budget = g.budget;
    for (const BoundReport& report :
         {verify_theorem1(set, opt), verify_theorem2(set, opt), verify_theorem3(set, opt),
          verify_corollary1(set, opt), verify_corollary2(set, pivot - 1, opt)}) {
      failures += report.failures();
      reports.push_back(report);
    }
  }
  if (g.out.empty()) {
    std::cout << render_report_csv(reports);
  } else {
    save_report_csv(reports, g.out);
  }
  std::cerr << count << " instances, " << reports.size() << " reports, " << failures
            << " failed checks\n";
  return checks_exit_code(failures);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common labellings, median graphs, and bound verification for small "
               "attributed weighted graphs"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--cost", g.cost, "Cost model: abs (metric) or sq (squared Euclidean)")
      ->check(CLI::IsMember({"abs", "sq"}));
  app.add_option("--mode", g.mode, "Solver mode: exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  app.add_option("--seed", g.seed, "Base seed for generators");
  app.add_option("--budget", g.budget, "Maximum number of labelling tuples to enumerate");
  app.add_option("--tol", g.tol, "Absolute tolerance for bound checks");
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--workers", g.workers, "OpenMP thread count (default: runtime choice)");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  GenConfig cfg;
  std::string family = "random";
  gen->add_option("--n", cfg.n, "Vertices per graph");
  gen->add_option("--m", cfg.m, "Graphs per set");
  gen->add_option("--density", cfg.edge_density, "Edge probability in [0, 1]");
  gen->add_option("--noise", cfg.noise, "Uniform weight noise amplitude (perturbed family)");
  gen->add_option("--family", family, "random | permuted | perturbed")
      ->check(CLI::IsMember({"random", "permuted", "perturbed"}));

  std::string in;
  std::size_t member_i = 1, member_j = 2;
  auto* distance = app.add_subcommand("distance", "Exact distance between two set members");
  distance->add_option("--in", in, "Instance file")->required();
  distance->add_option("--i", member_i, "First member (1-based)");
  distance->add_option("--j", member_j, "Second member (1-based)");

  std::size_t pivot = 1;
  auto* cl = app.add_subcommand("cl", "Common labelling of a graph set");
  cl->add_option("--in", in, "Instance file")->required();
  cl->add_option("--pivot", pivot, "Pivot member for the heuristic (1-based)");

  auto* gm = app.add_subcommand("gm", "Exact generalized median of a graph set");
  gm->add_option("--in", in, "Instance file")->required();

  auto* approx = app.add_subcommand("approx-median", "Median synthesized from a common labelling");
  approx->add_option("--in", in, "Instance file")->required();
  approx->add_option("--pivot", pivot, "Pivot member for the heuristic (1-based)");

  std::string theorem = "all";
  double eps = 0.0;
  auto* verify = app.add_subcommand("verify", "Check the bound statements on one instance");
  verify->add_option("--in", in, "Instance file")->required();
  verify->add_option("--theorem", theorem, "1 | 2 | 3 | c1 | c2 | all")
      ->check(CLI::IsMember({"1", "2", "3", "c1", "c2", "all"}));
  auto* eps_opt = verify->add_option("--eps", eps, "Epsilon for c1 (default: computed GM({median}))");
  verify->add_option("--pivot", pivot, "Pivot member for c2 (1-based)");

  std::size_t count = 200;
  auto* report = app.add_subcommand("report", "Run a seeded verification sweep, emit CSV");
  report->add_option("--count", count, "Number of sweep instances");
  report->add_option("--pivot", pivot, "Pivot member for c2 (1-based)");

  for (auto* sub : {gen, distance, cl, gm, approx, verify, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  g.cost_explicit = app.count("--cost") > 0;
  if (g.workers > 0) omp_set_num_threads(g.workers);

  try {
    if (gen->parsed()) {
      cfg.seed = g.seed;
      return run_gen(g, cfg, family);
    }
    if (distance->parsed()) return run_distance(g, in, member_i, member_j);
    if (cl->parsed()) return run_cl(g, in, pivot);
    if (gm->parsed()) return run_gm(g, in);
    if (approx->parsed()) return run_approx_median(g, in, pivot);
    if (verify->parsed()) {
      return run_verify(g, in, theorem, eps, eps_opt->count() > 0, pivot);
    }
    return run_report(g, count, pivot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
