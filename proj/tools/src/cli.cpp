#include "fullow/cli.hpp"

#include "fullow/bench.hpp"
#include "fullow/csv.hpp"
#include "fullow/driver.hpp"
#include "fullow/problems.hpp"
#include "fullow/profiles.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fullow::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SolverKind solver_or_throw(const std::string& name) {
  const auto kind = parse_solver_kind(name);
  if (!kind) throw UsageError("unknown solver '" + name + "' (expected fullow, bfgs-fd or pds)");
  return *kind;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

ProfileKind profile_kind_or_throw(const std::string& text) {
  if (text == "performance") return ProfileKind::Performance;
  if (text == "data") return ProfileKind::Data;
  throw UsageError("kind must be 'performance' or 'data'");
}

void write_text(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  std::string variant = "smooth";
  std::string solver = "fullow";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> budget;
  double eps_f = 1e-3;
  std::vector<std::string> overrides;
  std::string history;
  std::string out_dir;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto kind = solver_or_throw(a.solver);
  ProblemSpec spec;
  try {
    spec = find_problem(a.problem, a.variant, a.eps_f);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SolverConfig cfg;
  for (const auto& o : a.overrides) {
    try {
      apply_override(cfg, o);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  cfg.seed = a.seed;
  cfg.budget = a.budget.value_or(2000LL * spec.n);

  const auto result = run_solver(to_problem(spec), cfg, kind);
  const auto counts = result.log.counts();

  ResultRow row{spec.name, spec.n, variant_label(spec), spec.noise ? spec.noise->eps_f : 0.0,
                std::string(to_string(kind)), a.seed, cfg.budget, result.evals_used, result.best_f,
                result.history.f0()};
  const fs::path history_path =
      a.history.empty() ? fs::path(a.out_dir) / "histories" / history_filename(row) : fs::path(a.history);
  std::ostringstream hist;
  write_history_csv(hist, result.history);
  write_text(history_path, hist.str());

  out << "problem      " << spec.name << " (n=" << spec.n << ", " << row.variant << ")\n"
      << "solver       " << row.solver << "  seed " << a.seed << '\n'
      << "f0           " << format_double(row.f0) << '\n'
      << "best_f       " << format_double(result.best_f) << '\n'
      << "evaluations  " << result.evals_used << " / " << cfg.budget << '\n'
      << "termination  " << to_string(result.termination) << '\n'
      << "iterations   full " << counts.successful_full << " ok / " << counts.unsuccessful_full
      << " failed, low " << counts.successful_low << " ok / " << counts.unsuccessful_low << " failed\n"
      << "history      " << history_path.string() << '\n';
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string suite = "smooth53";
  std::string solvers = "fullow,bfgs-fd,pds";
  std::string kind = "performance";
  std::optional<double> budget_multiplier;
  double eps_f = 1e-3;
  std::uint64_t seed = 0;
  int replications = 1;
  int workers = 1;
  std::vector<std::string> overrides;
  std::string out_dir;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  try {
    cfg.suite = parse_suite(a.suite, a.eps_f);
    for (const auto& o : a.overrides) apply_override(cfg.base, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.solvers.clear();
  for (const auto& s : split_list(a.solvers)) cfg.solvers.push_back(solver_or_throw(s));
  const auto kind = profile_kind_or_throw(a.kind);
  cfg.basis = kind == ProfileKind::Performance ? BudgetBasis::PerDimension : BudgetBasis::PerSimplex;
  cfg.budget_multiplier = a.budget_multiplier.value_or(kind == ProfileKind::Performance ? 2000.0 : 100.0);
  cfg.seed = a.seed;
  cfg.replications = a.replications;
  cfg.workers = a.workers;

  std::size_t failures = 0;
  const auto records = run_sweep(cfg, [&](const RunRecord& r) {
    ++failures;
    err << "run failed: " << r.row.problem << " " << r.row.solver << " seed " << r.row.seed << ": "
        << r.error << '\n';
  });
  write_sweep(a.out_dir, records);
  out << records.size() << " runs written to " << (fs::path(a.out_dir) / "results.csv").string();
  if (failures > 0) out << " (" << failures << " failed)";
  out << '\n';
  return failures > 0 ? 1 : 0;
}

// ---- profile --------------------------------------------------------------

struct ProfileArgs {
  std::vector<std::string> inputs;
  std::vector<double> taus;
  std::string kind = "performance";
  double fl_budget_multiplier = 2000.0;
  int grid_points = 201;
  std::string out_dir;
};

bool any_noisy(const std::vector<RunData>& runs) {
  return std::any_of(runs.begin(), runs.end(), [](const RunData& r) {
    return r.row.variant != "smooth" && r.row.variant != "piecewise";
  });
}

std::string tau_tag(double tau) { return format_double(tau); }

int cmd_profile(const ProfileArgs& a, std::ostream& out) {
  const auto kind = profile_kind_or_throw(a.kind);
  for (double tau : a.taus)
    if (!(tau > 0.0 && tau < 1.0)) throw UsageError("tau must lie in (0, 1), got " + format_double(tau));

  std::vector<RunData> runs;
  for (const auto& path : a.inputs) {
    auto loaded = load_results(path);
    std::move(loaded.begin(), loaded.end(), std::back_inserter(runs));
  }
  std::vector<double> taus = a.taus;
  if (taus.empty()) taus = any_noisy(runs) ? std::vector<double>{1e-1, 1e-3} : std::vector<double>{1e-2, 1e-5};

  for (double tau : taus) {
    ProfileRequest req{kind, tau, a.fl_budget_multiplier, a.grid_points};
    const auto rep = build_profiles(runs, req);
    const std::string stem = std::string(kind == ProfileKind::Performance ? "performance" : "data") +
                             "_tau" + tau_tag(tau);

    std::ostringstream csv;
    csv << kSchemaLine << '\n' << "alpha,solver,value\n";
    for (const auto& c : rep.curves)
      for (std::size_t i = 0; i < c.alphas.size(); ++i)
        csv << format_double(c.alphas[i]) << ',' << c.solver << ',' << format_double(c.values[i]) << '\n';
    write_text(fs::path(a.out_dir) / (stem + ".csv"), csv.str());

    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = a.kind;
    j["tau"] = tau;
    j["fl_budget_multiplier"] = a.fl_budget_multiplier;
    j["problems"] = rep.matrices.empty() ? 0 : rep.matrices.front().problems.size();
    j["seeds"] = rep.seeds;
    j["solvers"] = nlohmann::ordered_json::array();
    for (const auto& s : rep.summary) {
      j["solvers"].push_back({{"name", s.solver},
                              {"value_at_1", s.at_1},
                              {"value_at_2", s.at_2},
                              {"area", s.area},
                              {"solved_fraction", s.solved}});
    }
    write_text(fs::path(a.out_dir) / (stem + ".json"), j.dump(2) + "\n");

    out << a.kind << " profile, tau " << tau_tag(tau) << ", " << j["problems"].get<std::size_t>()
        << " problems, " << rep.seeds.size() << " seed(s)\n";
    for (const auto& s : rep.summary)
      out << "  " << s.solver << ": value(1)=" << format_double(s.at_1) << " value(2)=" << format_double(s.at_2)
          << " area=" << format_double(s.area) << " solved=" << format_double(s.solved) << '\n';
  }
  return 0;
}

}  // namespace

std::string default_output_dir() {
  const char* env = std::getenv("FULLOW_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? std::string(env) : std::string("fullow-out");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full-Low Evaluation derivative-free optimization", "fullow"};
  app.require_subcommand(1);
  const std::string base_dir = default_output_dir();

  SolveArgs sa;
  sa.out_dir = base_dir;
  auto* solve = app.add_subcommand("solve", "Run one solver on one problem");
  solve->add_option("problem", sa.problem, "Problem name, e.g. rosenbrock or arwhead_n40")->required();
  solve->add_option("variant", sa.variant, "smooth, piecewise or a noise kind")->required();
  solve->add_option("solver", sa.solver, "fullow, bfgs-fd or pds")->required();
  solve->add_option("--seed", sa.seed, "Random seed");
  solve->add_option("--budget", sa.budget, "Evaluation budget (default 2000 n)");
  solve->add_option("--eps-f", sa.eps_f, "Noise level for noisy variants");
  solve->add_option("--set", sa.overrides, "Solver parameter override key=value");
  solve->add_option("--history", sa.history, "History CSV path");
  solve->add_option("--out", sa.out_dir, "Output directory");

  BenchArgs ba;
  ba.out_dir = (fs::path(base_dir) / "bench").string();
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("--suite", ba.suite, "smooth53, piecewise53, noisy:<kind>[:eps], scalable:<n>");
  bench->add_option("--solvers", ba.solvers, "Comma-separated solver list");
  bench->add_option("--kind", ba.kind, "performance (2000 n budget) or data (100 (n+1) budget)");
  bench->add_option("--budget-multiplier", ba.budget_multiplier, "Override the budget multiplier");
  bench->add_option("--eps-f", ba.eps_f, "Noise level for noisy suites");
  bench->add_option("--seed", ba.seed, "First seed");
  bench->add_option("--replications", ba.replications, "Number of consecutive seeds");
  bench->add_option("--workers", ba.workers, "Worker threads");
  bench->add_option("--set", ba.overrides, "Solver parameter override key=value");
  bench->add_option("--out", ba.out_dir, "Output directory");

  ProfileArgs pa;
  pa.out_dir = (fs::path(base_dir) / "profiles").string();
  auto* profile = app.add_subcommand("profile", "Compute performance or data profiles from results CSVs");
  profile->add_option("results", pa.inputs, "results.csv files")->required();
  profile->add_option("--tau", pa.taus, "Convergence tolerance(s) in (0, 1)");
  profile->add_option("--kind", pa.kind, "performance or data");
  profile->add_option("--fl-budget-multiplier", pa.fl_budget_multiplier, "fL uses evaluations up to this times n");
  profile->add_option("--grid-points", pa.grid_points, "Points on the alpha grid");
  profile->add_option("--out", pa.out_dir, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(sa, out);
    if (bench->parsed()) return cmd_bench(ba, out, err);
    if (profile->parsed()) return cmd_profile(pa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetTooSmall& e) {
    err << "error: budget too small: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace fullow::cli
