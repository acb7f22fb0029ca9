#pragma once

#include "fullow/config.hpp"
#include "fullow/csv.hpp"
#include "fullow/driver.hpp"
#include "fullow/problems.hpp"
#include "fullow/profiles.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fullow {

/// Performance runs use multiplier * n evaluations, data runs multiplier * (n + 1).
enum class BudgetBasis : std::uint8_t { PerDimension, PerSimplex };

struct BenchConfig {
  SuiteSelector suite;
  std::vector<SolverKind> solvers{SolverKind::FullLow, SolverKind::BfgsFd, SolverKind::Pds};
  double budget_multiplier = 2000.0;
  BudgetBasis basis = BudgetBasis::PerDimension;
  std::uint64_t seed = 0;
  int replications = 1;  // seeds seed, seed + 1, ...
  int workers = 1;
  SolverConfig base;     // budget and seed are overwritten per run
  bool keep_logs = false;
};

std::int64_t run_budget(const BenchConfig& cfg, int n);

struct RunRecord {
  ResultRow row;
  RunHistory history;
  IterationLog log;     // empty unless keep_logs
  std::int64_t oracle_count = 0;
  std::string error;    // non-empty when the run failed
};

/// Runs every (problem, solver, seed) of the sweep. Records come back sorted
/// by (problem, solver, seed) whatever the worker count. A failing run is
/// reported through `on_error` and left out of the returned list.
std::vector<RunRecord> run_sweep(const BenchConfig& cfg,
                                 const std::function<void(const RunRecord&)>& on_error = {});

std::vector<ResultRow> rows_of(const std::vector<RunRecord>& records);

/// Writes results.csv and histories/<...>.csv below `dir`.
void write_sweep(const std::filesystem::path& dir, const std::vector<RunRecord>& records);

struct RunData {
  ResultRow row;
  RunHistory history;
};

/// Loads a results CSV and the history files next to it.
std::vector<RunData> load_results(const std::filesystem::path& csv_path);

struct ProfileRequest {
  ProfileKind kind = ProfileKind::Performance;
  double tau = 1e-2;
  double fl_budget_multiplier = 2000.0;  // fL uses evaluations up to this * n
  int grid_points = 201;
};

struct ProfileReport {
  std::vector<std::string> solvers;
  std::vector<std::uint64_t> seeds;
  std::vector<ProfileMatrix> matrices;  // one per seed
  std::vector<ProfileCurve> curves;     // averaged over seeds
  std::vector<double> solved;           // averaged over seeds
  std::vector<ProfileSummary> summary;
};

/// fL per (problem, variant, eps_f) over every solver and seed, then one
/// profile per seed, averaged. A solver without a given seed reuses its
/// smallest-seed run. Problems a solver never ran count as unsolved for it.
/// Throws std::invalid_argument when the input is empty or two solvers share
/// no problem.
ProfileReport build_profiles(const std::vector<RunData>& runs, const ProfileRequest& req);

}  // namespace fullow
