#include "fullow/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace fullow {

std::int64_t run_budget(const BenchConfig& cfg, int n) {
  const double units = cfg.basis == BudgetBasis::PerDimension ? n : n + 1.0;
  return static_cast<std::int64_t>(std::llround(cfg.budget_multiplier * units));
}

namespace {

struct Job {
  const ProblemSpec* spec;
  SolverKind solver;
  std::uint64_t seed;
};

RunRecord execute(const Job& job, const BenchConfig& cfg) {
  RunRecord rec;
  auto& row = rec.row;
  row.problem = job.spec->name;
  row.n = job.spec->n;
  row.variant = variant_label(*job.spec);
  row.eps_f = job.spec->noise ? job.spec->noise->eps_f : 0.0;
  row.solver = std::string(to_string(job.solver));
  row.seed = job.seed;
  row.budget = run_budget(cfg, job.spec->n);
  try {
    SolverConfig sc = cfg.base;
    sc.budget = row.budget;
    sc.seed = job.seed;
    auto result = run_solver(to_problem(*job.spec), sc, job.solver);
    row.evals_used = result.evals_used;
    row.best_f = result.best_f;
    row.f0 = result.history.f0();
    rec.oracle_count = result.evals_used;
    rec.history = std::move(result.history);
    if (cfg.keep_logs) rec.log = std::move(result.log);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

auto sort_key(const ResultRow& r) { return std::tie(r.problem, r.variant, r.eps_f, r.solver, r.seed); }

}  // namespace

std::vector<RunRecord> run_sweep(const BenchConfig& cfg,
                                 const std::function<void(const RunRecord&)>& on_error) {
  if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(cfg.budget_multiplier > 0.0)) throw std::invalid_argument("budget multiplier must be positive");
  if (cfg.solvers.empty()) throw std::invalid_argument("no solvers selected");

  const auto problems = suite(cfg.suite);
  std::vector<Job> jobs;
  for (const auto& p : problems)
    for (auto s : cfg.solvers)
      for (int r = 0; r < cfg.replications; ++r) jobs.push_back({&p, s, cfg.seed + static_cast<std::uint64_t>(r)});

  std::vector<RunRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = execute(jobs[i], cfg);
  };
  const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), jobs.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  std::vector<RunRecord> ok;
  ok.reserve(out.size());
  for (auto& rec : out) {
    if (!rec.error.empty()) {
      if (on_error) on_error(rec);
      continue;
    }
    ok.push_back(std::move(rec));
  }
  std::sort(ok.begin(), ok.end(),
            [](const RunRecord& a, const RunRecord& b) { return sort_key(a.row) < sort_key(b.row); });
  return ok;
}

std::vector<ResultRow> rows_of(const std::vector<RunRecord>& records) {
  std::vector<ResultRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(r.row);
  return rows;
}

void write_sweep(const std::filesystem::path& dir, const std::vector<RunRecord>& records) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "histories");
  {
    std::ofstream out(dir / "results.csv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / "results.csv").string());
    write_results_csv(out, rows_of(records));
  }
  for (const auto& r : records) {
    const auto path = dir / "histories" / history_filename(r.row);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_history_csv(out, r.history);
  }
}

std::vector<RunData> load_results(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + csv_path.string());
  auto rows = read_results_csv(in);
  const auto hist_dir = csv_path.parent_path() / "histories";
  std::vector<RunData> out;
  for (auto& row : rows) {
    const auto path = hist_dir / history_filename(row);
    std::ifstream hin(path, std::ios::binary);
    if (!hin) throw std::runtime_error("missing history file " + path.string());
    auto history = read_history_csv(hin);
    history.set_f0(row.f0);
    out.push_back({std::move(row), std::move(history)});
  }
  return out;
}

ProfileReport build_profiles(const std::vector<RunData>& runs, const ProfileRequest& req) {
  if (runs.empty()) throw std::invalid_argument("no results to profile");
  if (!(req.tau > 0.0 && req.tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");

  using GroupKey = std::tuple<std::string, std::string, double>;
  std::map<GroupKey, int> group_n;
  std::set<std::string> solver_set;
  std::set<std::uint64_t> seed_set;
  // (group, solver) -> seed -> run
  std::map<std::pair<GroupKey, std::string>, std::map<std::uint64_t, const RunData*>> index;
  std::map<std::string, std::set<GroupKey>> coverage;

  for (const auto& r : runs) {
    GroupKey g{r.row.problem, r.row.variant, r.row.eps_f};
    auto [it, inserted] = group_n.emplace(g, r.row.n);
    if (!inserted && it->second != r.row.n)
      throw std::invalid_argument("inconsistent dimension for problem " + r.row.problem);
    solver_set.insert(r.row.solver);
    seed_set.insert(r.row.seed);
    auto& slot = index[{g, r.row.solver}][r.row.seed];
    if (slot != nullptr) throw std::invalid_argument("duplicate run for " + r.row.problem + "/" + r.row.solver);
    slot = &r;
    coverage[r.row.solver].insert(g);
  }

  ProfileReport rep;
  rep.solvers.assign(solver_set.begin(), solver_set.end());
  rep.seeds.assign(seed_set.begin(), seed_set.end());

  for (std::size_t a = 0; a < rep.solvers.size(); ++a)
    for (std::size_t b = a + 1; b < rep.solvers.size(); ++b) {
      const auto& A = coverage[rep.solvers[a]];
      const auto& B = coverage[rep.solvers[b]];
      const bool shared = std::any_of(A.begin(), A.end(), [&](const GroupKey& g) { return B.count(g) > 0; });
      if (!shared)
        throw std::invalid_argument("disjoint problem sets: " + rep.solvers[a] + " and " + rep.solvers[b]);
    }

  std::map<GroupKey, double> fL;
  for (const auto& r : runs) {
    GroupKey g{r.row.problem, r.row.variant, r.row.eps_f};
    const auto cutoff = static_cast<std::int64_t>(std::llround(req.fl_budget_multiplier * r.row.n));
    const double best = std::min(r.history.best_f_within(cutoff), r.row.f0);
    auto [it, inserted] = fL.emplace(g, best);
    if (!inserted) it->second = std::min(it->second, best);
  }

  std::vector<double> alphas;
  if (req.kind == ProfileKind::Performance) {
    alphas = performance_grid(req.grid_points);
  } else {
    double max_alpha = 0.0;
    for (const auto& r : runs) max_alpha = std::max(max_alpha, r.row.budget / (r.row.n + 1.0));
    alphas = data_grid(max_alpha, req.grid_points);
  }

  std::vector<std::vector<ProfileCurve>> per_seed;
  rep.solved.assign(rep.solvers.size(), 0.0);
  for (auto seed : rep.seeds) {
    ProfileMatrix pm;
    pm.solvers = rep.solvers;
    for (const auto& [g, n] : group_n) {
      const auto& [name, variant, eps] = g;
      const double f0_ref = [&] {
        // f0 of this seed when any solver has it, else the smallest-seed f0
        for (const auto& s : rep.solvers) {
          auto it = index.find({g, s});
          if (it == index.end()) continue;
          auto jt = it->second.find(seed);
          if (jt != it->second.end()) return jt->second->row.f0;
        }
        for (const auto& s : rep.solvers) {
          auto it = index.find({g, s});
          if (it != index.end()) return it->second.begin()->second->row.f0;
        }
        return 0.0;
      }();
      pm.problems.push_back({name + "/" + variant + "/" + format_double(eps), n, f0_ref, fL.at(g)});
      std::vector<double> row;
      for (const auto& s : rep.solvers) {
        auto it = index.find({g, s});
        if (it == index.end()) {
          row.push_back(kUnsolved);
          continue;
        }
        auto jt = it->second.find(seed);
        const RunData* run = jt != it->second.end() ? jt->second : it->second.begin()->second;
        row.push_back(evals_to_convergence(run->history, run->row.f0, fL.at(g), req.tau, run->row.budget));
      }
      pm.t.push_back(std::move(row));
    }
    per_seed.push_back(compute_profile(req.kind, pm, alphas));
    const auto solved = solved_fractions(pm);
    for (std::size_t s = 0; s < solved.size(); ++s) rep.solved[s] += solved[s];
    rep.matrices.push_back(std::move(pm));
  }
  for (double& v : rep.solved) v /= static_cast<double>(rep.seeds.size());
  rep.curves = average_curves(per_seed);
  rep.summary = summarize(req.kind, rep.curves, rep.solved);
  return rep;
}

}  // namespace fullow
