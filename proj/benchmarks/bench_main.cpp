#include "fullow/driver.hpp"
#include "fullow/full_eval.hpp"
#include "fullow/problems.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace fullow;

static void BM_FdGradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = to_problem(scalable_problem("arwhead", n));
  ObjectiveOracle oracle(p.value, n, std::numeric_limits<std::int64_t>::max());
  const double f0 = p.value(p.x0);
  for (auto _ : state) benchmark::DoNotOptimize(fd_gradient(oracle, p.x0, f0, 1.5e-8));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_FdGradient)->Arg(40)->Arg(80)->Arg(320);

static void BM_BfgsUpdate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 gen(1);
  std::normal_distribution<double> nd;
  Vector s(n), y(n);
  for (int i = 0; i < n; ++i) {
    s[i] = nd(gen);
    y[i] = s[i] * (1.0 + 0.1 * std::abs(nd(gen)));
  }
  const Matrix H = Matrix::Identity(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(bfgs_update(H, s, y, 1e-10));
}
BENCHMARK(BM_BfgsUpdate)->Arg(10)->Arg(80)->Arg(320);

static void BM_Solve(benchmark::State& state) {
  const auto kind = static_cast<SolverKind>(state.range(0));
  const auto p = to_problem(find_problem("rosenbrock", "piecewise"));
  SolverConfig cfg;
  cfg.budget = 4000;
  for (auto _ : state) benchmark::DoNotOptimize(run_solver(p, cfg, kind).best_f);
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Solve)
    ->Arg(static_cast<int>(SolverKind::FullLow))
    ->Arg(static_cast<int>(SolverKind::BfgsFd))
    ->Arg(static_cast<int>(SolverKind::Pds));

static void BM_SuiteEvaluation(benchmark::State& state) {
  std::vector<Problem> probs;
  for (const auto& spec : suite(parse_suite("smooth53"))) probs.push_back(to_problem(spec));
  for (auto _ : state)
    for (const auto& p : probs) benchmark::DoNotOptimize(p.value(p.x0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(probs.size()));
}
BENCHMARK(BM_SuiteEvaluation);
BENCHMARK_MAIN();
