#include "fullow/driver.hpp"
#include "fullow/problems.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace fullow;

namespace {

Problem quadratic(const Matrix& A, const Vector& x0) {
  Problem p;
  p.name = "quadratic";
  p.x0 = x0;
  p.value = [A](const Vector& x) { return 0.5 * x.dot(A * x); };
  p.gradient = [A](const Vector& x) { return Vector(A * x); };
  return p;
}

Problem l1_norm(int n) {
  Problem p;
  p.name = "l1";
  p.x0 = Vector::LinSpaced(n, 1.0, static_cast<double>(n));
  p.value = [](const Vector& x) { return x.lpNorm<1>(); };
  return p;
}

SolverConfig with_budget(std::int64_t budget, std::uint64_t seed = 0) {
  SolverConfig cfg;
  cfg.budget = budget;
  cfg.seed = seed;
  return cfg;
}

void expect_log_consistent(const SolveResult& r, const SolverConfig& cfg) {
  EXPECT_EQ(r.evals_used, r.log.total_evals());
  for (const auto& rec : r.log.records) {
    if (rec.aborted || !rec.success) continue;
    EXPECT_LT(rec.f_after, rec.f_before);
    if (rec.type == IterationType::FullEval) {
      EXPECT_LE(rec.f_after - rec.f_before, cfg.c * rec.beta * rec.g_dot_p);
      if (rec.switch_active) EXPECT_GE(rec.beta, cfg.gamma * forcing_rho(rec.alpha, cfg));
      EXPECT_EQ(rec.alpha_next, rec.alpha);
    } else {
      EXPECT_GE(rec.f_before - rec.f_after, forcing_rho(rec.alpha, cfg));
      EXPECT_EQ(rec.alpha_next, cfg.lambda_expand * rec.alpha);
    }
  }
}

}  // namespace

TEST(Driver, BudgetIsSpentExactlyAndAccountedFor) {
  const auto spec = find_problem("rosenbrock", "smooth");
  for (auto kind : {SolverKind::FullLow, SolverKind::BfgsFd, SolverKind::Pds}) {
    const auto cfg = with_budget(400);
    const auto r = run_solver(to_problem(spec), cfg, kind);
    EXPECT_EQ(r.evals_used, 400) << to_string(kind);
    EXPECT_EQ(r.termination, Termination::BudgetExhausted);
    expect_log_consistent(r, cfg);
    EXPECT_LE(r.best_f, r.history.f0());
    EXPECT_EQ(r.best_f, to_problem(spec).value(r.best_point));
  }
}

TEST(Driver, BudgetTooSmall) {
  const auto spec = find_problem("watson_n9_s1", "smooth");
  EXPECT_THROW(solve(to_problem(spec), with_budget(10)), BudgetTooSmall);
  EXPECT_NO_THROW(solve(to_problem(spec), with_budget(11)));
}

TEST(Driver, RejectsBadInputs) {
  auto p = to_problem(find_problem("rosenbrock", "smooth"));
  auto cfg = with_budget(100);
  cfg.gradient_source = GradientSource::Exact;
  EXPECT_THROW(solve(p, cfg), std::invalid_argument);
  p.x0[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(solve(p, with_budget(100)), std::invalid_argument);
}

TEST(Driver, DeterministicForFixedSeed) {
  const auto spec = find_problem("rosenbrock", "additive-stochastic", 1e-3);
  const auto a = solve(to_problem(spec), with_budget(600, 9));
  const auto b = solve(to_problem(spec), with_budget(600, 9));
  const auto c = solve(to_problem(spec), with_budget(600, 10));
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.log, b.log);
  EXPECT_FALSE(a.history == c.history);
}

TEST(Driver, AblationsUseOneIterationType) {
  const auto p = to_problem(find_problem("rosenbrock", "piecewise"));
  const auto bfgs = run_solver(p, with_budget(2000), SolverKind::BfgsFd);
  const auto pds = run_solver(p, with_budget(2000), SolverKind::Pds);
  EXPECT_EQ(bfgs.log.counts().low(), 0);
  EXPECT_GT(bfgs.log.counts().total(), 0);
  EXPECT_EQ(pds.log.counts().low(), pds.log.counts().total());
  for (const auto& rec : bfgs.log.records) EXPECT_FALSE(rec.switch_active);
}

// Transition rules: a failed Full-Eval hands over to Low-Eval with nu = 0,
// Low-Eval continues while nu < nb of the last Full-Eval.
TEST(Driver, SwitchingFollowsBacktrackCount) {
  const auto p = to_problem(find_problem("rosenbrock", "piecewise"));
  const auto cfg = with_budget(4000, 2);
  const auto r = solve(p, cfg);
  const auto& recs = r.log.records;
  ASSERT_GT(r.log.counts().low(), 0);
  int nb_last = 0;
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    const auto& cur = recs[i];
    const auto& next = recs[i + 1];
    if (cur.type == IterationType::FullEval) {
      nb_last = cur.nb;
      EXPECT_EQ(next.type, cur.success ? IterationType::FullEval : IterationType::LowEval);
      if (!cur.success) EXPECT_EQ(next.alpha, cur.alpha);
    } else {
      EXPECT_EQ(cur.nb_last, nb_last);
      EXPECT_EQ(next.type, cur.nu < nb_last ? IterationType::LowEval : IterationType::FullEval);
      if (!cur.success) EXPECT_EQ(cur.alpha_next, cfg.theta_contract * cur.alpha);
    }
  }
  expect_log_consistent(r, cfg);
}

TEST(Driver, ExactGradientConvexQuadraticConverges) {
  Matrix A(3, 3);
  A << 4, 1, 0, 1, 3, 1, 0, 1, 2;
  auto cfg = with_budget(1000);
  cfg.gradient_source = GradientSource::Exact;
  cfg.stop_gradient_below = 1e-8;
  const auto r = solve(quadratic(A, Vector::Constant(3, 5.0)), cfg);
  EXPECT_EQ(r.termination, Termination::GradientTolerance);
  EXPECT_LE(r.log.records.size(), 30u);
  EXPECT_EQ(r.log.counts().low(), 0);
}

// Low-Eval only appears once BFGS has resolved the minimizer to FD accuracy.
TEST(Driver, SmoothQuadraticNeedsNoLowEvalBeforeConvergence) {
  const auto r = solve(quadratic(Matrix::Identity(2, 2), Vector::Ones(2)), with_budget(4000));
  EXPECT_LT(r.best_point.norm(), 1e-5);
  const double converged = 0.5 * 1e-10;
  for (const auto& rec : r.log.records)
    if (rec.type == IterationType::LowEval) EXPECT_LE(rec.f_before, converged);
  EXPECT_GT(r.log.counts().successful_full, 0);
}

TEST(Driver, AlphaShrinksOnNonsmoothProblem) {
  SolverConfig cfg = with_budget(8000, 0);
  const auto r = solve(l1_norm(4), cfg);
  double min_alpha = std::numeric_limits<double>::infinity();
  for (const auto& rec : r.log.records)
    if (rec.type == IterationType::LowEval && !rec.success) min_alpha = std::min(min_alpha, rec.alpha);
  EXPECT_LT(min_alpha, cfg.alpha0 * std::pow(cfg.theta_contract, 5));
  EXPECT_LT(r.best_f, 1e-3);
}

TEST(Driver, StepUnderflowEndsRunOnFlatFunction) {
  Problem p;
  p.name = "flat";
  p.x0 = Vector::Zero(2);
  p.value = [](const Vector&) { return 1.0; };
  const auto r = run_solver(p, with_budget(100000), SolverKind::Pds);
  EXPECT_EQ(r.termination, Termination::StepUnderflow);
  EXPECT_LT(r.evals_used, 100000);
  EXPECT_EQ(r.evals_used, r.log.total_evals());
}

TEST(Driver, AlphaToleranceStop) {
  Problem p;
  p.name = "flat";
  p.x0 = Vector::Zero(2);
  p.value = [](const Vector&) { return 1.0; };
  auto cfg = with_budget(100000);
  cfg.stop_alpha_below = 1e-3;
  const auto r = run_solver(p, cfg, SolverKind::Pds);
  EXPECT_EQ(r.termination, Termination::AlphaTolerance);
  EXPECT_EQ(r.log.records.size(), 10u);  // 2^-10 < 1e-3 <= 2^-9
}

TEST(Driver, NonFiniteRegionIsRejected) {
  Problem p;
  p.name = "log-barrier";
  p.x0 = Vector::Constant(1, 2.0);
  p.value = [](const Vector& x) { return x[0] > 0.0 ? x[0] - std::log(x[0]) : std::nan(""); };
  const auto r = solve(p, with_budget(500));
  EXPECT_TRUE(std::isfinite(r.best_f));
  EXPECT_NEAR(r.best_point[0], 1.0, 1e-3);
}

TEST(Driver, SolverNames) {
  EXPECT_EQ(parse_solver_kind("fullow"), SolverKind::FullLow);
  EXPECT_EQ(parse_solver_kind("bfgs-fd"), SolverKind::BfgsFd);
  EXPECT_EQ(parse_solver_kind("pds"), SolverKind::Pds);
  EXPECT_FALSE(parse_solver_kind("nomad").has_value());
  for (auto k : {SolverKind::FullLow, SolverKind::BfgsFd, SolverKind::Pds})
    EXPECT_EQ(parse_solver_kind(to_string(k)), k);
}
