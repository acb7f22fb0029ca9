#include "fullow/config.hpp"
#include "fullow/history.hpp"
#include "fullow/oracle.hpp"
#include "fullow/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace fullow;

namespace {

double sphere(const Vector& x) { return x.squaredNorm(); }

}  // namespace

TEST(Config, DefaultsMatchReferenceConstants) {
  const SolverConfig cfg;
  EXPECT_EQ(cfg.beta_bar, 1.0);
  EXPECT_EQ(cfg.tau_backtrack, 0.5);
  EXPECT_EQ(cfg.gamma, 1.0);
  EXPECT_EQ(cfg.gamma1, 1e-5);
  EXPECT_EQ(cfg.gamma2, 1e-3);
  EXPECT_EQ(cfg.eps_curvature, 1e-10);
  EXPECT_EQ(cfg.fd_step, std::sqrt(std::numeric_limits<double>::epsilon()));
  EXPECT_FALSE(cfg.criticality_enabled);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, ForcingFunctionIsMinOfBothBranches) {
  const SolverConfig cfg;
  EXPECT_DOUBLE_EQ(forcing_rho(0.01, cfg), 1e-7);
  EXPECT_DOUBLE_EQ(forcing_rho(1.0, cfg), 1e-5);
  EXPECT_DOUBLE_EQ(forcing_rho(0.1, cfg), 1e-5);  // tie at sqrt(gamma1 / gamma2)
  double prev = 0.0;
  for (double a = 1e-6; a < 1e3; a *= 1.7) {
    const double r = forcing_rho(a, cfg);
    EXPECT_GT(r, 0.0);
    EXPECT_GE(r, prev);
    prev = r;
  }
}

TEST(Config, ValidateRejectsOutOfRange) {
  SolverConfig cfg;
  cfg.c = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.theta_contract = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.lambda_expand = 0.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.budget = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Config, Overrides) {
  SolverConfig cfg;
  apply_override(cfg, "c=0.25");
  apply_override(cfg, "criticality_enabled=true");
  apply_override(cfg, "criticality_max_passes=7");
  EXPECT_EQ(cfg.c, 0.25);
  EXPECT_TRUE(cfg.criticality_enabled);
  EXPECT_EQ(cfg.criticality_max_passes, 7);
  EXPECT_THROW(apply_override(cfg, "nope=1"), std::invalid_argument);
  EXPECT_THROW(apply_override(cfg, "c=abc"), std::invalid_argument);
  EXPECT_THROW(apply_override(cfg, "c"), std::invalid_argument);
}

TEST(Rng, StreamsAreReproducibleAndIndependent) {
  auto a = seeded_rng(42, Stream::Directions);
  auto b = seeded_rng(42, Stream::Directions);
  auto c = seeded_rng(42, Stream::Noise);
  auto d = seeded_rng(43, Stream::Directions);
  const auto a0 = a.next_u64();
  EXPECT_EQ(a0, b.next_u64());
  EXPECT_NE(a0, c.next_u64());
  EXPECT_NE(a0, d.next_u64());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(-1.0, 1.0);
    EXPECT_GE(u, -1.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Oracle, CountsEveryEvaluationAndEnforcesBudget) {
  ObjectiveOracle oracle(sphere, 2, 3);
  const Vector x = Vector::Ones(2);
  EXPECT_EQ(oracle.evaluate(x), 2.0);
  oracle.evaluate(x);
  oracle.evaluate(x);
  EXPECT_EQ(oracle.count(), 3);
  EXPECT_TRUE(oracle.exhausted());
  EXPECT_THROW(oracle.evaluate(x), BudgetExhausted);
  EXPECT_EQ(oracle.count(), 3);
}

TEST(Oracle, NonFiniteValuesAndPointsBecomeInfinity) {
  ObjectiveOracle oracle([](const Vector&) { return std::nan(""); }, 1, 10);
  EXPECT_EQ(oracle.evaluate(Vector::Zero(1)), std::numeric_limits<double>::infinity());
  ObjectiveOracle plain(sphere, 1, 10);
  Vector bad(1);
  bad << std::numeric_limits<double>::infinity();
  EXPECT_EQ(plain.evaluate(bad), std::numeric_limits<double>::infinity());
  EXPECT_EQ(plain.count(), 1);
}

TEST(Oracle, RejectsWrongDimension) {
  ObjectiveOracle oracle(sphere, 2, 10);
  EXPECT_THROW(oracle.evaluate(Vector::Zero(3)), std::invalid_argument);
  EXPECT_EQ(oracle.count(), 0);
}

TEST(Oracle, NoiseWrapperSeesTheRunNoiseStream) {
  auto noise = [](double phi, const Vector&, RngStream& rng) { return phi + rng.uniform(-1.0, 1.0); };
  ObjectiveOracle a(sphere, 1, 10, noise, 5);
  ObjectiveOracle b(sphere, 1, 10, noise, 5);
  ObjectiveOracle c(sphere, 1, 10, noise, 6);
  const Vector x = Vector::Zero(1);
  const double va = a.evaluate(x);
  EXPECT_EQ(va, b.evaluate(x));
  EXPECT_NE(va, c.evaluate(x));
  EXPECT_LE(std::abs(va), 1.0);
}

TEST(History, KeepsOnlyImprovementsAndFirstValue) {
  RunHistory h;
  const Vector x = Vector::Zero(1);
  h.observe(1, 5.0, x);
  h.observe(2, 7.0, x);
  h.observe(3, 4.0, x);
  h.observe(4, 4.0, x);
  h.observe(5, std::numeric_limits<double>::infinity(), x);
  h.observe(6, 1.0, x);
  EXPECT_EQ(h.f0(), 5.0);
  ASSERT_EQ(h.entries().size(), 3u);
  EXPECT_EQ(h.entries()[1], (HistoryEntry{3, 4.0}));
  EXPECT_EQ(h.best_f(), 1.0);
  EXPECT_EQ(h.best_f_within(5), 4.0);
  EXPECT_EQ(h.best_f_within(0), std::numeric_limits<double>::infinity());
}

TEST(History, AppendEnforcesMonotonicity) {
  RunHistory h;
  h.append({1, 3.0});
  EXPECT_THROW(h.append({1, 2.0}), std::invalid_argument);
  EXPECT_THROW(h.append({2, 4.0}), std::invalid_argument);
  EXPECT_NO_THROW(h.append({2, 2.0}));
  RunHistory g;
  EXPECT_THROW(g.append({0, 1.0}), std::invalid_argument);
}

TEST(IterationLog, TotalsAndCounts) {
  IterationLog log;
  log.initial_evals = 1;
  IterationRecord full_ok;
  full_ok.type = IterationType::FullEval;
  full_ok.success = true;
  full_ok.evals = 4;
  IterationRecord low_fail;
  low_fail.type = IterationType::LowEval;
  low_fail.evals = 2;
  IterationRecord aborted = low_fail;
  aborted.aborted = true;
  aborted.evals = 1;
  log.records = {full_ok, low_fail, low_fail, aborted};
  EXPECT_EQ(log.total_evals(), 1 + 4 + 2 + 2 + 1);
  const auto c = log.counts();
  EXPECT_EQ(c.successful_full, 1);
  EXPECT_EQ(c.unsuccessful_low, 2);
  EXPECT_EQ(c.total(), 3);
  EXPECT_EQ(c.low(), 2);
}
