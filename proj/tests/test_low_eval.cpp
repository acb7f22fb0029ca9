#include "fullow/low_eval.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fullow;

TEST(SphereDirection, UnitNormAndRoughlyIsotropic) {
  auto rng = seeded_rng(11, Stream::Directions);
  const int n = 5;
  Vector mean = Vector::Zero(n);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const Vector d = sample_sphere_direction(rng, n);
    ASSERT_NEAR(d.norm(), 1.0, 1e-14);
    mean += d;
  }
  mean /= draws;
  // Each coordinate has variance 1/n; the mean of 20000 draws is within 5 sigma of 0.
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 5.0 * std::sqrt(1.0 / n / draws));
}

TEST(Poll, AcceptsFirstDirectionWithSufficientDecrease) {
  SolverConfig cfg;
  ObjectiveOracle oracle([](const Vector& x) { return x[0]; }, 1, 10);
  const Vector x = Vector::Zero(1);
  const auto plus = poll(oracle, x, 0.0, 1.0, Vector::Ones(1), cfg);
  ASSERT_TRUE(plus.success);
  EXPECT_EQ(plus.sign, -1);
  EXPECT_EQ(plus.evals, 2);
  EXPECT_EQ(plus.f_next, -1.0);

  const auto minus = poll(oracle, x, 0.0, 1.0, -Vector::Ones(1), cfg);
  EXPECT_EQ(minus.sign, 1);
  EXPECT_EQ(minus.evals, 1);
  EXPECT_EQ(oracle.count(), 3);
}

TEST(Poll, BoundaryOfSufficientDecreaseIsInclusive) {
  SolverConfig cfg;
  const double alpha = 0.5;
  const double rho = forcing_rho(alpha, cfg);
  // f(x + alpha d) lands exactly on f(x) - rho.
  ObjectiveOracle oracle([rho](const Vector& x) { return x[0] > 0.0 ? -rho : 1.0; }, 1, 10);
  const auto out = poll(oracle, Vector::Zero(1), 0.0, alpha, Vector::Ones(1), cfg);
  EXPECT_TRUE(out.success);

  ObjectiveOracle strict([rho](const Vector&) { return -0.5 * rho; }, 1, 10);
  EXPECT_FALSE(poll(strict, Vector::Zero(1), 0.0, alpha, Vector::Ones(1), cfg).success);
}

TEST(Poll, UnchangedValueFailsEvenWhenRhoIsBelowRounding) {
  SolverConfig cfg;
  const double alpha = 1e-7;
  ASSERT_EQ(1.0 - forcing_rho(alpha, cfg), 1.0);
  ObjectiveOracle flat([](const Vector&) { return 1.0; }, 2, 10);
  EXPECT_FALSE(poll(flat, Vector::Zero(2), 1.0, alpha, Vector::Unit(2, 0), cfg).success);
}

TEST(Poll, RejectsNonFiniteTrials) {
  SolverConfig cfg;
  ObjectiveOracle oracle([](const Vector&) { return -std::numeric_limits<double>::infinity(); }, 1, 10);
  EXPECT_FALSE(poll(oracle, Vector::Zero(1), 0.0, 1.0, Vector::Ones(1), cfg).success);
}

TEST(LowEvalIteration, StepsizeAndFailureCounter) {
  SolverConfig cfg;
  auto rng = seeded_rng(1, Stream::Directions);
  ObjectiveOracle flat([](const Vector&) { return 1.0; }, 3, 100);
  LowEvalState st{0.8, 2};
  const auto fail = low_eval_iteration(flat, Vector::Zero(3), 1.0, st, 4, rng, cfg);
  EXPECT_FALSE(fail.poll.success);
  EXPECT_DOUBLE_EQ(fail.next.alpha, 0.4);
  EXPECT_EQ(fail.next.nu, 3);
  EXPECT_EQ(fail.next_type, IterationType::LowEval);  // 3 < 4

  const auto fail2 = low_eval_iteration(flat, Vector::Zero(3), 1.0, fail.next, 4, rng, cfg);
  EXPECT_EQ(fail2.next.nu, 4);
  EXPECT_EQ(fail2.next_type, IterationType::FullEval);

  // Any direction from the peak of -|x| improves on the first sign.
  ObjectiveOracle peak([](const Vector& x) { return -x.norm(); }, 3, 100);
  const auto ok = low_eval_iteration(peak, Vector::Zero(3), 0.0, st, 4, rng, cfg);
  ASSERT_TRUE(ok.poll.success);
  EXPECT_EQ(ok.poll.sign, 1);
  EXPECT_DOUBLE_EQ(ok.next.alpha, 1.6);
  EXPECT_EQ(ok.next.nu, 2);
  EXPECT_EQ(ok.next_type, IterationType::LowEval);
}

TEST(LowEvalIteration, ZeroBacktracksHandsBackToFullEval) {
  SolverConfig cfg;
  auto rng = seeded_rng(1, Stream::Directions);
  ObjectiveOracle flat([](const Vector&) { return 1.0; }, 2, 100);
  const auto out = low_eval_iteration(flat, Vector::Zero(2), 1.0, LowEvalState{1.0, 0}, 0, rng, cfg);
  EXPECT_EQ(out.next_type, IterationType::FullEval);
}
