#pragma once

#include "fullow/config.hpp"
#include "fullow/oracle.hpp"
#include "fullow/rng.hpp"
#include "fullow/types.hpp"

namespace fullow {

struct LowEvalState {
  double alpha = 1.0;  // direct-search stepsize, always > 0
  int nu = 0;          // consecutive unsuccessful Low-Eval iterations
};

/// Uniform direction on the unit sphere of R^n (normalized Gaussian vector).
Vector sample_sphere_direction(RngStream& rng, int n);

struct PollOutcome {
  bool success = false;
  Point x_next;
  double f_next = 0.0;
  int sign = 0;   // +1 if d was accepted, -1 if -d
  int evals = 0;
};

/// Opportunistic poll of D = [d, -d]: accept the first point with
/// f <= f_x - rho(alpha).
PollOutcome poll(ObjectiveOracle& oracle, const Point& x, double f_x, double alpha,
                 const Vector& d, const SolverConfig& cfg);

struct LowEvalOutcome {
  PollOutcome poll;
  Vector direction;
  LowEvalState next;
  IterationType next_type = IterationType::LowEval;
};

/// Draws d, polls, updates alpha (times lambda on success, theta on
/// failure) and nu, then picks Low-Eval again while nu_next < nb_last.
LowEvalOutcome low_eval_iteration(ObjectiveOracle& oracle, const Point& x, double f_x,
                                  const LowEvalState& state, int nb_last, RngStream& rng,
                                  const SolverConfig& cfg);

}  // namespace fullow
