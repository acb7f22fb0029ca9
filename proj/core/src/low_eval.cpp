#include "fullow/low_eval.hpp"

#include <cmath>
#include <stdexcept>

namespace fullow {

Vector sample_sphere_direction(RngStream& rng, int n) {
  if (n < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  Vector d(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) d[i] = rng.normal();
    norm = d.norm();
  } while (!(norm > 0.0) || !std::isfinite(norm));
  return d / norm;
}

PollOutcome poll(ObjectiveOracle& oracle, const Point& x, double f_x, double alpha,
                 const Vector& d, const SolverConfig& cfg) {
  PollOutcome out;
  // Decrease is compared directly so that rounding of f_x - rho never admits f_trial == f_x.
  const double rho = forcing_rho(alpha, cfg);
  for (const int sign : {1, -1}) {
    Point trial = x + (sign * alpha) * d;
    const double f_trial = oracle.evaluate(trial);
    ++out.evals;
    if (std::isfinite(f_trial) && f_x - f_trial >= rho) {
      out.success = true;
      out.x_next = std::move(trial);
      out.f_next = f_trial;
      out.sign = sign;
      return out;
    }
  }
  return out;
}

LowEvalOutcome low_eval_iteration(ObjectiveOracle& oracle, const Point& x, double f_x,
                                  const LowEvalState& state, int nb_last, RngStream& rng,
                                  const SolverConfig& cfg) {
  LowEvalOutcome out;
  out.direction = sample_sphere_direction(rng, static_cast<int>(x.size()));
  out.poll = poll(oracle, x, f_x, state.alpha, out.direction, cfg);
  out.next = state;
  if (out.poll.success) {
    out.next.alpha = cfg.lambda_expand * state.alpha;
  } else {
    out.next.alpha = cfg.theta_contract * state.alpha;
    ++out.next.nu;
  }
  out.next_type = out.next.nu < nb_last ? IterationType::LowEval : IterationType::FullEval;
  return out;
}

}  // namespace fullow
