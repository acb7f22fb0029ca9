#include "fullow/full_eval.hpp"

#include <cmath>

namespace fullow {

Vector fd_gradient(ObjectiveOracle& oracle, const Point& x, double f_x, double h) {
  const auto n = x.size();
  Vector g(n);
  Point probe = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    probe[i] = x[i] + h;
    g[i] = (oracle.evaluate(probe) - f_x) / h;
    probe[i] = x[i];
  }
  return g;
}

bool criticality_required(double h, double beta, const Vector& g, const SolverConfig& cfg) {
  return h > cfg.u_g_prime * beta * g.norm();
}

CriticalityResult criticality_step(ObjectiveOracle& oracle, const Point& x, double f_x,
                                   const Vector& g0, double h, double beta,
                                   const SolverConfig& cfg) {
  CriticalityResult out;
  out.gradient = g0;
  out.h = h;
  if (!criticality_required(h, beta, g0, cfg)) return out;
  out.performed = true;

  const double scale = cfg.u_g_prime * beta * g0.norm();
  if (!(scale > 0.0)) {
    out.degenerate = true;
    return out;
  }
  double shrink = 1.0;
  while (criticality_required(out.h, beta, out.gradient, cfg)) {
    if (out.passes == cfg.criticality_max_passes) {
      out.degenerate = true;
      break;
    }
    ++out.passes;
    shrink *= cfg.omega;
    out.h = shrink * scale;
    out.gradient = fd_gradient(oracle, x, f_x, out.h);
  }
  return out;
}

bool curvature_condition(const Vector& s, const Vector& y, double eps_c) {
  const double sy = s.dot(y);
  return sy > 0.0 && sy >= eps_c * s.norm() * y.norm();
}

Matrix bfgs_update(const Matrix& H, const Vector& s, const Vector& y, double eps_c) {
  if (!curvature_condition(s, y, eps_c)) return H;
  const double r = 1.0 / y.dot(s);
  // Expanded form of (I - r s y') H (I - r y s') + r s s'.
  const Vector Hy = H * y;
  const double yHy = y.dot(Hy);
  Matrix out = H;
  out.noalias() -= r * (s * Hy.transpose() + Hy * s.transpose());
  out.noalias() += (r * r * yHy + r) * (s * s.transpose());
  // Symmetrize away roundoff.
  return 0.5 * (out + out.transpose());
}

Matrix h0_init(const Vector& s0, const Vector& y0, IterationType t1) {
  const auto n = s0.size();
  if (t1 == IterationType::LowEval) return Matrix::Identity(n, n);
  const double yy = y0.dot(y0);
  const double scale = y0.dot(s0) / yy;
  if (!(yy > 0.0) || !std::isfinite(scale) || !(scale > 0.0)) return Matrix::Identity(n, n);
  return scale * Matrix::Identity(n, n);
}

LineSearchOutcome backtracking_search(ObjectiveOracle& oracle, const Point& x, double f_x,
                                      const Vector& g, const Vector& p, double alpha,
                                      const SolverConfig& cfg, SwitchRule rule) {
  LineSearchOutcome out;
  out.g_dot_p = g.dot(p);
  out.rho = forcing_rho(alpha, cfg);
  const double beta_min = cfg.gamma * out.rho;
  const bool switching = rule == SwitchRule::Enabled;

  double beta = cfg.beta_bar;
  out.beta = beta;
  if (switching && beta < beta_min) return out;

  for (;;) {
    Point trial = x + beta * p;
    const double f_trial = oracle.evaluate(trial);
    if (std::isfinite(f_trial) && f_trial < f_x && f_trial - f_x <= cfg.c * beta * out.g_dot_p) {
      out.success = true;
      out.x_next = std::move(trial);
      out.f_next = f_trial;
      out.beta = beta;
      return out;
    }
    beta *= cfg.tau_backtrack;
    ++out.nb;
    out.beta = beta;
    if (switching ? beta < beta_min : out.nb >= cfg.backtrack_floor_halvings) return out;
  }
}

LineSearchOutcome line_search_full_eval(ObjectiveOracle& oracle, const Point& x, double f_x,
                                        const Vector& g, const Matrix& H, double alpha,
                                        const SolverConfig& cfg, SwitchRule rule) {
  Vector p = -(H * g);
  bool fallback = false;
  const double slope = g.dot(p);
  if (!std::isfinite(slope) || slope >= 0.0) {
    p = -g;
    fallback = true;
  }
  auto out = backtracking_search(oracle, x, f_x, g, p, alpha, cfg, rule);
  out.steepest_fallback = fallback;
  return out;
}

FullEvalState make_full_eval_state(int n, const SolverConfig& cfg) {
  FullEvalState st;
  st.H = Matrix::Identity(n, n);
  st.h = cfg.fd_step;
  return st;
}

FullEvalOutcome full_eval_iteration(ObjectiveOracle& oracle, const Point& x, double f_x,
                                    FullEvalState& state, double alpha,
                                    const SolverConfig& cfg, SwitchRule rule,
                                    const GradientFn& exact) {
  FullEvalOutcome out;
  if (exact) {
    out.gradient = exact(x);
  } else {
    out.gradient = fd_gradient(oracle, x, f_x, state.h);
    if (cfg.criticality_enabled) {
      out.criticality =
          criticality_step(oracle, x, f_x, out.gradient, state.h, cfg.beta_bar, cfg);
      out.gradient = out.criticality.gradient;
      state.h = out.criticality.h;
    }
  }

  if (!state.has_previous) {
    // k = 0: steepest descent; H0 is fixed once t_1 is known.
    const Vector p = -out.gradient;
    out.search = backtracking_search(oracle, x, f_x, out.gradient, p, alpha, cfg, rule);
    if (!out.search.success) {
      const Vector zero = Vector::Zero(x.size());
      state.H = h0_init(zero, zero, IterationType::LowEval);
      state.h_initialized = true;
    }
  } else {
    const Vector s = x - state.x_prev;
    const Vector y = out.gradient - state.g_prev;
    if (!state.h_initialized) {
      state.H = h0_init(s, y, IterationType::FullEval);
      state.h_initialized = true;
    }
    out.bfgs_applied = curvature_condition(s, y, cfg.eps_curvature);
    if (out.bfgs_applied) state.H = bfgs_update(state.H, s, y, cfg.eps_curvature);
    out.search = line_search_full_eval(oracle, x, f_x, out.gradient, state.H, alpha, cfg, rule);
  }

  state.x_prev = x;
  state.g_prev = out.gradient;
  state.has_previous = true;
  state.nb_last = out.search.nb;
  ++state.iterations;
  return out;
}

}  // namespace fullow
