#pragma once

#include "fullow/config.hpp"
#include "fullow/oracle.hpp"
#include "fullow/types.hpp"

#include <cstdint>

namespace fullow {

/// Forward differences: g_i = (f(x + h e_i) - f_x) / h. Reuses f_x and
/// spends exactly n evaluations.
Vector fd_gradient(ObjectiveOracle& oracle, const Point& x, double f_x, double h);

struct CriticalityResult {
  Vector gradient;
  double h = 0.0;
  int passes = 0;           // FD gradients recomputed
  bool performed = false;   // entry test fired
  bool degenerate = false;  // pass cap reached (or zero gradient)
};

/// True when h > u_g' * beta * ||g||, i.e. the FD parameter is too coarse
/// relative to the gradient it produced.
bool criticality_required(double h, double beta, const Vector& g, const SolverConfig& cfg);

/// Shrinks h geometrically, h_j = omega^j * u_g' * beta * ||g0||, recomputing
/// the FD gradient until h <= u_g' * beta * ||g_j||. Gives up after
/// cfg.criticality_max_passes passes and flags the result as degenerate.
CriticalityResult criticality_step(ObjectiveOracle& oracle, const Point& x, double f_x,
                                   const Vector& g0, double h, double beta,
                                   const SolverConfig& cfg);

/// s'y >= eps_c ||s|| ||y|| with s'y > 0.
bool curvature_condition(const Vector& s, const Vector& y, double eps_c);

/// BFGS inverse-Hessian update
///   H+ = (I - s y'/y's) H (I - y s'/y's) + s s'/y's,
/// skipped (H returned unchanged) when the curvature condition fails.
Matrix bfgs_update(const Matrix& H, const Vector& s, const Vector& y, double eps_c);

/// Initial inverse Hessian: (y0's0 / y0'y0) I when the iteration after the
/// first one is Full-Eval, I otherwise. Falls back to I when the scaling is
/// not a positive finite number (y0 = 0, or y0's0 <= 0).
Matrix h0_init(const Vector& s0, const Vector& y0, IterationType t1);

enum class SwitchRule : std::uint8_t {
  Enabled,   // stop backtracking once beta < gamma * rho(alpha)
  Disabled,  // BFGS-FD ablation: stop after cfg.backtrack_floor_halvings
};

struct LineSearchOutcome {
  bool success = false;   // false: switch to Low-Eval (or floor reached)
  Point x_next;
  double f_next = 0.0;
  double beta = 0.0;      // accepted stepsize, or the one that tripped the stop
  int nb = 0;             // halvings performed
  double g_dot_p = 0.0;
  double rho = 0.0;       // rho(alpha) used by the switch test
  bool steepest_fallback = false;
};

/// Armijo backtracking from beta_bar along p, truncated by the switch test
/// beta >= gamma * rho(alpha). Trial stepsizes are exactly beta_bar * tau^j.
LineSearchOutcome backtracking_search(ObjectiveOracle& oracle, const Point& x, double f_x,
                                      const Vector& g, const Vector& p, double alpha,
                                      const SolverConfig& cfg,
                                      SwitchRule rule = SwitchRule::Enabled);

/// p = -H g (or -g if that is not a descent direction for g), then
/// backtracking_search.
LineSearchOutcome line_search_full_eval(ObjectiveOracle& oracle, const Point& x, double f_x,
                                        const Vector& g, const Matrix& H, double alpha,
                                        const SolverConfig& cfg,
                                        SwitchRule rule = SwitchRule::Enabled);

/// Everything the Full-Eval iteration carries between calls.
struct FullEvalState {
  Matrix H;
  bool h_initialized = false;
  bool has_previous = false;
  Point x_prev;  // point of the previous Full-Eval iteration
  Vector g_prev; // gradient computed there
  int nb_last = 0;
  double h = 0.0;
  std::int64_t iterations = 0;
};

FullEvalState make_full_eval_state(int n, const SolverConfig& cfg);

struct FullEvalOutcome {
  LineSearchOutcome search;
  Vector gradient;
  bool bfgs_applied = false;
  CriticalityResult criticality;
};

/// One Full-Eval iteration: gradient (FD unless `exact` is set), optional
/// criticality step, BFGS update against the previous Full-Eval pair, and the
/// switch-truncated line search. The first call uses p = -g and defers the
/// choice of H0 until the next iteration type is known.
FullEvalOutcome full_eval_iteration(ObjectiveOracle& oracle, const Point& x, double f_x,
                                    FullEvalState& state, double alpha,
                                    const SolverConfig& cfg,
                                    SwitchRule rule = SwitchRule::Enabled,
                                    const GradientFn& exact = {});

}  // namespace fullow
