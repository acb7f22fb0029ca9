#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace fullow {

enum class GradientSource : std::uint8_t { FiniteDifference, Exact };

/// Every constant of the Full-Eval / Low-Eval iterations. Defaults are the
/// values of the reference implementation; see README for the list.
struct SolverConfig {
  // Full-Eval line search.
  double c = 1e-4;              // Armijo constant, (0,1)
  double beta_bar = 1.0;        // initial line-search step
  double tau_backtrack = 0.5;   // backtracking factor, (0,1)
  double gamma = 1.0;           // switch scale: beta >= gamma * rho(alpha)

  // Forcing function rho(a) = min(gamma1, gamma2 * a^2).
  double gamma1 = 1e-5;
  double gamma2 = 1e-3;

  // Low-Eval direct search.
  double lambda_expand = 2.0;
  double theta_contract = 0.5;
  double alpha0 = 1.0;

  // BFGS curvature skip threshold.
  double eps_curvature = 1e-10;

  // Forward-difference parameter.
  double fd_step = std::sqrt(std::numeric_limits<double>::epsilon());
  GradientSource gradient_source = GradientSource::FiniteDifference;

  // Criticality step (off by default).
  bool criticality_enabled = false;
  double u_g_prime = 1.0;
  double omega = 0.5;
  int criticality_max_passes = 60;

  // Ablation: halvings allowed before a switch-free line search gives up.
  int backtrack_floor_halvings = 50;

  // Direct-search stepsize guard.
  double alpha_max = 1e30;

  // Optional stopping tests; zero disables them.
  double stop_alpha_below = 0.0;
  double stop_gradient_below = 0.0;

  std::int64_t budget = 1000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the first out-of-range field.
  void validate() const;
};

/// rho(alpha) = min(gamma1, gamma2 * alpha^2).
inline double forcing_rho(double alpha, const SolverConfig& cfg) noexcept {
  const double quad = cfg.gamma2 * alpha * alpha;
  return quad < cfg.gamma1 ? quad : cfg.gamma1;
}

/// Applies a `key=value` override (keys match the field names above).
/// Throws std::invalid_argument on unknown keys or unparsable values.
void apply_override(SolverConfig& cfg, const std::string& assignment);

}  // namespace fullow
