#pragma once

#include "fullow/config.hpp"
#include "fullow/history.hpp"
#include "fullow/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace fullow {

enum class SolverKind : std::uint8_t {
  FullLow,  // alternate Full-Eval and Low-Eval
  BfgsFd,   // Full-Eval only, switch test disabled
  Pds,      // Low-Eval only
};

enum class AblationMode : std::uint8_t { FullOnly, LowOnly };

enum class Termination : std::uint8_t {
  BudgetExhausted,
  AlphaTolerance,
  GradientTolerance,
  StepOverflow,   // alpha grew past cfg.alpha_max
  StepUnderflow,  // rho(alpha) no longer a positive normal double
};

std::string_view to_string(SolverKind kind) noexcept;
std::string_view to_string(Termination t) noexcept;
/// Accepts "fullow", "bfgs-fd", "pds".
std::optional<SolverKind> parse_solver_kind(std::string_view name) noexcept;

struct SolveResult {
  RunHistory history;
  IterationLog log;
  Point best_point;
  double best_f = 0.0;
  std::int64_t evals_used = 0;
  Termination termination = Termination::BudgetExhausted;
};

/// Full-Low Evaluation run from problem.x0 under cfg.budget evaluations.
/// Throws BudgetTooSmall when cfg.budget < n + 2.
SolveResult solve(const Problem& problem, const SolverConfig& cfg);

/// BFGS-FD (FullOnly) or pDS (LowOnly) baselines built from the same
/// iterations.
SolveResult solve_ablation(const Problem& problem, const SolverConfig& cfg, AblationMode mode);

SolveResult run_solver(const Problem& problem, const SolverConfig& cfg, SolverKind kind);

}  // namespace fullow
