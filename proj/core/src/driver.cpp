#include "fullow/driver.hpp"

#include "fullow/full_eval.hpp"
#include "fullow/low_eval.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fullow {

std::string_view to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::FullLow: return "fullow";
    case SolverKind::BfgsFd: return "bfgs-fd";
    case SolverKind::Pds: return "pds";
  }
  return "?";
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::BudgetExhausted: return "budget";
    case Termination::AlphaTolerance: return "alpha-tolerance";
    case Termination::GradientTolerance: return "gradient-tolerance";
    case Termination::StepOverflow: return "step-overflow";
    case Termination::StepUnderflow: return "step-underflow";
  }
  return "?";
}

std::optional<SolverKind> parse_solver_kind(std::string_view name) noexcept {
  if (name == "fullow") return SolverKind::FullLow;
  if (name == "bfgs-fd") return SolverKind::BfgsFd;
  if (name == "pds") return SolverKind::Pds;
  return std::nullopt;
}

namespace {

class Run {
 public:
  Run(const Problem& problem, const SolverConfig& cfg, SolverKind kind)
      : problem_(problem),
        cfg_(cfg),
        kind_(kind),
        oracle_(problem.value, problem.dimension(), cfg.budget, problem.noise, cfg.seed),
        directions_(seeded_rng(cfg.seed, Stream::Directions)),
        full_(make_full_eval_state(problem.dimension(), cfg)) {
    low_.alpha = cfg.alpha0;
  }

  SolveResult execute() {
    SolveResult result;
    x_ = problem_.x0;
    f_x_ = oracle_.evaluate(x_);
    log_.initial_evals = 1;
    type_ = kind_ == SolverKind::Pds ? IterationType::LowEval : IterationType::FullEval;

    result.termination = Termination::BudgetExhausted;
    while (!oracle_.exhausted()) {
      if (cfg_.stop_alpha_below > 0.0 && low_.alpha < cfg_.stop_alpha_below) {
        result.termination = Termination::AlphaTolerance;
        break;
      }
      IterationRecord rec;
      rec.type = type_;
      rec.f_before = f_x_;
      rec.alpha = low_.alpha;
      const auto before = oracle_.count();
      bool gradient_stop = false;
      try {
        if (type_ == IterationType::FullEval) {
          gradient_stop = full_eval_step(rec);
        } else {
          low_eval_step(rec);
        }
      } catch (const BudgetExhausted&) {
        rec.aborted = true;
        rec.success = false;
        rec.f_after = f_x_;
        rec.alpha_next = low_.alpha;
      }
      rec.evals = oracle_.count() - before;
      if (!rec.aborted || rec.evals > 0) log_.records.push_back(rec);
      if (rec.aborted) break;

      if (gradient_stop) {
        result.termination = Termination::GradientTolerance;
        break;
      }
      if (!(low_.alpha <= cfg_.alpha_max)) {
        result.termination = Termination::StepOverflow;
        break;
      }
      if (!(forcing_rho(low_.alpha, cfg_) >= std::numeric_limits<double>::min())) {
        result.termination = Termination::StepUnderflow;
        break;
      }
    }

    result.evals_used = oracle_.count();
    result.log = std::move(log_);
    result.history = oracle_.take_history();
    result.best_point = result.history.best_point();
    result.best_f = result.history.best_f();
    if (result.best_point.size() == 0) {
      // Every evaluation was non-finite.
      result.best_point = problem_.x0;
    }
    return result;
  }

 private:
  bool full_eval_step(IterationRecord& rec) {
    const SwitchRule rule =
        kind_ == SolverKind::BfgsFd ? SwitchRule::Disabled : SwitchRule::Enabled;
    const GradientFn no_gradient;
    const GradientFn& exact =
        cfg_.gradient_source == GradientSource::Exact ? problem_.gradient : no_gradient;
    FullEvalOutcome out = full_eval_iteration(oracle_, x_, f_x_, full_, low_.alpha, cfg_, rule, exact);
    const auto& s = out.search;
    rec.success = s.success;
    rec.beta = s.beta;
    rec.nb = s.nb;
    rec.g_dot_p = s.g_dot_p;
    rec.rho = s.rho;
    rec.switch_active = rule == SwitchRule::Enabled;
    rec.steepest_fallback = s.steepest_fallback;
    rec.bfgs_applied = out.bfgs_applied;
    rec.grad_norm = out.gradient.norm();
    if (s.success) {
      x_ = s.x_next;
      f_x_ = s.f_next;
    }
    if (kind_ == SolverKind::FullLow && !s.success) {
      type_ = IterationType::LowEval;
      low_.nu = 0;
    } else {
      type_ = IterationType::FullEval;
    }
    rec.f_after = f_x_;
    rec.alpha_next = low_.alpha;
    return cfg_.stop_gradient_below > 0.0 && rec.grad_norm < cfg_.stop_gradient_below;
  }

  void low_eval_step(IterationRecord& rec) {
    rec.nb_last = full_.nb_last;
    LowEvalOutcome out =
        low_eval_iteration(oracle_, x_, f_x_, low_, full_.nb_last, directions_, cfg_);
    rec.success = out.poll.success;
    rec.direction_sign = out.poll.sign;
    rec.rho = forcing_rho(low_.alpha, cfg_);
    if (out.poll.success) {
      x_ = out.poll.x_next;
      f_x_ = out.poll.f_next;
    }
    low_ = out.next;
    rec.nu = low_.nu;
    rec.f_after = f_x_;
    rec.alpha_next = low_.alpha;
    if (kind_ == SolverKind::FullLow) type_ = out.next_type;
  }

  const Problem& problem_;
  SolverConfig cfg_;
  SolverKind kind_;
  ObjectiveOracle oracle_;
  RngStream directions_;
  FullEvalState full_;
  LowEvalState low_;
  IterationLog log_;
  Point x_;
  double f_x_ = 0.0;
  IterationType type_ = IterationType::FullEval;
};

void check_inputs(const Problem& problem, const SolverConfig& cfg) {
  cfg.validate();
  const int n = problem.dimension();
  if (n < 1) throw std::invalid_argument("problem dimension must be >= 1");
  if (!problem.value) throw std::invalid_argument("problem has no objective");
  if (!problem.x0.allFinite()) throw std::invalid_argument("x0 must be finite");
  if (cfg.budget < n + 2)
    throw BudgetTooSmall("budget " + std::to_string(cfg.budget) + " is below n + 2 = " +
                         std::to_string(n + 2));
  if (cfg.gradient_source == GradientSource::Exact && !problem.gradient)
    throw std::invalid_argument("exact gradient requested but problem provides none");
}

}  // namespace

SolveResult run_solver(const Problem& problem, const SolverConfig& cfg, SolverKind kind) {
  check_inputs(problem, cfg);
  return Run(problem, cfg, kind).execute();
}

SolveResult solve(const Problem& problem, const SolverConfig& cfg) {
  return run_solver(problem, cfg, SolverKind::FullLow);
}

SolveResult solve_ablation(const Problem& problem, const SolverConfig& cfg, AblationMode mode) {
  return run_solver(problem, cfg,
                    mode == AblationMode::FullOnly ? SolverKind::BfgsFd : SolverKind::Pds);
}

}  // namespace fullow
