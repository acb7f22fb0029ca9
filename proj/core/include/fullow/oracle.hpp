#pragma once

#include "fullow/history.hpp"
#include "fullow/rng.hpp"
#include "fullow/types.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fullow {

/// Maps the noiseless value phi(x) to the observed value. Stochastic
/// wrappers draw from `rng`, which is the run's noise stream.
using NoiseFn = std::function<double(double phi, const Vector& x, RngStream& rng)>;

/// What a solver needs to know about an objective.
struct Problem {
  std::string name;
  Point x0;
  ObjectiveFn value;
  NoiseFn noise;        // empty when noiseless
  GradientFn gradient;  // optional exact gradient of `value`

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(x0.size()); }
};

/// Counts evaluations, enforces the budget and keeps the best-so-far trace.
///
/// Every call to evaluate() consumes exactly one unit of budget. Once the
/// counter reaches the budget, evaluate() throws BudgetExhausted without
/// calling the objective. Non-finite objective values (and non-finite query
/// points) come back as +inf so callers reject them through their ordinary
/// decrease tests.
class ObjectiveOracle {
 public:
  ObjectiveOracle(ObjectiveFn f, int dimension, std::int64_t budget, NoiseFn noise = {},
                  std::uint64_t seed = 0);

  double evaluate(const Vector& x);

  [[nodiscard]] std::int64_t count() const noexcept { return count_; }
  [[nodiscard]] std::int64_t budget() const noexcept { return budget_; }
  [[nodiscard]] std::int64_t remaining() const noexcept { return budget_ - count_; }
  [[nodiscard]] bool exhausted() const noexcept { return count_ >= budget_; }
  [[nodiscard]] int dimension() const noexcept { return dimension_; }
  [[nodiscard]] const RunHistory& history() const noexcept { return history_; }
  RunHistory take_history() { return std::move(history_); }

 private:
  ObjectiveFn f_;
  NoiseFn noise_;
  RngStream noise_rng_;
  int dimension_;
  std::int64_t budget_;
  std::int64_t count_ = 0;
  RunHistory history_;
};

}  // namespace fullow
