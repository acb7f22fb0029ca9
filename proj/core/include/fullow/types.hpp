#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fullow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A point in the search space. Length equals the problem dimension.
using Point = Vector;

using ObjectiveFn = std::function<double(const Vector&)>;
using GradientFn = std::function<Vector(const Vector&)>;

enum class IterationType : std::uint8_t { FullEval, LowEval };

constexpr std::string_view to_string(IterationType t) noexcept {
  return t == IterationType::FullEval ? "full-eval" : "low-eval";
}

/// Raised by the oracle when the evaluation budget is spent. Solvers catch it
/// and terminate with the best point found so far.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// Budget smaller than f(x0) + one FD gradient + one trial point.
class BudgetTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fullow
