#include "fullow/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fullow {

ObjectiveOracle::ObjectiveOracle(ObjectiveFn f, int dimension, std::int64_t budget, NoiseFn noise,
                                 std::uint64_t seed)
    : f_(std::move(f)),
      noise_(std::move(noise)),
      noise_rng_(seeded_rng(seed, Stream::Noise)),
      dimension_(dimension),
      budget_(budget) {
  if (!f_) throw std::invalid_argument("oracle needs an objective");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (budget < 1) throw std::invalid_argument("budget must be positive");
}

double ObjectiveOracle::evaluate(const Vector& x) {
  if (x.size() != dimension_) throw std::invalid_argument("point dimension mismatch");
  if (count_ >= budget_) throw BudgetExhausted();
  ++count_;

  constexpr double inf = std::numeric_limits<double>::infinity();
  double value = inf;
  if (x.allFinite()) {
    value = f_(x);
    if (noise_ && std::isfinite(value)) value = noise_(value, x, noise_rng_);
    if (!std::isfinite(value)) value = inf;
  }
  history_.observe(count_, value, x);
  return value;
}

}  // namespace fullow
