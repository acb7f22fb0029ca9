#pragma once

#include "fullow/oracle.hpp"
#include "fullow/rng.hpp"
#include "fullow/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fullow {

using ResidualFn = std::function<Vector(const Vector&)>;

enum class Variant : std::uint8_t { Smooth, Piecewise, Noisy };

enum class NoiseKind : std::uint8_t {
  AdditiveDeterministic,
  AdditiveStochastic,
  MultiplicativeDeterministic,
  MultiplicativeStochastic,
};

struct NoiseConfig {
  NoiseKind kind = NoiseKind::AdditiveDeterministic;
  double eps_f = 1e-3;
};

/// A benchmark problem. Residual-based problems evaluate to sum f_i^2
/// (smooth) or sum |f_i| (piecewise); direct problems have only the smooth
/// form. Noise, when present, wraps the smooth value.
struct ProblemSpec {
  std::string name;
  int n = 0;
  int m = 0;  // residual count, 0 for direct problems
  Point x0;
  ResidualFn residuals;
  ObjectiveFn direct;
  Variant variant = Variant::Smooth;
  std::optional<NoiseConfig> noise;
  std::optional<double> known_L;  // Lipschitz constant of the smooth gradient, when known

  [[nodiscard]] bool has_residuals() const noexcept { return static_cast<bool>(residuals); }
};

/// sum_i f_i(x)^2 (or the direct value). Non-finite results become +inf.
double eval_smooth(const ProblemSpec& spec, const Vector& x);
/// sum_i |f_i(x)|. Throws std::invalid_argument for direct problems.
double eval_piecewise(const ProblemSpec& spec, const Vector& x);
/// Value of the spec's variant with noise applied (stochastic kinds draw from rng).
double eval_variant(const ProblemSpec& spec, const Vector& x, RngStream& rng);

/// Deterministic high-frequency noise in [-1, 1]: T3(phi(x)), where
/// phi(x) = 0.9 sin(100 |x|_1) cos(100 |x|_inf) + 0.1 cos(|x|_2) and
/// T3(t) = t (4 t^2 - 3).
double deterministic_noise(const Vector& x);

/// additive:        phi + eps_f * u
/// multiplicative:  phi * (1 + eps_f * u)
/// with u = deterministic_noise(x) or a fresh U(-1, 1) draw.
double apply_noise(const NoiseConfig& noise, double phi, const Vector& x, RngStream& rng);

/// One of ARGLINA, ARWHEAD, BROYDN3D, DQRTIC, ENGVAL1, FREUROTH, PENALTY2,
/// NONDQUAR, ROSENBR, SINQUAD, TRIDIA, WOODS (case-insensitive).
ProblemSpec scalable_problem(std::string_view name, int n);
std::vector<std::string> scalable_names();

/// The 53 (problem, n, m, x0-scale) configurations of the standard
/// derivative-free benchmark, smooth variant.
std::vector<ProblemSpec> suite53_problems();

enum class SuiteKind : std::uint8_t { Smooth53, Piecewise53, Noisy53, Scalable };

struct SuiteSelector {
  SuiteKind kind = SuiteKind::Smooth53;
  NoiseConfig noise;  // Noisy53 only
  int n = 40;         // Scalable only
};

std::vector<ProblemSpec> suite(const SuiteSelector& selector);

/// "smooth53", "piecewise53", "noisy:<kind>[:eps_f]", "scalable:<n>".
SuiteSelector parse_suite(std::string_view text, double default_eps_f = 1e-3);

ProblemSpec with_variant(ProblemSpec spec, Variant variant,
                         std::optional<NoiseConfig> noise = std::nullopt);

/// "smooth", "piecewise", or the noise kind ("additive-deterministic", ...).
std::string variant_label(const ProblemSpec& spec);
std::string_view to_string(NoiseKind kind) noexcept;
std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept;

/// Registry lookup: benchmark names ("rosenbrock", "watson_n6_s1", ...) or
/// scalable names with a dimension suffix ("arwhead_n40"). `variant_label`
/// takes the same strings variant_label() produces.
ProblemSpec find_problem(std::string_view name, std::string_view variant_label, double eps_f = 1e-3);
std::vector<std::string> registered_names();

/// Adapter for the solver: value of the variant, plus the noise wrapper.
Problem to_problem(const ProblemSpec& spec);

}  // namespace fullow
