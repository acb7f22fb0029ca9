#include "fullow/config.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>
#include <string_view>

namespace fullow {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid solver config: ") + what);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: " + std::string(text));
  return v;
}

template <class Int>
Int parse_int(std::string_view text) {
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("not an integer: " + std::string(text));
  return v;
}

bool parse_bool(std::string_view text) {
  if (text == "1" || text == "true" || text == "on") return true;
  if (text == "0" || text == "false" || text == "off") return false;
  throw std::invalid_argument("not a boolean: " + std::string(text));
}

}  // namespace

void SolverConfig::validate() const {
  require(c > 0.0 && c < 1.0, "c must lie in (0,1)");
  require(beta_bar > 0.0, "beta_bar must be positive");
  require(tau_backtrack > 0.0 && tau_backtrack < 1.0, "tau_backtrack must lie in (0,1)");
  require(gamma > 0.0, "gamma must be positive");
  require(gamma1 > 0.0 && gamma2 > 0.0, "gamma1 and gamma2 must be positive");
  require(lambda_expand >= 1.0, "lambda_expand must be >= 1");
  require(theta_contract > 0.0 && theta_contract < 1.0, "theta_contract must lie in (0,1)");
  require(alpha0 > 0.0, "alpha0 must be positive");
  require(eps_curvature > 0.0 && eps_curvature < 1.0, "eps_curvature must lie in (0,1)");
  require(fd_step > 0.0, "fd_step must be positive");
  require(u_g_prime > 0.0, "u_g_prime must be positive");
  require(omega > 0.0 && omega < 1.0, "omega must lie in (0,1)");
  require(criticality_max_passes > 0, "criticality_max_passes must be positive");
  require(backtrack_floor_halvings > 0, "backtrack_floor_halvings must be positive");
  require(alpha_max > alpha0, "alpha_max must exceed alpha0");
  require(stop_alpha_below >= 0.0 && stop_gradient_below >= 0.0, "stop tolerances must be >= 0");
  require(budget > 0, "budget must be positive");
}

void apply_override(SolverConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("override must be key=value: " + assignment);
  const std::string key = assignment.substr(0, eq);
  const std::string_view value = std::string_view(assignment).substr(eq + 1);

  using Setter = std::function<void(SolverConfig&, std::string_view)>;
  static const std::map<std::string, Setter> setters = {
      {"c", [](SolverConfig& s, std::string_view v) { s.c = parse_double(v); }},
      {"beta_bar", [](SolverConfig& s, std::string_view v) { s.beta_bar = parse_double(v); }},
      {"tau_backtrack", [](SolverConfig& s, std::string_view v) { s.tau_backtrack = parse_double(v); }},
      {"gamma", [](SolverConfig& s, std::string_view v) { s.gamma = parse_double(v); }},
      {"gamma1", [](SolverConfig& s, std::string_view v) { s.gamma1 = parse_double(v); }},
      {"gamma2", [](SolverConfig& s, std::string_view v) { s.gamma2 = parse_double(v); }},
      {"lambda_expand", [](SolverConfig& s, std::string_view v) { s.lambda_expand = parse_double(v); }},
      {"theta_contract", [](SolverConfig& s, std::string_view v) { s.theta_contract = parse_double(v); }},
      {"alpha0", [](SolverConfig& s, std::string_view v) { s.alpha0 = parse_double(v); }},
      {"eps_curvature", [](SolverConfig& s, std::string_view v) { s.eps_curvature = parse_double(v); }},
      {"fd_step", [](SolverConfig& s, std::string_view v) { s.fd_step = parse_double(v); }},
      {"criticality_enabled", [](SolverConfig& s, std::string_view v) { s.criticality_enabled = parse_bool(v); }},
      {"u_g_prime", [](SolverConfig& s, std::string_view v) { s.u_g_prime = parse_double(v); }},
      {"omega", [](SolverConfig& s, std::string_view v) { s.omega = parse_double(v); }},
      {"criticality_max_passes", [](SolverConfig& s, std::string_view v) { s.criticality_max_passes = parse_int<int>(v); }},
      {"backtrack_floor_halvings", [](SolverConfig& s, std::string_view v) { s.backtrack_floor_halvings = parse_int<int>(v); }},
      {"alpha_max", [](SolverConfig& s, std::string_view v) { s.alpha_max = parse_double(v); }},
      {"stop_alpha_below", [](SolverConfig& s, std::string_view v) { s.stop_alpha_below = parse_double(v); }},
      {"stop_gradient_below", [](SolverConfig& s, std::string_view v) { s.stop_gradient_below = parse_double(v); }},
  };
  const auto it = setters.find(key);
  if (it == setters.end()) throw std::invalid_argument("unknown config key: " + key);
  it->second(cfg, value);
}

}  // namespace fullow
