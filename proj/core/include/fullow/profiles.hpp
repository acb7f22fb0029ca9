#pragma once

#include "fullow/history.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fullow {

inline constexpr double kUnsolved = std::numeric_limits<double>::infinity();

/// Smallest eval_index whose best_f meets f0 - best_f >= (1 - tau)(f0 - fL),
/// looking only at evaluations up to `cutoff`. kUnsolved if never met.
/// Throws std::invalid_argument when tau is outside (0, 1), the history is
/// empty, or f0 < fL.
double evals_to_convergence(const RunHistory& history, double f0, double fL, double tau,
                            std::int64_t cutoff = std::numeric_limits<std::int64_t>::max());

struct ProfileProblem {
  std::string name;
  int n = 0;
  double f0 = 0.0;
  double fL = 0.0;
};

/// t[p][s]: evaluations solver s needed on problem p (kUnsolved on failure).
struct ProfileMatrix {
  std::vector<ProfileProblem> problems;
  std::vector<std::string> solvers;
  std::vector<std::vector<double>> t;

  void validate() const;
};

enum class ProfileKind : std::uint8_t { Performance, Data };

struct ProfileCurve {
  std::string solver;
  std::vector<double> alphas;
  std::vector<double> values;
};

/// rho_s(alpha) = |{p : t_ps / min_s t_ps <= alpha}| / |P|. Rows where every
/// solver failed stay in |P| and count for nobody.
std::vector<ProfileCurve> performance_profile(const ProfileMatrix& pm, const std::vector<double>& alphas);

/// d_s(alpha) = |{p : t_ps / (n_p + 1) <= alpha}| / |P|.
std::vector<ProfileCurve> data_profile(const ProfileMatrix& pm, const std::vector<double>& alphas);

std::vector<ProfileCurve> compute_profile(ProfileKind kind, const ProfileMatrix& pm,
                                          const std::vector<double>& alphas);

/// 2^(10 i / (points - 1)), i = 0 .. points-1.
std::vector<double> performance_grid(int points = 201);
/// Evenly spaced on [0, max_alpha].
std::vector<double> data_grid(double max_alpha, int points = 201);

/// Pointwise mean of curves computed on the same grid for the same solvers.
std::vector<ProfileCurve> average_curves(const std::vector<std::vector<ProfileCurve>>& runs);

/// Fraction of problems solved within the budget, per solver.
std::vector<double> solved_fractions(const ProfileMatrix& pm);

struct ProfileSummary {
  std::string solver;
  double at_1 = 0.0;
  double at_2 = 0.0;
  double area = 0.0;  // mean height of the step function over the grid (log2 axis for performance)
  double solved = 0.0;
};

/// `solved` is aligned with `curves` (see solved_fractions).
std::vector<ProfileSummary> summarize(ProfileKind kind, const std::vector<ProfileCurve>& curves,
                                      const std::vector<double>& solved);

/// Value of a right-continuous step curve at alpha (0 left of the grid).
double curve_value(const ProfileCurve& curve, double alpha);

}  // namespace fullow
