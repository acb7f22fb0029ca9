#include "fullow/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fullow {

double evals_to_convergence(const RunHistory& history, double f0, double fL, double tau,
                            std::int64_t cutoff) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
  if (history.empty()) throw std::invalid_argument("empty history");
  if (f0 < fL) throw std::invalid_argument("f0 below fL: inconsistent data");
  const double target = (1.0 - tau) * (f0 - fL);
  for (const auto& e : history.entries()) {
    if (e.eval_index > cutoff) break;
    if (f0 - e.best_f >= target) return static_cast<double>(e.eval_index);
  }
  return kUnsolved;
}

void ProfileMatrix::validate() const {
  if (t.size() != problems.size()) throw std::invalid_argument("profile matrix: row count mismatch");
  for (const auto& row : t) {
    if (row.size() != solvers.size()) throw std::invalid_argument("profile matrix: column count mismatch");
    for (double v : row)
      if (!(v > 0.0)) throw std::invalid_argument("profile matrix: entries must be positive or +inf");
  }
}

namespace {

std::vector<ProfileCurve> make_curves(const ProfileMatrix& pm, const std::vector<double>& alphas) {
  std::vector<ProfileCurve> out;
  for (const auto& s : pm.solvers) out.push_back({s, alphas, std::vector<double>(alphas.size(), 0.0)});
  return out;
}

// Adds 1/|P| to every grid point at or beyond `threshold`.
void add_step(ProfileCurve& c, double threshold, double weight) {
  if (!std::isfinite(threshold)) return;
  for (std::size_t i = 0; i < c.alphas.size(); ++i)
    if (threshold <= c.alphas[i]) c.values[i] += weight;
}

}  // namespace

std::vector<ProfileCurve> performance_profile(const ProfileMatrix& pm, const std::vector<double>& alphas) {
  pm.validate();
  auto curves = make_curves(pm, alphas);
  if (pm.problems.empty()) return curves;
  const double w = 1.0 / static_cast<double>(pm.problems.size());
  for (const auto& row : pm.t) {
    const double best = *std::min_element(row.begin(), row.end());
    if (!std::isfinite(best)) continue;
    for (std::size_t s = 0; s < row.size(); ++s) add_step(curves[s], row[s] / best, w);
  }
  return curves;
}

std::vector<ProfileCurve> data_profile(const ProfileMatrix& pm, const std::vector<double>& alphas) {
  pm.validate();
  auto curves = make_curves(pm, alphas);
  if (pm.problems.empty()) return curves;
  const double w = 1.0 / static_cast<double>(pm.problems.size());
  for (std::size_t p = 0; p < pm.t.size(); ++p)
    for (std::size_t s = 0; s < pm.solvers.size(); ++s)
      add_step(curves[s], pm.t[p][s] / (pm.problems[p].n + 1.0), w);
  return curves;
}

std::vector<ProfileCurve> compute_profile(ProfileKind kind, const ProfileMatrix& pm,
                                          const std::vector<double>& alphas) {
  return kind == ProfileKind::Performance ? performance_profile(pm, alphas) : data_profile(pm, alphas);
}

std::vector<double> performance_grid(int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = std::exp2(10.0 * i / (points - 1));
  g.back() = 1024.0;
  return g;
}

std::vector<double> data_grid(double max_alpha, int points) {
  if (points < 2 || !(max_alpha > 0.0)) throw std::invalid_argument("bad data grid");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = max_alpha * i / (points - 1);
  g.back() = max_alpha;
  return g;
}

std::vector<ProfileCurve> average_curves(const std::vector<std::vector<ProfileCurve>>& runs) {
  if (runs.empty()) return {};
  auto out = runs.front();
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].size() != out.size()) throw std::invalid_argument("average_curves: solver mismatch");
    for (std::size_t s = 0; s < out.size(); ++s) {
      if (runs[r][s].solver != out[s].solver || runs[r][s].alphas != out[s].alphas)
        throw std::invalid_argument("average_curves: grid or solver mismatch");
      for (std::size_t i = 0; i < out[s].values.size(); ++i) out[s].values[i] += runs[r][s].values[i];
    }
  }
  const double k = static_cast<double>(runs.size());
  for (auto& c : out)
    for (double& v : c.values) v /= k;
  return out;
}

std::vector<double> solved_fractions(const ProfileMatrix& pm) {
  pm.validate();
  std::vector<double> out(pm.solvers.size(), 0.0);
  if (pm.problems.empty()) return out;
  for (const auto& row : pm.t)
    for (std::size_t s = 0; s < row.size(); ++s)
      if (std::isfinite(row[s])) out[s] += 1.0;
  for (double& v : out) v /= static_cast<double>(pm.problems.size());
  return out;
}

double curve_value(const ProfileCurve& curve, double alpha) {
  const auto it = std::upper_bound(curve.alphas.begin(), curve.alphas.end(), alpha);
  if (it == curve.alphas.begin()) return 0.0;
  return curve.values[static_cast<std::size_t>(it - curve.alphas.begin()) - 1];
}

std::vector<ProfileSummary> summarize(ProfileKind kind, const std::vector<ProfileCurve>& curves,
                                      const std::vector<double>& solved) {
  if (solved.size() != curves.size()) throw std::invalid_argument("summarize: size mismatch");
  std::vector<ProfileSummary> out;
  for (std::size_t s = 0; s < curves.size(); ++s) {
    const auto& c = curves[s];
    ProfileSummary sum{c.solver, curve_value(c, 1.0), curve_value(c, 2.0), 0.0, solved[s]};
    auto axis = [kind](double a) { return kind == ProfileKind::Performance ? std::log2(a) : a; };
    if (c.alphas.size() >= 2) {
      double area = 0.0;
      for (std::size_t i = 0; i + 1 < c.alphas.size(); ++i)
        area += c.values[i] * (axis(c.alphas[i + 1]) - axis(c.alphas[i]));
      sum.area = area / (axis(c.alphas.back()) - axis(c.alphas.front()));
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace fullow
