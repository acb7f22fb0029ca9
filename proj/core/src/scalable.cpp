// Variable-dimension unconstrained test problems in their usual CUTEr
// analytic form, with the usual starting points.

#include "scalable.hpp"

#include <array>
#include <cmath>

namespace fullow::detail {

namespace {

double sq(double v) { return v * v; }

bool at_least_two(int n) { return n >= 2; }
bool at_least_three(int n) { return n >= 3; }
bool even(int n) { return n >= 2 && n % 2 == 0; }
bool multiple_of_four(int n) { return n >= 4 && n % 4 == 0; }

double arglina(const Vector& x) {
  const auto n = x.size();
  const double m = 2.0 * n;
  const double s = 2.0 * x.sum() / m + 1.0;
  double f = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) f += sq(x[i] - s);
  f += (m - n) * sq(s);
  return f;
}
Vector ones(int n) { return Vector::Ones(n); }

double arwhead(const Vector& x) {
  const auto n = x.size();
  const double xn2 = sq(x[n - 1]);
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) f += sq(sq(x[i]) + xn2) - 4.0 * x[i] + 3.0;
  return f;
}

double broydn3d(const Vector& x) {
  const auto n = x.size();
  double f = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double prev = i > 0 ? x[i - 1] : 0.0;
    const double next = i + 1 < n ? x[i + 1] : 0.0;
    f += sq((3.0 - 2.0 * x[i]) * x[i] - prev - 2.0 * next + 1.0);
  }
  return f;
}
Vector minus_ones(int n) { return Vector::Constant(n, -1.0); }

double dqrtic(const Vector& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) f += std::pow(x[i] - static_cast<double>(i + 1), 4);
  return f;
}
Vector twos(int n) { return Vector::Constant(n, 2.0); }

double engval1(const Vector& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
    f += sq(sq(x[i]) + sq(x[i + 1])) - 4.0 * x[i] + 3.0;
  return f;
}

double freuroth(const Vector& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i];
    const double b = x[i + 1];
    f += sq(-13.0 + a + ((5.0 - b) * b - 2.0) * b) + sq(-29.0 + a + ((b + 1.0) * b - 14.0) * b);
  }
  return f;
}
Vector freuroth_start(int n) {
  Vector x = Vector::Zero(n);
  x[0] = 0.5;
  x[1] = -2.0;
  return x;
}

double penalty2(const Vector& x) {
  const auto n = x.size();
  constexpr double a = 1e-5;
  const double e = std::exp(-0.1);
  double f = sq(x[0] - 0.2);
  for (Eigen::Index i = 1; i < n; ++i) {
    const double y = std::exp((i + 1) / 10.0) + std::exp(i / 10.0);
    f += a * sq(std::exp(x[i] / 10.0) + std::exp(x[i - 1] / 10.0) - y);
  }
  for (Eigen::Index i = 1; i < n; ++i) f += a * sq(std::exp(x[i] / 10.0) - e);
  double t = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) t += static_cast<double>(n - j) * sq(x[j]);
  return f + sq(t - 1.0);
}
Vector halves(int n) { return Vector::Constant(n, 0.5); }

double nondquar(const Vector& x) {
  const auto n = x.size();
  double f = sq(x[0] - x[1]) + sq(x[n - 2] + x[n - 1]);
  for (Eigen::Index i = 0; i + 2 < n; ++i) f += std::pow(x[i] + x[i + 1] + x[n - 1], 4);
  return f;
}
Vector alternating(int n) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = i % 2 == 0 ? 1.0 : -1.0;
  return x;
}

double rosenbr(const Vector& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); i += 2)
    f += 100.0 * sq(x[i + 1] - sq(x[i])) + sq(1.0 - x[i]);
  return f;
}
Vector rosenbr_start(int n) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = i % 2 == 0 ? -1.2 : 1.0;
  return x;
}

double sinquad(const Vector& x) {
  const auto n = x.size();
  const double x1s = sq(x[0]);
  double f = std::pow(x[0] - 1.0, 4) + sq(sq(x[n - 1]) - x1s);
  for (Eigen::Index i = 1; i + 1 < n; ++i) f += sq(std::sin(x[i] - x[n - 1]) - x1s + sq(x[i]));
  return f;
}
Vector tenths(int n) { return Vector::Constant(n, 0.1); }

double tridia(const Vector& x) {
  double f = sq(x[0] - 1.0);
  for (Eigen::Index i = 1; i < x.size(); ++i) f += static_cast<double>(i + 1) * sq(2.0 * x[i] - x[i - 1]);
  return f;
}

double woods(const Vector& x) {
  double f = 0.0;
  for (Eigen::Index k = 0; k + 3 < x.size(); k += 4) {
    const double a = x[k], b = x[k + 1], c = x[k + 2], d = x[k + 3];
    f += 100.0 * sq(b - sq(a)) + sq(1.0 - a) + 90.0 * sq(d - sq(c)) + sq(1.0 - c) +
         10.0 * sq(b + d - 2.0) + 0.1 * sq(b - d);
  }
  return f;
}
Vector woods_start(int n) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = i % 2 == 0 ? -3.0 : -1.0;
  return x;
}

constexpr std::array<ScalableDef, 12> kDefs = {{
    {"ARGLINA", arglina, ones, at_least_two},
    {"ARWHEAD", arwhead, ones, at_least_two},
    {"BROYDN3D", broydn3d, minus_ones, at_least_two},
    {"DQRTIC", dqrtic, twos, at_least_two},
    {"ENGVAL1", engval1, twos, at_least_two},
    {"FREUROTH", freuroth, freuroth_start, at_least_two},
    {"PENALTY2", penalty2, halves, at_least_two},
    {"NONDQUAR", nondquar, alternating, at_least_three},
    {"ROSENBR", rosenbr, rosenbr_start, even},
    {"SINQUAD", sinquad, tenths, at_least_three},
    {"TRIDIA", tridia, ones, at_least_two},
    {"WOODS", woods, woods_start, multiple_of_four},
}};

}  // namespace

const ScalableDef* find_scalable(std::string_view upper_name) {
  for (const auto& d : kDefs)
    if (d.name == upper_name) return &d;
  return nullptr;
}

std::span<const ScalableDef> scalable_defs() { return kDefs; }

}  // namespace fullow::detail
