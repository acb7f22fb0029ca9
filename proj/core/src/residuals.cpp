// Residual functions of the classic nonlinear least-squares collection in the form
// used by the 53-problem derivative-free benchmark (22 families). Indices in
// comments are 1-based to match the published formulas.

#include "residuals.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fullow::detail {

namespace {

constexpr std::array<double, 15> kBardY = {0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39,
                                           0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39};

constexpr std::array<double, 11> kKowalikV = {4.0,   2.0,    1.0,   0.5,    0.25,  0.167,
                                              0.125, 0.1, 0.0833, 0.0714, 0.0625};
constexpr std::array<double, 11> kKowalikY = {0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};

constexpr std::array<double, 16> kMeyerY = {34780, 28610, 23650, 19630, 16370, 13720,
                                            11540, 9744,  8261,  7030,  6005,  5147,
                                            4427,  3820,  3307,  2872};

constexpr std::array<double, 33> kOsborne1Y = {
    0.844, 0.908, 0.932, 0.936, 0.925, 0.908, 0.881, 0.850, 0.818, 0.784, 0.751,
    0.718, 0.685, 0.658, 0.628, 0.603, 0.580, 0.558, 0.538, 0.522, 0.506, 0.490,
    0.478, 0.467, 0.457, 0.448, 0.438, 0.431, 0.424, 0.420, 0.414, 0.411, 0.406};

constexpr std::array<double, 65> kOsborne2Y = {
    1.366, 1.191, 1.112, 1.013, 0.991, 0.885, 0.831, 0.847, 0.786, 0.725, 0.746, 0.679, 0.608,
    0.655, 0.616, 0.606, 0.602, 0.626, 0.651, 0.724, 0.649, 0.649, 0.694, 0.644, 0.624, 0.661,
    0.612, 0.558, 0.533, 0.495, 0.500, 0.423, 0.395, 0.375, 0.372, 0.391, 0.396, 0.405, 0.428,
    0.429, 0.523, 0.562, 0.607, 0.653, 0.672, 0.708, 0.633, 0.668, 0.645, 0.632, 0.591, 0.559,
    0.597, 0.625, 0.739, 0.710, 0.729, 0.720, 0.636, 0.581, 0.428, 0.292, 0.162, 0.098, 0.054};

void need(bool ok, int nprob) {
  if (!ok) throw std::invalid_argument("bad dimensions for MGH problem " + std::to_string(nprob));
}

}  // namespace

Vector residual_vector(int nprob, int m, const Vector& xv) {
  const int n = static_cast<int>(xv.size());
  auto x = [&](int i) { return xv[i - 1]; };
  Vector fv = Vector::Zero(m);
  auto f = [&](int i) -> double& { return fv[i - 1]; };

  switch (nprob) {
    case 1: {  // linear, full rank
      need(m >= n, nprob);
      const double s = 2.0 * xv.sum() / m + 1.0;
      for (int i = 1; i <= m; ++i) f(i) = -s;
      for (int i = 1; i <= n; ++i) f(i) += x(i);
      break;
    }
    case 2: {  // linear, rank 1
      double s = 0.0;
      for (int j = 1; j <= n; ++j) s += j * x(j);
      for (int i = 1; i <= m; ++i) f(i) = i * s - 1.0;
      break;
    }
    case 3: {  // linear, rank 1 with zero columns and rows
      double s = 0.0;
      for (int j = 2; j <= n - 1; ++j) s += j * x(j);
      for (int i = 1; i <= m - 1; ++i) f(i) = (i - 1) * s - 1.0;
      f(m) = -1.0;
      break;
    }
    case 4:  // Rosenbrock
      need(n == 2 && m == 2, nprob);
      f(1) = 10.0 * (x(2) - x(1) * x(1));
      f(2) = 1.0 - x(1);
      break;
    case 5: {  // helical valley
      need(n == 3 && m == 3, nprob);
      constexpr double two_pi = 2.0 * std::numbers::pi;
      double th = 0.25;
      if (x(1) > 0.0) th = std::atan(x(2) / x(1)) / two_pi;
      else if (x(1) < 0.0) th = std::atan(x(2) / x(1)) / two_pi + 0.5;
      const double r = std::sqrt(x(1) * x(1) + x(2) * x(2));
      f(1) = 10.0 * (x(3) - 10.0 * th);
      f(2) = 10.0 * (r - 1.0);
      f(3) = x(3);
      break;
    }
    case 6:  // Powell singular
      need(n == 4 && m == 4, nprob);
      f(1) = x(1) + 10.0 * x(2);
      f(2) = std::sqrt(5.0) * (x(3) - x(4));
      f(3) = std::pow(x(2) - 2.0 * x(3), 2);
      f(4) = std::sqrt(10.0) * std::pow(x(1) - x(4), 2);
      break;
    case 7:  // Freudenstein and Roth
      need(n == 2 && m == 2, nprob);
      f(1) = -13.0 + x(1) + ((5.0 - x(2)) * x(2) - 2.0) * x(2);
      f(2) = -29.0 + x(1) + ((1.0 + x(2)) * x(2) - 14.0) * x(2);
      break;
    case 8:  // Bard
      need(n == 3 && m == 15, nprob);
      for (int i = 1; i <= 15; ++i) {
        const double t1 = i;
        const double t2 = 16 - i;
        const double t3 = i > 8 ? t2 : t1;
        f(i) = kBardY[i - 1] - (x(1) + t1 / (x(2) * t2 + x(3) * t3));
      }
      break;
    case 9:  // Kowalik and Osborne
      need(n == 4 && m == 11, nprob);
      for (int i = 1; i <= 11; ++i) {
        const double v = kKowalikV[i - 1];
        const double t1 = v * (v + x(2));
        const double t2 = v * (v + x(3)) + x(4);
        f(i) = kKowalikY[i - 1] - x(1) * t1 / t2;
      }
      break;
    case 10:  // Meyer
      need(n == 3 && m == 16, nprob);
      for (int i = 1; i <= 16; ++i) {
        const double t = 5.0 * i + 45.0 + x(3);
        f(i) = x(1) * std::exp(x(2) / t) - kMeyerY[i - 1];
      }
      break;
    case 11: {  // Watson
      need(m == 31 && n >= 2, nprob);
      for (int i = 1; i <= 29; ++i) {
        const double div = i / 29.0;
        double s1 = 0.0;
        double dx = 1.0;
        for (int j = 2; j <= n; ++j) {
          s1 += (j - 1) * dx * x(j);
          dx *= div;
        }
        double s2 = 0.0;
        dx = 1.0;
        for (int j = 1; j <= n; ++j) {
          s2 += dx * x(j);
          dx *= div;
        }
        f(i) = s1 - s2 * s2 - 1.0;
      }
      f(30) = x(1);
      f(31) = x(2) - x(1) * x(1) - 1.0;
      break;
    }
    case 12:  // Box three-dimensional
      need(n == 3, nprob);
      for (int i = 1; i <= m; ++i) {
        const double t = i;
        const double t1 = t / 10.0;
        f(i) = std::exp(-t1 * x(1)) - std::exp(-t1 * x(2)) +
               (std::exp(-t) - std::exp(-t1)) * x(3);
      }
      break;
    case 13:  // Jennrich and Sampson
      need(n == 2, nprob);
      for (int i = 1; i <= m; ++i)
        f(i) = 2.0 + 2.0 * i - (std::exp(i * x(1)) + std::exp(i * x(2)));
      break;
    case 14:  // Brown and Dennis
      need(n == 4, nprob);
      for (int i = 1; i <= m; ++i) {
        const double t = i / 5.0;
        const double t1 = x(1) + t * x(2) - std::exp(t);
        const double t2 = x(3) + std::sin(t) * x(4) - std::cos(t);
        f(i) = t1 * t1 + t2 * t2;
      }
      break;
    case 15: {  // Chebyquad
      for (int j = 1; j <= n; ++j) {
        double t1 = 1.0;
        double t2 = 2.0 * x(j) - 1.0;
        const double t = 2.0 * t2;
        for (int i = 1; i <= m; ++i) {
          f(i) += t2;
          const double th = t * t2 - t1;
          t1 = t2;
          t2 = th;
        }
      }
      bool even = false;
      for (int i = 1; i <= m; ++i) {
        f(i) /= n;
        if (even) f(i) += 1.0 / (static_cast<double>(i) * i - 1.0);
        even = !even;
      }
      break;
    }
    case 16: {  // Brown almost-linear
      need(m == n, nprob);
      double sum = -(n + 1.0);
      double prod = 1.0;
      for (int j = 1; j <= n; ++j) {
        sum += x(j);
        prod *= x(j);
      }
      for (int i = 1; i <= n - 1; ++i) f(i) = x(i) + sum;
      f(n) = prod - 1.0;
      break;
    }
    case 17:  // Osborne 1
      need(n == 5 && m == 33, nprob);
      for (int i = 1; i <= 33; ++i) {
        const double t = 10.0 * (i - 1);
        f(i) = kOsborne1Y[i - 1] -
               (x(1) + x(2) * std::exp(-x(4) * t) + x(3) * std::exp(-x(5) * t));
      }
      break;
    case 18:  // Osborne 2
      need(n == 11 && m == 65, nprob);
      for (int i = 1; i <= 65; ++i) {
        const double t = (i - 1) / 10.0;
        const double e1 = std::exp(-x(5) * t);
        const double e2 = std::exp(-x(6) * std::pow(t - x(9), 2));
        const double e3 = std::exp(-x(7) * std::pow(t - x(10), 2));
        const double e4 = std::exp(-x(8) * std::pow(t - x(11), 2));
        f(i) = kOsborne2Y[i - 1] - (x(1) * e1 + x(2) * e2 + x(3) * e3 + x(4) * e4);
      }
      break;
    case 19:  // BDQRTIC
      need(n >= 5 && m == 2 * (n - 4), nprob);
      for (int i = 1; i <= n - 4; ++i) {
        f(i) = -4.0 * x(i) + 3.0;
        f(n - 4 + i) = x(i) * x(i) + 2.0 * x(i + 1) * x(i + 1) + 3.0 * x(i + 2) * x(i + 2) +
                       4.0 * x(i + 3) * x(i + 3) + 5.0 * x(n) * x(n);
      }
      break;
    case 20:  // Cube
      need(m == n, nprob);
      f(1) = x(1) - 1.0;
      for (int i = 2; i <= n; ++i) f(i) = 10.0 * (x(i) - std::pow(x(i - 1), 3));
      break;
    case 21:  // Mancino
      need(m == n, nprob);
      for (int i = 1; i <= n; ++i) {
        double ss = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double v2 = std::sqrt(x(i) * x(i) + static_cast<double>(i) / j);
          const double lv = std::log(v2);
          ss += v2 * (std::pow(std::sin(lv), 5) + std::pow(std::cos(lv), 5));
        }
        f(i) = 1400.0 * x(i) + std::pow(i - 50.0, 3) + ss;
      }
      break;
    case 22: {  // Heart8
      need(n == 8 && m == 8, nprob);
      const double x1 = x(1), x2 = x(2), x3 = x(3), x4 = x(4);
      const double x5 = x(5), x6 = x(6), x7 = x(7), x8 = x(8);
      f(1) = x1 + x2 + 0.69;
      f(2) = x3 + x4 + 0.044;
      f(3) = x5 * x1 + x6 * x2 - x7 * x3 - x8 * x4 + 1.57;
      f(4) = x7 * x1 + x8 * x2 + x5 * x3 + x6 * x4 + 1.31;
      f(5) = x1 * (x5 * x5 - x7 * x7) - 2.0 * x3 * x5 * x7 + x2 * (x6 * x6 - x8 * x8) -
             2.0 * x4 * x6 * x8 + 2.65;
      f(6) = x3 * (x5 * x5 - x7 * x7) + 2.0 * x1 * x5 * x7 + x4 * (x6 * x6 - x8 * x8) +
             2.0 * x2 * x6 * x8 - 2.0;
      f(7) = x1 * x5 * (x5 * x5 - 3.0 * x7 * x7) + x3 * x7 * (x7 * x7 - 3.0 * x5 * x5) +
             x2 * x6 * (x6 * x6 - 3.0 * x8 * x8) + x4 * x8 * (x8 * x8 - 3.0 * x6 * x6) + 12.6;
      f(8) = x3 * x5 * (x5 * x5 - 3.0 * x7 * x7) - x1 * x7 * (x7 * x7 - 3.0 * x5 * x5) +
             x4 * x6 * (x6 * x6 - 3.0 * x8 * x8) - x2 * x8 * (x8 * x8 - 3.0 * x6 * x6) - 9.48;
      break;
    }
    default:
      throw std::invalid_argument("unknown MGH problem " + std::to_string(nprob));
  }
  return fv;
}

Vector residual_start(int nprob, int n) {
  Vector x(n);
  switch (nprob) {
    case 1:
    case 2:
    case 3:
    case 8:
    case 19: x.setOnes(); break;
    case 4: x << -1.2, 1.0; break;
    case 5: x << -1.0, 0.0, 0.0; break;
    case 6: x << 3.0, -1.0, 0.0, 1.0; break;
    case 7: x << 0.5, -2.0; break;
    case 9: x << 0.25, 0.39, 0.415, 0.39; break;
    case 10: x << 0.02, 4000.0, 250.0; break;
    case 11:
    case 16:
    case 20: x.setConstant(0.5); break;
    case 12: x << 0.0, 10.0, 20.0; break;
    case 13: x << 0.3, 0.4; break;
    case 14: x << 25.0, 5.0, -5.0, -1.0; break;
    case 15:
      for (int k = 1; k <= n; ++k) x[k - 1] = static_cast<double>(k) / (n + 1);
      break;
    case 17: x << 0.5, 1.5, 1.0, 0.01, 0.02; break;
    case 18: x << 1.3, 0.65, 0.65, 0.7, 0.6, 3.0, 5.0, 7.0, 2.0, 4.5, 5.5; break;
    case 21:
      for (int i = 1; i <= n; ++i) {
        double ss = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double r = std::sqrt(static_cast<double>(i) / j);
          const double lr = std::log(r);
          ss += r * (std::pow(std::sin(lr), 5) + std::pow(std::cos(lr), 5));
        }
        x[i - 1] = -8.710996e-4 * (std::pow(i - 50.0, 3) + ss);
      }
      break;
    case 22: x << -0.3, -0.39, 0.3, -0.344, -1.2, 2.69, 1.59, -1.5; break;
    default:
      throw std::invalid_argument("unknown MGH problem " + std::to_string(nprob));
  }
  return x;
}

std::string_view residual_name(int nprob) {
  static constexpr std::array<std::string_view, 22> names = {
      "linear_full_rank", "linear_rank1",   "linear_rank1_zero", "rosenbrock",
      "helical_valley",   "powell_singular", "freudenstein_roth", "bard",
      "kowalik_osborne",  "meyer",           "watson",            "box3d",
      "jennrich_sampson", "brown_dennis",    "chebyquad",         "brown_almost_linear",
      "osborne1",         "osborne2",        "bdqrtic",           "cube",
      "mancino",          "heart8"};
  if (nprob < 1 || nprob > 22) throw std::invalid_argument("unknown MGH problem");
  return names[nprob - 1];
}

}  // namespace fullow::detail
