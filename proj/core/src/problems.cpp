#include "fullow/problems.hpp"

#include "residuals.hpp"
#include "scalable.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fullow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_inf(double v) { return std::isfinite(v) ? v : kInf; }

struct MwEntry {
  int nprob;
  int n;
  int m;
  int ns;  // x0 scaled by 10^ns
};

// Benchmark definition: 22 residual families, 53 configurations.
constexpr std::array<MwEntry, 53> kSuite53 = {{
    {1, 9, 45, 0},   {1, 9, 45, 1},   {2, 7, 35, 0},   {2, 7, 35, 1},   {3, 7, 35, 0},
    {3, 7, 35, 1},   {4, 2, 2, 0},    {4, 2, 2, 1},    {5, 3, 3, 0},    {5, 3, 3, 1},
    {6, 4, 4, 0},    {6, 4, 4, 1},    {7, 2, 2, 0},    {7, 2, 2, 1},    {8, 3, 15, 0},
    {8, 3, 15, 1},   {9, 4, 11, 0},   {10, 3, 16, 0},  {11, 6, 31, 0},  {11, 6, 31, 1},
    {11, 9, 31, 0},  {11, 9, 31, 1},  {11, 12, 31, 0}, {11, 12, 31, 1}, {12, 3, 10, 0},
    {13, 2, 10, 0},  {14, 4, 20, 0},  {14, 4, 20, 1},  {15, 6, 6, 0},   {15, 7, 7, 0},
    {15, 8, 8, 0},   {15, 9, 9, 0},   {15, 10, 10, 0}, {15, 11, 11, 0}, {16, 10, 10, 0},
    {17, 5, 33, 0},  {18, 11, 65, 0}, {18, 11, 65, 1}, {19, 8, 8, 0},   {19, 10, 12, 0},
    {19, 11, 14, 0}, {19, 12, 16, 0}, {20, 5, 5, 0},   {20, 6, 6, 0},   {20, 8, 8, 0},
    {21, 5, 5, 0},   {21, 5, 5, 1},   {21, 8, 8, 0},   {21, 10, 10, 0}, {21, 12, 12, 0},
    {21, 12, 12, 1}, {22, 8, 8, 0},   {22, 8, 8, 1},
}};

bool family_has_several_dims(int nprob) {
  int first = 0;
  for (const auto& e : kSuite53) {
    if (e.nprob != nprob) continue;
    if (first == 0) first = e.n;
    else if (e.n != first) return true;
  }
  return false;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

/// 2 ||A||_2^2 for affine residuals r(x) = A x - b.
double linear_residual_lipschitz(const ResidualFn& r, int n) {
  const Vector zero = Vector::Zero(n);
  const Vector r0 = r(zero);
  Matrix A(r0.size(), n);
  for (int j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    A.col(j) = r(e) - r0;
  }
  Eigen::JacobiSVD<Matrix> svd(A);
  const double s = svd.singularValues()[0];
  return 2.0 * s * s;
}

ProblemSpec make_suite53_entry(const MwEntry& e) {
  ProblemSpec spec;
  spec.name = std::string(detail::residual_name(e.nprob));
  if (family_has_several_dims(e.nprob)) spec.name += "_n" + std::to_string(e.n);
  if (e.ns != 0) spec.name += "_s" + std::to_string(e.ns);
  spec.n = e.n;
  spec.m = e.m;
  spec.x0 = std::pow(10.0, e.ns) * detail::residual_start(e.nprob, e.n);
  spec.residuals = [nprob = e.nprob, m = e.m](const Vector& x) {
    return detail::residual_vector(nprob, m, x);
  };
  if (e.nprob <= 3) spec.known_L = linear_residual_lipschitz(spec.residuals, e.n);
  return spec;
}

std::optional<int> parse_int(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

double eval_smooth(const ProblemSpec& spec, const Vector& x) {
  if (x.size() != spec.n) throw std::invalid_argument("dimension mismatch for " + spec.name);
  if (spec.has_residuals()) return finite_or_inf(spec.residuals(x).squaredNorm());
  return finite_or_inf(spec.direct(x));
}

double eval_piecewise(const ProblemSpec& spec, const Vector& x) {
  if (x.size() != spec.n) throw std::invalid_argument("dimension mismatch for " + spec.name);
  if (!spec.has_residuals())
    throw std::invalid_argument(spec.name + " has no residual form; piecewise variant undefined");
  return finite_or_inf(spec.residuals(x).lpNorm<1>());
}

double deterministic_noise(const Vector& x) {
  const double phi = 0.9 * std::sin(100.0 * x.lpNorm<1>()) * std::cos(100.0 * x.lpNorm<Eigen::Infinity>()) +
                     0.1 * std::cos(x.norm());
  return phi * (4.0 * phi * phi - 3.0);
}

double apply_noise(const NoiseConfig& noise, double phi, const Vector& x, RngStream& rng) {
  if (noise.eps_f == 0.0) return phi;
  double u = 0.0;
  switch (noise.kind) {
    case NoiseKind::AdditiveDeterministic:
    case NoiseKind::MultiplicativeDeterministic: u = deterministic_noise(x); break;
    case NoiseKind::AdditiveStochastic:
    case NoiseKind::MultiplicativeStochastic: u = rng.uniform(-1.0, 1.0); break;
  }
  const bool additive = noise.kind == NoiseKind::AdditiveDeterministic ||
                        noise.kind == NoiseKind::AdditiveStochastic;
  return additive ? phi + noise.eps_f * u : phi * (1.0 + noise.eps_f * u);
}

double eval_variant(const ProblemSpec& spec, const Vector& x, RngStream& rng) {
  switch (spec.variant) {
    case Variant::Smooth: return eval_smooth(spec, x);
    case Variant::Piecewise: return eval_piecewise(spec, x);
    case Variant::Noisy: {
      const double phi = eval_smooth(spec, x);
      if (!spec.noise || !std::isfinite(phi)) return phi;
      return finite_or_inf(apply_noise(*spec.noise, phi, x, rng));
    }
  }
  return kInf;
}

ProblemSpec scalable_problem(std::string_view name, int n) {
  const auto* def = detail::find_scalable(upper(name));
  if (def == nullptr) throw std::invalid_argument("unknown scalable problem: " + std::string(name));
  if (!def->accepts(n))
    throw std::invalid_argument(std::string(def->name) + " does not support n = " + std::to_string(n));
  ProblemSpec spec;
  spec.name = lower(def->name) + "_n" + std::to_string(n);
  spec.n = n;
  spec.x0 = def->start(n);
  spec.direct = def->value;
  return spec;
}

std::vector<std::string> scalable_names() {
  std::vector<std::string> out;
  for (const auto& d : detail::scalable_defs()) out.emplace_back(d.name);
  return out;
}

std::vector<ProblemSpec> suite53_problems() {
  std::vector<ProblemSpec> out;
  out.reserve(kSuite53.size());
  for (const auto& e : kSuite53) out.push_back(make_suite53_entry(e));
  return out;
}

ProblemSpec with_variant(ProblemSpec spec, Variant variant, std::optional<NoiseConfig> noise) {
  if (variant == Variant::Piecewise && !spec.has_residuals())
    throw std::invalid_argument(spec.name + " has no residual form; piecewise variant undefined");
  if (variant == Variant::Noisy && !noise)
    throw std::invalid_argument("noisy variant needs a noise configuration");
  if (noise && noise->eps_f < 0.0) throw std::invalid_argument("eps_f must be >= 0");
  spec.variant = variant;
  spec.noise = variant == Variant::Noisy ? noise : std::nullopt;
  return spec;
}

std::vector<ProblemSpec> suite(const SuiteSelector& selector) {
  std::vector<ProblemSpec> out;
  switch (selector.kind) {
    case SuiteKind::Smooth53: return suite53_problems();
    case SuiteKind::Piecewise53:
      for (auto& p : suite53_problems()) out.push_back(with_variant(std::move(p), Variant::Piecewise));
      return out;
    case SuiteKind::Noisy53:
      for (auto& p : suite53_problems())
        out.push_back(with_variant(std::move(p), Variant::Noisy, selector.noise));
      return out;
    case SuiteKind::Scalable:
      for (const auto& d : detail::scalable_defs()) out.push_back(scalable_problem(d.name, selector.n));
      return out;
  }
  return out;
}

SuiteSelector parse_suite(std::string_view text, double default_eps_f) {
  SuiteSelector sel;
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "smooth53" && rest.empty()) {
    sel.kind = SuiteKind::Smooth53;
  } else if (head == "piecewise53" && rest.empty()) {
    sel.kind = SuiteKind::Piecewise53;
  } else if (head == "noisy" || head == "noisy53") {
    sel.kind = SuiteKind::Noisy53;
    const auto colon2 = rest.find(':');
    const auto kind_text = rest.substr(0, colon2);
    const auto kind = parse_noise_kind(kind_text.empty() ? "additive-stochastic" : kind_text);
    if (!kind) throw std::invalid_argument("unknown noise kind: " + std::string(kind_text));
    sel.noise.kind = *kind;
    sel.noise.eps_f = default_eps_f;
    if (colon2 != std::string_view::npos) {
      const auto eps = parse_double(rest.substr(colon2 + 1));
      if (!eps || *eps < 0.0) throw std::invalid_argument("bad eps_f in suite: " + std::string(text));
      sel.noise.eps_f = *eps;
    }
  } else if (head == "scalable") {
    sel.kind = SuiteKind::Scalable;
    const auto n = parse_int(rest);
    if (!n || *n < 4 || *n % 4 != 0)
      throw std::invalid_argument("scalable suite needs a dimension divisible by 4: " + std::string(text));
    sel.n = *n;
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(text));
  }
  return sel;
}

std::string_view to_string(NoiseKind kind) noexcept {
  switch (kind) {
    case NoiseKind::AdditiveDeterministic: return "additive-deterministic";
    case NoiseKind::AdditiveStochastic: return "additive-stochastic";
    case NoiseKind::MultiplicativeDeterministic: return "multiplicative-deterministic";
    case NoiseKind::MultiplicativeStochastic: return "multiplicative-stochastic";
  }
  return "?";
}

std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept {
  for (auto k : {NoiseKind::AdditiveDeterministic, NoiseKind::AdditiveStochastic,
                 NoiseKind::MultiplicativeDeterministic, NoiseKind::MultiplicativeStochastic})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::string variant_label(const ProblemSpec& spec) {
  switch (spec.variant) {
    case Variant::Smooth: return "smooth";
    case Variant::Piecewise: return "piecewise";
    case Variant::Noisy: return spec.noise ? std::string(to_string(spec.noise->kind)) : "smooth";
  }
  return "?";
}

ProblemSpec find_problem(std::string_view name, std::string_view label, double eps_f) {
  const std::string key = lower(name);
  std::optional<ProblemSpec> base;
  for (auto& p : suite53_problems()) {
    if (p.name == key) {
      base = std::move(p);
      break;
    }
  }
  if (!base) {
    const auto pos = key.rfind("_n");
    if (pos != std::string::npos) {
      const auto n = parse_int(std::string_view(key).substr(pos + 2));
      const auto* def = detail::find_scalable(upper(key.substr(0, pos)));
      if (n && def != nullptr) base = scalable_problem(def->name, *n);
    }
  }
  if (!base) throw std::invalid_argument("unknown problem: " + std::string(name));

  if (label == "smooth") return with_variant(std::move(*base), Variant::Smooth);
  if (label == "piecewise") return with_variant(std::move(*base), Variant::Piecewise);
  if (const auto kind = parse_noise_kind(label))
    return with_variant(std::move(*base), Variant::Noisy, NoiseConfig{*kind, eps_f});
  throw std::invalid_argument("unknown variant: " + std::string(label));
}

std::vector<std::string> registered_names() {
  std::vector<std::string> out;
  for (const auto& p : suite53_problems()) out.push_back(p.name);
  for (const auto& d : detail::scalable_defs()) out.push_back(lower(d.name) + "_n<n>");
  return out;
}

Problem to_problem(const ProblemSpec& spec) {
  Problem p;
  p.name = spec.name;
  p.x0 = spec.x0;
  if (spec.variant == Variant::Piecewise) {
    p.value = [spec](const Vector& x) { return eval_piecewise(spec, x); };
  } else {
    p.value = [spec](const Vector& x) { return eval_smooth(spec, x); };
  }
  if (spec.variant == Variant::Noisy && spec.noise) {
    p.noise = [noise = *spec.noise](double phi, const Vector& x, RngStream& rng) {
      return apply_noise(noise, phi, x, rng);
    };
  }
  return p;
}

}  // namespace fullow
