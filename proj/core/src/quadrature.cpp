#include "qfock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfock {
namespace {

constexpr double kPi = std::numbers::pi;

// Monic three-term recurrence p_{k+1} = (t - a_k) p_k - b_k^2 p_{k-1} for the
// weight, with mu0 the total mass. b has n+1 entries; b[0] is unused.
struct JacobiCoefficients {
  std::vector<double> a;
  std::vector<double> b;
  double mu0 = 0.0;
};

JacobiCoefficients hermite_jacobi(int n) {
  JacobiCoefficients c{std::vector<double>(n, 0.0), std::vector<double>(n + 1, 0.0),
                       std::sqrt(kPi)};
  for (int k = 1; k <= n; ++k) c.b[k] = std::sqrt(0.5 * k);
  return c;
}

JacobiCoefficients laguerre_jacobi(int n, double alpha) {
  JacobiCoefficients c{std::vector<double>(n), std::vector<double>(n + 1, 0.0),
                       std::tgamma(alpha + 1.0)};
  for (int k = 0; k < n; ++k) c.a[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k <= n; ++k) c.b[k] = std::sqrt(k * (k + alpha));
  return c;
}

JacobiCoefficients legendre_jacobi(int n) {
  JacobiCoefficients c{std::vector<double>(n, 0.0), std::vector<double>(n + 1, 0.0), 2.0};
  for (int k = 1; k <= n; ++k) c.b[k] = k / std::sqrt(4.0 * k * k - 1.0);
  return c;
}

// Orthonormal polynomials at x: returns p_n(x), p_n'(x) and sum_{k<n} p_k(x)^2.
struct OrthonormalEval {
  double value;
  double derivative;
  double christoffel_sum;
};

OrthonormalEval eval_orthonormal(const JacobiCoefficients& c, int n, double x) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(c.mu0);
  double d_prev = 0.0;
  double d = 0.0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const double scale = c.b[k + 1];
    const double b_k = k > 0 ? c.b[k] : 0.0;
    const double p_next = ((x - c.a[k]) * p - b_k * p_prev) / scale;
    const double d_next = (p + (x - c.a[k]) * d - b_k * d_prev) / scale;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d, sum};
}

QuadratureRule1D golub_welsch(const JacobiCoefficients& c, int n, RuleKind kind, double alpha) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = c.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = c.b[k];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolver failed");

  QuadratureRule1D rule;
  rule.kind = kind;
  rule.n = n;
  rule.alpha = alpha;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const OrthonormalEval e = eval_orthonormal(c, n, x);
      if (e.derivative == 0.0) break;
      const double step = e.value / e.derivative;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * (1.0 + std::abs(x))) break;
      x -= step;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / eval_orthonormal(c, n, x).christoffel_sum;
  }
  return rule;
}

void symmetrize(QuadratureRule1D& rule) {
  const int n = rule.n;
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
}

void check_size(int n) {
  if (n < 1 || n > kMaxRuleSize)
    throw std::out_of_range("quadrature rule size must be in [1, " +
                            std::to_string(kMaxRuleSize) + "], got " + std::to_string(n));
}

}  // namespace

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::gauss_hermite: return "gauss-hermite";
    case RuleKind::gauss_laguerre: return "gauss-laguerre";
    case RuleKind::gauss_legendre: return "gauss-legendre";
    case RuleKind::uniform_angle: return "uniform-angle";
  }
  return "unknown";
}

RuleKind rule_kind_from_string(std::string_view name) {
  for (RuleKind k : {RuleKind::gauss_hermite, RuleKind::gauss_laguerre, RuleKind::gauss_legendre,
                     RuleKind::uniform_angle})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown rule kind: " + std::string(name));
}

double QuadratureRule1D::total_mass() const {
  switch (kind) {
    case RuleKind::gauss_hermite: return std::sqrt(kPi);
    case RuleKind::gauss_laguerre: return std::tgamma(alpha + 1.0);
    case RuleKind::gauss_legendre: return 2.0;
    case RuleKind::uniform_angle: return 2.0 * kPi;
  }
  return 0.0;
}

QuadratureRule1D gauss_hermite(int n) {
  check_size(n);
  QuadratureRule1D rule = golub_welsch(hermite_jacobi(n), n, RuleKind::gauss_hermite, 0.0);
  symmetrize(rule);
  return rule;
}

QuadratureRule1D gauss_laguerre(int n, double alpha) {
  check_size(n);
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  return golub_welsch(laguerre_jacobi(n, alpha), n, RuleKind::gauss_laguerre, alpha);
}

QuadratureRule1D gauss_legendre(int n) {
  check_size(n);
  QuadratureRule1D rule = golub_welsch(legendre_jacobi(n), n, RuleKind::gauss_legendre, 0.0);
  symmetrize(rule);
  return rule;
}

QuadratureRule1D gauss_legendre(int n, double a, double b) {
  QuadratureRule1D rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule1D uniform_angle(int n) {
  if (n < 1) throw std::out_of_range("uniform_angle: n must be positive");
  QuadratureRule1D rule;
  rule.kind = RuleKind::uniform_angle;
  rule.n = n;
  rule.nodes.resize(n);
  rule.weights.assign(n, 2.0 * kPi / n);
  for (int k = 0; k < n; ++k) rule.nodes[k] = 2.0 * kPi * k / n;
  return rule;
}

std::string to_json_string(const QuadratureRule1D& rule) {
  nlohmann::json j;
  j["kind"] = to_string(rule.kind);
  j["n"] = rule.n;
  j["alpha"] = rule.alpha;
  j["nodes"] = rule.nodes;
  j["weights"] = rule.weights;
  return j.dump();
}

QuadratureRule1D rule_from_json(std::string_view text) {
  QuadratureRule1D rule;
  try {
    const auto j = nlohmann::json::parse(text);
    rule.kind = rule_kind_from_string(j.at("kind").get<std::string>());
    rule.n = j.at("n").get<int>();
    rule.alpha = j.value("alpha", 0.0);
    rule.nodes = j.at("nodes").get<std::vector<double>>();
    rule.weights = j.at("weights").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("rule_from_json: ") + e.what());
  }
  if (rule.nodes.size() != static_cast<std::size_t>(rule.n) ||
      rule.weights.size() != rule.nodes.size())
    throw std::invalid_argument("rule_from_json: node/weight count does not match n");
  return rule;
}

SphereRule sphere_rule(int n_polar, int n_azimuth) {
  const QuadratureRule1D polar = gauss_legendre(n_polar);
  const QuadratureRule1D azimuth = uniform_angle(n_azimuth);
  SphereRule rule;
  rule.units.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  rule.weights.reserve(rule.units.capacity());
  for (int a = 0; a < n_polar; ++a) {
    const double c = polar.nodes[a];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int b = 0; b < n_azimuth; ++b) {
      const double psi = azimuth.nodes[b];
      rule.units.push_back(
          ImaginaryUnit::from({0.0, s * std::cos(psi), s * std::sin(psi), c}));
      rule.weights.push_back(polar.weights[a] * azimuth.weights[b]);
    }
  }
  return rule;
}

std::vector<std::complex<double>> SliceGaussianRule::points() const {
  std::vector<std::complex<double>> pts;
  pts.reserve(radial.nodes.size() * angular.nodes.size());
  for (double t : radial.nodes) {
    const double r = std::sqrt(t);
    for (double theta : angular.nodes) pts.push_back(std::polar(r, theta));
  }
  return pts;
}

std::vector<double> SliceGaussianRule::point_weights() const {
  std::vector<double> w;
  w.reserve(radial.nodes.size() * angular.nodes.size());
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double radial_weight =
        0.5 * radial.weights[i] *
        (radial.alpha == 0.0 ? 1.0 : std::pow(radial.nodes[i], -radial.alpha));
    for (double aw : angular.weights) w.push_back(radial_weight * aw);
  }
  return w;
}

SliceGaussianRule slice_gaussian_rule(int n_r, int n_theta, double alpha) {
  return {gauss_laguerre(n_r, alpha), uniform_angle(n_theta)};
}

Quaternion slice_gaussian_integrate(const QuaternionFunction& f, const ImaginaryUnit& unit,
                                    const SliceGaussianRule& rule) {
  const auto pts = rule.points();
  const auto w = rule.point_weights();
  CompensatedSum<Quaternion> acc;
  for (std::size_t i = 0; i < pts.size(); ++i) acc.add(f(from_slice(pts[i], unit)) * w[i]);
  return acc.value();
}

Quaternion slice_gaussian_integrate(const QuaternionFunction& f, const ImaginaryUnit& unit,
                                    int n_r, int n_theta) {
  return slice_gaussian_integrate(f, unit, slice_gaussian_rule(n_r, n_theta));
}

SlicedMeasureRule sliced_measure_rule(int n_r, int n_theta, int n_polar, int n_azimuth) {
  return {slice_gaussian_rule(n_r, n_theta), sphere_rule(n_polar, n_azimuth)};
}

Quaternion sliced_measure_integrate(const QuaternionFunction& f, const SlicedMeasureRule& rule) {
  const auto pts = rule.slice.points();
  const auto w = rule.slice.point_weights();
  return rule.sphere.integrate([&](const ImaginaryUnit& unit) {
    CompensatedSum<Quaternion> acc;
    for (std::size_t i = 0; i < pts.size(); ++i) acc.add(f(from_slice(pts[i], unit)) * w[i]);
    return acc.value();
  });
}

}  // namespace qfock
