#include "qfock/spaces.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qfock/special.hpp"

namespace qfock {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

FockCoefficients::FockCoefficients(int level, std::map<int, Quaternion> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  check_degree(level_, "FockCoefficients level");
  for (const auto& [n, c] : coeffs_) check_degree(n, "FockCoefficients index");
}

FockCoefficients FockCoefficients::basis(int level, int n, const Quaternion& c) {
  return FockCoefficients(level, {{n, c}});
}

FockCoefficients FockCoefficients::psi(int level, int n) {
  if (n < 0) throw std::domain_error("psi: n < 0 is outside the representable range");
  const double sign = level % 2 == 0 ? 1.0 : -1.0;
  return basis(level, level + n, sign / pochhammer(n + 1.0, level));
}

std::string FockCoefficients::to_json() const {
  nlohmann::json j;
  j["m"] = level_;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& [n, c] : coeffs_)
    j["coeffs"].push_back({{"n", n}, {"w", c.w}, {"x1", c.x1}, {"x2", c.x2}, {"x3", c.x3}});
  return j.dump();
}

FockCoefficients FockCoefficients::from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  std::map<int, Quaternion> coeffs;
  for (const auto& e : j.at("coeffs")) {
    const int n = e.at("n").get<int>();
    if (coeffs.count(n)) throw std::invalid_argument("FockCoefficients: duplicate index " + std::to_string(n));
    coeffs[n] = {e.at("w").get<double>(), e.at("x1").get<double>(), e.at("x2").get<double>(),
                 e.at("x3").get<double>()};
  }
  return FockCoefficients(j.at("m").get<int>(), std::move(coeffs));
}

Quaternion evaluate(const FockCoefficients& f, const Quaternion& q) {
  if (f.coeffs().empty()) return {};
  const int max_n = f.coeffs().rbegin()->first;
  const SliceCoords s = slice_decompose(q);
  const auto t = qhermite_table(max_n, f.level(), {s.x, s.y});
  CompensatedSum<Quaternion> acc;
  for (const auto& [n, c] : f.coeffs()) acc.add(from_slice(t[n][f.level()], s.unit) * c);
  return acc.value();
}

double norm_sq(const FockCoefficients& f) {
  double s = 0.0;
  for (const auto& [n, c] : f.coeffs()) s += factorial(n) * norm_sq(c);
  return kPi * factorial(f.level()) * s;
}

double norm_sq_quadrature(const FockCoefficients& f, const ImaginaryUnit& probe,
                          const SliceGaussianRule& rule) {
  return slice_gaussian_integrate([&](const Quaternion& q) { return Quaternion(norm_sq(evaluate(f, q))); },
                                  probe, rule)
      .w;
}

Quaternion psi(int m, int n, const Quaternion& q) {
  if (n < 0)
    throw std::domain_error("psi: lower parameter n+1 = " + std::to_string(n + 1) +
                            " is a nonpositive integer");
  return pow(q, n) * hyp1f1_terminating(m, n + 1.0, norm_sq(q));
}

Quaternion kernel_closed(int m, const Quaternion& q, const Quaternion& qp, double tol) {
  return star_exp(q, conj(qp), tol) * (laguerre(m, 0.0, norm_sq(q - qp)) / kPi);
}

Quaternion kernel_conjugate_form(int m, const Quaternion& q, const Quaternion& qp, double tol) {
  return star_exp(conj(q), qp, tol) * (laguerre(m, 0.0, norm_sq(q - qp)) / kPi);
}

namespace {

template <typename Accumulate>
void kernel_terms(int m, const Quaternion& q, const Quaternion& qp, int N, Accumulate&& acc) {
  check_degree(m, "kernel_series level");
  check_degree(N, "kernel_series terms");
  const SliceCoords s = slice_decompose(q);
  const SliceCoords sp = slice_decompose(qp);
  const auto left = qhermite_table(N, m, {s.x, s.y});
  const auto right = qhermite_table(m, N, {sp.x, sp.y});
  const double inv = 1.0 / (kPi * factorial(m));
  double inv_fact = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) inv_fact /= n;
    acc(from_slice(left[n][m], s.unit) * from_slice(right[m][n], sp.unit) * (inv * inv_fact));
  }
}

}  // namespace

Quaternion kernel_series(int m, const Quaternion& q, const Quaternion& qp, int N) {
  CompensatedSum<Quaternion> acc;
  kernel_terms(m, q, qp, N, [&](const Quaternion& t) { acc.add(t); });
  return acc.value();
}

double kernel_series_abs(int m, const Quaternion& q, const Quaternion& qp, int N) {
  double s = 0.0;
  kernel_terms(m, q, qp, N, [&](const Quaternion& t) { s += norm(t); });
  return s;
}

double kernel_series_tail(int m, const Quaternion& q, const Quaternion& qp, int N) {
  if (N < m) return std::numeric_limits<double>::infinity();
  const double rho = norm(q) * norm(qp);
  if (rho == 0.0) return 0.0;
  const double a = norm_sq(q);
  const double b = norm_sq(qp);
  // term_n <= n! rho^{n-m} e^{(a+b)/2} / ((n-m)!^2 pi m!), ratios decrease in n
  auto log_term = [&](int n) {
    return std::lgamma(n + 1.0) + (n - m) * std::log(rho) + 0.5 * (a + b) -
           2.0 * std::lgamma(n - m + 1.0) - std::log(kPi) - std::lgamma(m + 1.0);
  };
  const int first = N + 1;
  const double ratio = (first + 1.0) * rho / ((first + 1.0 - m) * (first + 1.0 - m));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_term(first)) / (1.0 - ratio);
}

Quaternion project(int m, const QuaternionFunction& f, const Quaternion& q,
                   const SliceGaussianRule& rule) {
  const SliceCoords s = slice_decompose(q);
  return slice_gaussian_integrate(
      [&](const Quaternion& qp) { return kernel_closed(m, q, qp) * f(qp); }, s.unit, rule);
}

Quaternion project_sliced(int m, const QuaternionFunction& f, const Quaternion& q,
                          const SlicedMeasureRule& rule) {
  return sliced_measure_integrate(
             [&](const Quaternion& qp) { return kernel_closed(m, q, qp) * f(qp); }, rule) /
         (4.0 * kPi);
}

EvaluationBound evaluation_bound_check(const FockCoefficients& f, const Quaternion& q) {
  EvaluationBound b;
  b.lhs = norm(evaluate(f, q));
  b.rhs = std::sqrt(std::exp(norm_sq(q)) / kPi * norm_sq(f));
  // equality is attained at q = 0 for m = 0; allow rounding there
  b.holds = b.lhs <= b.rhs * (1.0 + 1e-14);
  return b;
}

std::vector<Quaternion> decomposition_points() {
  return {
      {0.3, 0.4, 0.0, 0.0},   {-0.7, 0.0, 0.5, 0.0},  {0.2, 0.3, -0.4, 0.6},
      {1.1, -0.2, 0.1, 0.5},  {-0.5, 0.6, 0.6, -0.6}, {0.0, 0.0, 0.0, 1.2},
  };
}

double hilbert_decomposition_check(int M, int a, int b, const std::vector<Quaternion>& points,
                                   const SliceGaussianRule& rule) {
  if (b > M) throw std::invalid_argument("hilbert_decomposition_check: requires b <= M");
  const QuaternionFunction f = [a, b](const Quaternion& q) { return qhermite(a, b, q); };
  double worst = 0.0;
  double scale = 0.0;
  for (const Quaternion& p : points) {
    CompensatedSum<Quaternion> sum;
    for (int m = 0; m <= M; ++m) sum.add(project(m, f, p, rule));
    const Quaternion target = f(p);
    worst = std::max(worst, norm(sum.value() - target));
    scale = std::max(scale, norm(target));
  }
  return worst / scale;
}

DivergenceProbe divergence_probe(double mu, int n, const std::vector<double>& T) {
  DivergenceProbe p;
  p.mu = mu;
  p.n = n;
  p.T = T;
  const QuadratureRule1D unit = gauss_legendre(32, 0.0, 1.0);
  auto integrand = [&](double t) {
    const double f = hyp1f1_series(-mu, n + 1.0, t);
    return std::exp(n * std::log(t) - t) * f * f;
  };
  for (double upper : T) {
    if (!(upper > 0.0)) throw std::invalid_argument("divergence_probe: T must be positive");
    CompensatedSum<double> acc;
    const int panels = static_cast<int>(std::ceil(upper));
    const double width = upper / panels;
    for (int k = 0; k < panels; ++k)
      acc.add(width * unit.integrate([&](double u) { return integrand((k + u) * width); }));
    p.integral.push_back(acc.value());
    if (p.integral.size() > 1)
      p.growth.push_back(p.integral.back() / p.integral[p.integral.size() - 2]);
  }
  return p;
}

}  // namespace qfock
