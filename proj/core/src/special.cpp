#include "qfock/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfock/quadrature.hpp"

namespace qfock {

void check_degree(int n, const char* what) {
  if (n < 0 || n > kMaxDegree)
    throw std::out_of_range(std::string(what) + ": degree " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxDegree) + "]");
}

double factorial(int n) {
  if (n < 0) throw std::out_of_range("factorial of a negative integer");
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double pochhammer(double c, int k) {
  if (k < 0) throw std::out_of_range("pochhammer: negative length");
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= c + j;
  return p;
}

double hermite_poly(int n, double t) {
  check_degree(n, "hermite_poly");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_fn(int n, double t) { return std::exp(-0.5 * t * t) * hermite_poly(n, t); }

double hermite_fn_norm_sq(int n) {
  check_degree(n, "hermite_fn_norm_sq");
  return std::ldexp(factorial(n), n) * std::sqrt(std::numbers::pi);
}

double laguerre(int m, double alpha, double t) {
  check_degree(m, "laguerre");
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 + alpha - t;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - t) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

template <typename Accumulate>
void terminating_terms(int m, double c, double t, Accumulate&& acc) {
  check_degree(m, "hyp1f1_terminating");
  for (int k = 0; k < m; ++k) {
    if (c + k == 0.0)
      throw std::domain_error("hyp1f1_terminating: lower Pochhammer factor (c + " +
                              std::to_string(k) + ") vanishes for c = " + std::to_string(c));
  }
  double term = 1.0;
  acc(term);
  for (int k = 0; k < m; ++k) {
    term *= (k - m) * t / ((c + k) * (k + 1.0));
    acc(term);
  }
}

}  // namespace

double hyp1f1_terminating(int m, double c, double t) {
  CompensatedSum<double> s;
  terminating_terms(m, c, t, [&](double v) { s.add(v); });
  return s.value();
}

double hyp1f1_terminating_abs(int m, double c, double t) {
  double s = 0.0;
  terminating_terms(m, c, t, [&](double v) { s += std::abs(v); });
  return s;
}

double hyp1f1_series(double a, double c, double t) {
  if (!(c > 0.0)) throw std::domain_error("hyp1f1_series: c must be positive");
  if (t < 0.0) throw std::domain_error("hyp1f1_series: t must be nonnegative");
  CompensatedSum<double> s;
  double term = 1.0;
  s.add(term);
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * t / ((c + k) * (k + 1.0));
    s.add(term);
    if (term == 0.0) break;
    // past the peak the ratio is below 1/2, so the tail is at most the current term
    if (k > 2.0 * t && std::abs(term) < 1e-18 * std::abs(s.value())) break;
  }
  return s.value();
}

int star_exp_terms(double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("star_exp: tol must be positive");
  if (x == 0.0) return 0;
  // term_{N+1} = x^{N+1}/(N+1)!; geometric majorant once N + 2 > x
  double term = 1.0;
  for (int n = 0; n < 10000; ++n) {
    term *= x / (n + 1.0);
    if (n + 2.0 > x) {
      const double tail = term / (1.0 - x / (n + 2.0));
      if (tail < tol) return n;
    }
  }
  throw std::runtime_error("star_exp: tail bound not reached");
}

Quaternion star_exp(const Quaternion& a, const Quaternion& b, double tol) {
  const int n_terms = star_exp_terms(norm(a) * norm(b), tol);
  CompensatedSum<Quaternion> s;
  s.add(Quaternion(1.0));
  Quaternion an(1.0);  // a^n / n!
  Quaternion bn(1.0);
  for (int n = 1; n <= n_terms; ++n) {
    an = an * a / n;
    bn = bn * b;
    s.add(an * bn);
  }
  return s.value();
}

Quaternion gaussian_integral(double alpha, const Quaternion& beta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("gaussian_integral: alpha must be positive");
  static const QuadratureRule1D rule = gauss_hermite(80);
  const double s = std::sqrt(alpha);
  return rule.integrate([&](double u) { return exp(beta * (u / s)); }) / s;
}

Quaternion gaussian_integral_closed(double alpha, const Quaternion& beta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("gaussian_integral: alpha must be positive");
  return std::sqrt(std::numbers::pi / alpha) * exp(beta * beta / (4.0 * alpha));
}

}  // namespace qfock
