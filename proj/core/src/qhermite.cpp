#include "qfock/qhermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qfock/quadrature.hpp"
#include "qfock/special.hpp"

namespace qfock {
namespace {

// (-1)^j j! C(m,j) C(n,j), the coefficient of q^{m-j} qbar^{n-j}.
std::vector<double> direct_coefficients(int m, int n) {
  const int p = std::min(m, n);
  std::vector<double> c(p + 1);
  double v = 1.0;
  for (int j = 0; j <= p; ++j) {
    c[j] = v;
    // c_{j+1}/c_j = -(m-j)(n-j)/(j+1)
    v *= -static_cast<double>(m - j) * (n - j) / (j + 1.0);
  }
  return c;
}

std::complex<double> complex_hermite(int n, std::complex<double> w) {
  check_degree(n, "hermite_poly");
  std::complex<double> prev = 1.0;
  if (n == 0) return prev;
  std::complex<double> cur = 2.0 * w;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> next = 2.0 * w * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct SliceView {
  std::complex<double> z;
  ImaginaryUnit unit;
};

SliceView slice_view(const Quaternion& q) {
  const SliceCoords s = slice_decompose(q);
  return {{s.x, s.y}, s.unit};
}

}  // namespace

QHermiteIndex make_index(int m, int n) {
  check_degree(m, "qhermite index m");
  check_degree(n, "qhermite index n");
  return {m, n};
}

Quaternion qhermite_direct(int m, int n, const Quaternion& q) {
  make_index(m, n);
  const std::vector<double> c = direct_coefficients(m, n);
  std::vector<Quaternion> qp(m + 1, Quaternion(1.0));
  std::vector<Quaternion> qbp(n + 1, Quaternion(1.0));
  const Quaternion qb = conj(q);
  for (int k = 1; k <= m; ++k) qp[k] = qp[k - 1] * q;
  for (int k = 1; k <= n; ++k) qbp[k] = qbp[k - 1] * qb;
  CompensatedSum<Quaternion> s;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) s.add(c[j] * (qp[m - j] * qbp[n - j]));
  return s.value();
}

PolarResult qhermite_polar(int m, int n, const Quaternion& q) {
  make_index(m, n);
  const PolarCoords pc = polar_decompose(q);
  if (pc.r < kPolarCutoff) return {qhermite_direct(m, n, q), true};
  const int d = std::abs(m - n);
  const int p = std::min(m, n);
  const double c = (p % 2 == 0 ? 1.0 : -1.0) * pochhammer(d + 1.0, p);
  const double radial = c * std::pow(pc.r, d) * hyp1f1_terminating(p, d + 1.0, pc.r * pc.r);
  const double angle = (m - n) * pc.theta;
  return {from_slice(radial * std::cos(angle), radial * std::sin(angle), pc.unit), false};
}

std::vector<std::vector<std::complex<double>>> qhermite_table(int max_m, int max_n,
                                                              std::complex<double> z) {
  make_index(max_m, max_n);
  const std::complex<double> zb = std::conj(z);
  std::vector<std::vector<std::complex<double>>> t(max_m + 1,
                                                   std::vector<std::complex<double>>(max_n + 1));
  t[0][0] = 1.0;
  for (int a = 1; a <= max_m; ++a) t[a][0] = z * t[a - 1][0];
  for (int b = 0; b < max_n; ++b)
    for (int a = 0; a <= max_m; ++a)
      t[a][b + 1] = zb * t[a][b] - (a > 0 ? static_cast<double>(a) * t[a - 1][b] : 0.0);
  return t;
}

Quaternion qhermite_recurrence(int m, int n, const Quaternion& q) {
  const SliceView s = slice_view(q);
  return from_slice(qhermite_table(m, n, s.z)[m][n], s.unit);
}

double qhermite_abs_scale(int m, int n, const Quaternion& q) {
  make_index(m, n);
  const std::vector<double> c = direct_coefficients(m, n);
  const double r = norm(q);
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    s += std::abs(c[j]) * std::pow(r, m + n - 2 * static_cast<int>(j));
  return s;
}

BoundCheck qhermite_bound_check(int n, int k, const Quaternion& q) {
  if (k < 0) throw std::out_of_range("qhermite_bound_check: k must be nonnegative");
  const double r = norm(q);
  BoundCheck b;
  b.lhs = norm(qhermite(n + k, n, q));
  b.rhs = pochhammer(k + 1.0, n) * std::pow(r, k) * std::exp(0.5 * r * r);
  b.holds = b.lhs <= b.rhs;
  return b;
}

Quaternion hermite_poly(int n, const Quaternion& q) {
  const SliceView s = slice_view(q);
  return from_slice(complex_hermite(n, s.z), s.unit);
}

double bilateral_genfn_tail(int m, double x, const Quaternion& q, int N) {
  if (N < m) return std::numeric_limits<double>::infinity();
  const double r = norm(q);
  if (r == 0.0) return 0.0;
  const double log_c = std::log(1.086435) + 0.5 * x * x + 0.5 * r * r;
  // t_n = C sqrt(2^n n!) r^{n-m} / (n-m)!, ratios t_{n+1}/t_n decrease in n
  auto log_term = [&](int n) {
    return log_c + 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0)) + (n - m) * std::log(r) -
           std::lgamma(n - m + 1.0);
  };
  const int first = N + 1;
  const double rho = std::sqrt(2.0 * (first + 1)) * r / (first + 1 - m);
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_term(first)) / (1.0 - rho);
}

int bilateral_genfn_terms(int m, double x, const Quaternion& q, double tol) {
  for (int N = m; N <= kMaxDegree; ++N)
    if (bilateral_genfn_tail(m, x, q, N) < tol) return N;
  throw std::runtime_error("bilateral_genfn_terms: tail bound not reached within the degree cap");
}

GenFnCheck bilateral_genfn_check(int m, double x, const Quaternion& q, int N) {
  make_index(m, N);
  const SliceView s = slice_view(q);
  const auto t = qhermite_table(m, N, s.z);
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  double scale = 0.0;
  double inv_fact = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) inv_fact /= n;
    const std::complex<double> term = hermite_poly(n, x) * inv_fact * t[m][n];
    re.add(term.real());
    im.add(term.imag());
    scale += std::abs(term);
  }
  const std::complex<double> zb = std::conj(s.z);
  const std::complex<double> rhs =
      std::exp(-zb * zb + 2.0 * x * zb) * complex_hermite(m, zb + 0.5 * s.z - x);
  GenFnCheck g;
  g.lhs = from_slice({re.value(), im.value()}, s.unit);
  g.rhs = from_slice(rhs, s.unit);
  g.tail = bilateral_genfn_tail(m, x, q, N);
  g.scale = scale;
  return g;
}

SlicePolynomial SlicePolynomial::monomial(int m, int n) {
  SlicePolynomial z;
  z.c_[{1, 0}] = 1.0;
  z.c_[{0, 1}] = std::complex<double>(0.0, 1.0);
  SlicePolynomial zb;
  zb.c_[{1, 0}] = 1.0;
  zb.c_[{0, 1}] = std::complex<double>(0.0, -1.0);
  SlicePolynomial p;
  p.c_[{0, 0}] = 1.0;
  for (int k = 0; k < m; ++k) p = p * z;
  for (int k = 0; k < n; ++k) p = p * zb;
  return p;
}

SlicePolynomial& SlicePolynomial::operator+=(const SlicePolynomial& o) {
  for (const auto& [k, v] : o.c_) c_[k] += v;
  return *this;
}

SlicePolynomial SlicePolynomial::scaled(std::complex<double> s) const {
  SlicePolynomial p = *this;
  for (auto& [k, v] : p.c_) v *= s;
  return p;
}

SlicePolynomial SlicePolynomial::operator*(const SlicePolynomial& o) const {
  SlicePolynomial p;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) p.c_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  return p;
}

SlicePolynomial SlicePolynomial::neg_wirtinger_laplacian() const {
  SlicePolynomial p;
  for (const auto& [k, v] : c_) {
    const auto [a, b] = k;
    if (a >= 2) p.c_[{a - 2, b}] += -0.25 * a * (a - 1) * v;
    if (b >= 2) p.c_[{a, b - 2}] += -0.25 * b * (b - 1) * v;
  }
  return p;
}

SlicePolynomial SlicePolynomial::exp_neg_wirtinger_laplacian() const {
  SlicePolynomial result = *this;
  SlicePolynomial power = *this;
  for (int k = 1; !power.c_.empty(); ++k) {
    power = power.neg_wirtinger_laplacian().scaled(1.0 / k);
    result += power;
  }
  return result;
}

std::complex<double> SlicePolynomial::operator()(std::complex<double> z) const {
  std::complex<double> s = 0.0;
  for (const auto& [k, v] : c_) s += v * std::pow(z.real(), k.first) * std::pow(z.imag(), k.second);
  return s;
}

double SlicePolynomial::max_abs_diff(const SlicePolynomial& o) const {
  SlicePolynomial d = *this;
  d += o.scaled(-1.0);
  double worst = 0.0;
  for (const auto& [k, v] : d.c_) worst = std::max(worst, std::abs(v));
  return worst;
}

SlicePolynomial qhermite_slice_polynomial(int m, int n) {
  make_index(m, n);
  const std::vector<double> c = direct_coefficients(m, n);
  SlicePolynomial p;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int jj = static_cast<int>(j);
    p += SlicePolynomial::monomial(m - jj, n - jj).scaled(c[j]);
  }
  return p;
}

}  // namespace qfock
