#include "qfock/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qfock/qhermite.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/special.hpp"

namespace qfock {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

const QuadratureRule1D& transform_rule() {
  static const QuadratureRule1D rule = gauss_hermite(kTransformNodes);
  return rule;
}

void check_level(int m) {
  if (m < 0 || m > kMaxBargmannLevel)
    throw std::out_of_range("Bargmann level " + std::to_string(m) + " outside [0, " +
                            std::to_string(kMaxBargmannLevel) + "]");
}

void require_hermite(const RealLineFunction& f, const char* what) {
  if (f.decay != DecayClass::hermite || !f.reduced)
    throw std::invalid_argument(std::string(what) + ": function is not tagged hermite-class");
}

double kernel_normalization(int m) {
  return std::pow(kPi, 0.75) * std::pow(kSqrt2, m) * std::sqrt(factorial(m));
}

// e^{t^2/2} A_m(t; q) in the slice of q.
std::complex<double> reduced_kernel(int m, double t, std::complex<double> z) {
  const std::complex<double> zb = std::conj(z);
  return std::exp(-0.5 * zb * zb + kSqrt2 * zb * t) * hermite_poly(m, kSqrt2 * z.real() - t) /
         kernel_normalization(m);
}

}  // namespace

Quaternion RealLineFunction::operator()(double t) const {
  if (!reduced) return {};
  const Quaternion v = reduced(t);
  return decay == DecayClass::hermite ? v * std::exp(-0.5 * t * t) : v;
}

RealLineFunction RealLineFunction::zero() {
  return {[](double) { return Quaternion{}; }, DecayClass::hermite};
}

RealLineFunction RealLineFunction::hermite(int n, const Quaternion& c) {
  check_degree(n, "RealLineFunction::hermite");
  return {[n, c](double t) { return hermite_poly(n, t) * c; }, DecayClass::hermite};
}

RealLineFunction RealLineFunction::hermite_combination(std::vector<Quaternion> c) {
  check_degree(static_cast<int>(c.size()) - 1, "RealLineFunction::hermite_combination");
  return {[c = std::move(c)](double t) {
            CompensatedSum<Quaternion> s;
            for (std::size_t k = 0; k < c.size(); ++k)
              s.add(hermite_poly(static_cast<int>(k), t) * c[k]);
            return s.value();
          },
          DecayClass::hermite};
}

RealLineFunction RealLineFunction::reflected_hermite(int m) {
  check_degree(m, "RealLineFunction::reflected_hermite");
  return {[m](double t) { return Quaternion(hermite_poly(m, -t)); }, DecayClass::hermite};
}

RealLineFunction RealLineFunction::untagged(std::function<Quaternion(double)> f) {
  return {std::move(f), DecayClass::none};
}

Quaternion bargmann_kernel(int m, double t, const Quaternion& q) {
  check_level(m);
  const SliceCoords s = slice_decompose(q);
  return from_slice(reduced_kernel(m, t, {s.x, s.y}) * std::exp(-0.5 * t * t), s.unit);
}

Quaternion bargmann_kernel_series(int m, double t, const Quaternion& q, int N) {
  check_level(m);
  const SliceCoords s = slice_decompose(q);
  const auto table = qhermite_table(m, N, {s.x, s.y});
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  for (int n = 0; n <= N; ++n) {
    const double c = hermite_fn(n, t) /
                     std::sqrt(hermite_fn_norm_sq(n) * kPi * factorial(m) * factorial(n));
    re.add(c * table[m][n].real());
    im.add(c * table[m][n].imag());
  }
  return from_slice({re.value(), im.value()}, s.unit);
}

double bargmann_kernel_norm_sq(int m, const Quaternion& q) {
  check_level(m);
  const SliceCoords s = slice_decompose(q);
  const double centre = kSqrt2 * s.x;
  // |A_m(s + c)|^2 e^{s^2} against the weight e^{-s^2}
  return transform_rule().integrate([&](double u) {
    const double t = u + centre;
    const double a = std::abs(reduced_kernel(m, t, {s.x, s.y}));
    return a * a * std::exp(u * u - t * t);
  });
}

Quaternion bargmann_transform(int m, const RealLineFunction& phi, const Quaternion& q) {
  check_level(m);
  require_hermite(phi, "bargmann_transform");
  const SliceCoords s = slice_decompose(q);
  // the two e^{-t^2/2} factors form the Gauss-Hermite weight
  return transform_rule().integrate(
      [&](double t) { return from_slice(reduced_kernel(m, t, {s.x, s.y}), s.unit) * phi.reduced(t); });
}

double bargmann_basis_constant(int m, int n) {
  return std::sqrt(hermite_fn_norm_sq(n) / (kPi * factorial(m) * factorial(n)));
}

double l2_norm(const RealLineFunction& phi) {
  require_hermite(phi, "l2_norm");
  return std::sqrt(transform_rule().integrate([&](double t) { return norm_sq(phi.reduced(t)); }));
}

Quaternion fourier_wigner(const RealLineFunction& f, const RealLineFunction& g,
                          const ImaginaryUnit& unit, double x, double y) {
  require_hermite(f, "fourier_wigner");
  require_hermite(g, "fourier_wigner");
  // e^{-(t+x/2)^2/2 - (t-x/2)^2/2} = e^{-t^2} e^{-x^2/4}
  const Quaternion v = transform_rule().integrate([&](double t) {
    const Quaternion phase = from_slice(std::cos(y * t), std::sin(y * t), unit);
    return phase * f.reduced(t + 0.5 * x) * g.reduced(t - 0.5 * x);
  });
  return v * (std::exp(-0.25 * x * x) / std::sqrt(2.0 * kPi));
}

ConstantFit fit_right_constant(const std::vector<Quaternion>& lhs, const std::vector<Quaternion>& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("fit_right_constant: size mismatch");
  CompensatedSum<Quaternion> num;
  CompensatedSum<double> den;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num.add(conj(rhs[i]) * lhs[i]);
    den.add(norm_sq(rhs[i]));
  }
  ConstantFit fit;
  if (den.value() > 0.0) fit.constant = num.value() / den.value();
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    worst = std::max(worst, norm(lhs[i] - rhs[i] * fit.constant));
    scale = std::max(scale, norm(lhs[i]));
  }
  fit.spread = scale > 0.0 ? worst / scale : 0.0;
  return fit;
}

std::vector<GridPoint> square_grid(int n, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("square_grid: n must be positive");
  std::vector<GridPoint> g;
  g.reserve(static_cast<std::size_t>(n) * n);
  const double step = n > 1 ? (hi - lo) / (n - 1) : 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.push_back({lo + a * step, lo + b * step});
  return g;
}

Quaternion fw_hermite_closed(int m, int n, const Quaternion& q, WignerGaussian g) {
  const double r2 = norm_sq(q);
  const double gauss = std::exp(-(g == WignerGaussian::as_stated ? 0.5 : 0.25) * r2);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return qhermite(m, n, q / kSqrt2) * (sign * std::pow(kSqrt2, m + n - 1) * gauss);
}

GridComparison fw_hermite_check(int m, int n, const ImaginaryUnit& unit,
                                const std::vector<GridPoint>& grid, WignerGaussian g) {
  const RealLineFunction hm = RealLineFunction::hermite(m);
  const RealLineFunction hn = RealLineFunction::hermite(n);
  GridComparison c;
  for (const GridPoint& p : grid) {
    c.lhs.push_back(fourier_wigner(hm, hn, unit, p.x, p.y));
    c.rhs.push_back(fw_hermite_closed(m, n, from_slice(p.x, p.y, unit), g));
  }
  c.fit = fit_right_constant(c.lhs, c.rhs);
  return c;
}

GridComparison fw_bargmann_relation_check(int m, const RealLineFunction& f, const ImaginaryUnit& unit,
                                          const std::vector<GridPoint>& grid) {
  check_level(m);
  const RealLineFunction phi = RealLineFunction::reflected_hermite(m);
  const double prefactor = std::sqrt(kPi) * factorial(m) * std::pow(2.0, 0.5 * (m - 1));
  GridComparison c;
  for (const GridPoint& p : grid) {
    const Quaternion q = from_slice(p.x, p.y, unit);
    c.lhs.push_back(fourier_wigner(f, phi, unit, p.x, p.y));
    c.rhs.push_back(bargmann_transform(m, f, conj(q / kSqrt2)) *
                    (prefactor * std::exp(-0.25 * norm_sq(q))));
  }
  c.fit = fit_right_constant(c.lhs, c.rhs);
  return c;
}

GridComparison bargmann_basis_image_check(int m, int n, const std::vector<Quaternion>& points) {
  const RealLineFunction hn = RealLineFunction::hermite(n);
  GridComparison c;
  for (const Quaternion& q : points) {
    c.lhs.push_back(bargmann_transform(m, hn, q));
    c.rhs.push_back(qhermite(m, n, q));
  }
  c.fit = fit_right_constant(c.lhs, c.rhs);
  return c;
}

std::string fitted_constants_csv(int max_m, int max_n, const std::vector<Quaternion>& points) {
  std::ostringstream os;
  os.precision(17);
  os << "m,n,c_w,c_x1,c_x2,c_x3,printed_constant,ratio\n";
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      const Quaternion c = bargmann_basis_image_check(m, n, points).fit.constant;
      const double printed = std::pow(kSqrt2, m - 1) / kPi;
      os << m << ',' << n << ',' << c.w << ',' << c.x1 << ',' << c.x2 << ',' << c.x3 << ','
         << printed << ',' << norm(c) / printed << '\n';
    }
  return os.str();
}

}  // namespace qfock
