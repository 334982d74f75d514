#include "qfock/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qfock {

Quaternion& Quaternion::operator*=(const Quaternion& o) {
  *this = *this * o;
  return *this;
}

double norm(const Quaternion& q) {
  // hypot-style scaling keeps |q| finite for large components
  const double s = std::max({std::abs(q.w), std::abs(q.x1), std::abs(q.x2), std::abs(q.x3)});
  if (s == 0.0 || !std::isfinite(s)) return s;
  const Quaternion u = q / s;
  return s * std::sqrt(norm_sq(u));
}

ConjNorm conj_norm(const Quaternion& q) { return {conj(q), norm(q)}; }

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw std::domain_error("inverse of the zero quaternion");
  return conj(q) / n2;
}

Quaternion exp(const Quaternion& q) {
  const double v = norm(q.imag());
  const double ew = std::exp(q.w);
  if (v == 0.0) return Quaternion(ew);
  const double s = ew * std::sin(v) / v;
  return {ew * std::cos(v), s * q.x1, s * q.x2, s * q.x3};
}

Quaternion pow(const Quaternion& q, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  Quaternion result(1.0);
  Quaternion base = q;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x1 - q.x1), std::abs(p.x2 - q.x2),
                   std::abs(p.x3 - q.x3)});
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
  const double scale = std::max({1.0, norm(p), norm(q)});
  return max_abs_diff(p, q) <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
}

ImaginaryUnit ImaginaryUnit::from(const Quaternion& q) {
  const Quaternion v = q.imag();
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("ImaginaryUnit: quaternion has no imaginary part");
  return ImaginaryUnit(v / n);
}

ImaginaryUnit ImaginaryUnit::from_angles(double phi, double psi) {
  return ImaginaryUnit::from({0.0, std::sin(phi) * std::cos(psi), std::sin(phi) * std::sin(psi),
                              std::cos(phi)});
}

Quaternion SliceCoords::reconstruct() const { return from_slice(x, y, unit); }

Quaternion PolarCoords::reconstruct() const {
  return from_slice(r * std::cos(theta), r * std::sin(theta), unit);
}

SliceCoords slice_decompose(const Quaternion& q) {
  if (q.is_real()) return {q.w, 0.0, ImaginaryUnit::i(), true};
  const double y = norm(q.imag());
  return {q.w, y, ImaginaryUnit::from(q), false};
}

PolarCoords polar_decompose(const Quaternion& q) {
  const SliceCoords s = slice_decompose(q);
  const double r = std::hypot(s.x, s.y);
  if (r == 0.0) return {0.0, 0.0, s.unit, true};
  if (s.canonical) return {r, s.x > 0.0 ? 0.0 : std::numbers::pi, s.unit, true};
  // y > 0 puts theta in (0, pi)
  return {r, std::atan2(s.y, s.x), s.unit, false};
}

Quaternion from_slice(double x, double y, const ImaginaryUnit& unit) {
  const Quaternion& u = unit.quaternion();
  return {x, y * u.x1, y * u.x2, y * u.x3};
}

Quaternion from_slice(std::complex<double> z, const ImaginaryUnit& unit) {
  return from_slice(z.real(), z.imag(), unit);
}

std::complex<double> to_slice(const Quaternion& q, const ImaginaryUnit& unit) {
  const Quaternion& u = unit.quaternion();
  return {q.w, q.x1 * u.x1 + q.x2 * u.x2 + q.x3 * u.x3};
}

double slice_deviation(const Quaternion& q, const ImaginaryUnit& unit) {
  return norm(q - from_slice(to_slice(q, unit), unit));
}

}  // namespace qfock
