#pragma once

#include <complex>
#include <iosfwd>

namespace qfock {

/// Real quaternion w + x1 i + x2 j + x3 k.
struct Quaternion {
  double w = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: reals embed in H
  constexpr Quaternion(double w_, double x1_, double x2_, double x3_)
      : w(w_), x1(x1_), x2(x2_), x3(x3_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x1, x2, x3}; }
  constexpr bool is_real() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0; }

  constexpr Quaternion operator-() const { return {-w, -x1, -x2, -x3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x1 /= s; x2 /= s; x3 /= s;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o);

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product. Non-commutative: ij = k but ji = -k.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.w * q.x1 + p.x1 * q.w + p.x2 * q.x3 - p.x3 * q.x2,
          p.w * q.x2 - p.x1 * q.x3 + p.x2 * q.w + p.x3 * q.x1,
          p.w * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.w};
}

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x1, -q.x2, -q.x3}; }
constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}
double norm(const Quaternion& q);

struct ConjNorm {
  Quaternion conjugate;
  double modulus;
};
ConjNorm conj_norm(const Quaternion& q);

Quaternion inverse(const Quaternion& q);

/// e^q = e^w (cos|v| + v/|v| sin|v|) with v = Im q.
Quaternion exp(const Quaternion& q);

/// q^n for n >= 0 by repeated squaring.
Quaternion pow(const Quaternion& q, int n);

/// Componentwise |p - q| <= tol * max(1, |p|, |q|).
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = 1e-12);

/// Largest componentwise deviation.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A point of the sphere S of imaginary units (I^2 = -1).
class ImaginaryUnit {
 public:
  ImaginaryUnit() = default;  // i

  /// Normalizes the imaginary part of `q`; throws std::invalid_argument if it vanishes.
  static ImaginaryUnit from(const Quaternion& q);
  /// Spherical parametrization sin(phi)cos(psi) i + sin(phi)sin(psi) j + cos(phi) k.
  static ImaginaryUnit from_angles(double phi, double psi);

  static ImaginaryUnit i() { return {}; }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }

  const Quaternion& quaternion() const { return unit_; }
  operator const Quaternion&() const { return unit_; }  // NOLINT
  ImaginaryUnit operator-() const { return ImaginaryUnit(-unit_); }

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  explicit ImaginaryUnit(const Quaternion& unit) : unit_(unit) {}
  Quaternion unit_ = Quaternion::i();
};

/// q = x + I y with y >= 0. `canonical` marks the real axis, where I is not
/// determined by q and the unit i is used.
struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit;
  bool canonical = false;

  Quaternion reconstruct() const;
};

/// q = r e^{I theta}, theta in [0, 2pi).
struct PolarCoords {
  double r = 0.0;
  double theta = 0.0;
  ImaginaryUnit unit;
  bool canonical = false;

  Quaternion reconstruct() const;
};

SliceCoords slice_decompose(const Quaternion& q);
PolarCoords polar_decompose(const Quaternion& q);

/// x + I y.
Quaternion from_slice(double x, double y, const ImaginaryUnit& unit);
Quaternion from_slice(std::complex<double> z, const ImaginaryUnit& unit);

/// Coordinates of q in C_I when q lies in that slice: (Re q, <Im q, I>).
std::complex<double> to_slice(const Quaternion& q, const ImaginaryUnit& unit);

/// Distance from q to the slice C_I (norm of the components orthogonal to {1, I}).
double slice_deviation(const Quaternion& q, const ImaginaryUnit& unit);

}  // namespace qfock
