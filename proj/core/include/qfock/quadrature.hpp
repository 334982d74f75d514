#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

/// Neumaier-compensated accumulator. Summation order is the call order, so
/// a fixed rule gives bit-reproducible results.
template <typename T>
class CompensatedSum {
 public:
  void add(const T& v) {
    if constexpr (std::is_same_v<T, double>) {
      add_scalar(sum_, comp_, v);
    } else {
      add_scalar(sum_.w, comp_.w, v.w);
      add_scalar(sum_.x1, comp_.x1, v.x1);
      add_scalar(sum_.x2, comp_.x2, v.x2);
      add_scalar(sum_.x3, comp_.x3, v.x3);
    }
  }
  T value() const { return sum_ + comp_; }

 private:
  static void add_scalar(double& s, double& c, double v) {
    const double t = s + v;
    c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  T sum_{};
  T comp_{};
};

enum class RuleKind { gauss_hermite, gauss_laguerre, gauss_legendre, uniform_angle };

std::string_view to_string(RuleKind kind);
RuleKind rule_kind_from_string(std::string_view name);

/// Nodes and positive weights for one of:
///   gauss_hermite   weight e^{-t^2} on R, mass sqrt(pi)
///   gauss_laguerre  weight t^alpha e^{-t} on (0, inf), mass Gamma(alpha+1)
///   gauss_legendre  weight 1 on [-1, 1], mass 2
///   uniform_angle   theta_k = 2 pi k / n, mass 2 pi
struct QuadratureRule1D {
  RuleKind kind = RuleKind::gauss_hermite;
  int n = 0;
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  double total_mass() const;

  template <typename F>
  auto integrate(F&& f) const {
    using R = std::decay_t<decltype(f(0.0))>;
    CompensatedSum<R> acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(f(nodes[i]) * weights[i]);
    return acc.value();
  }
};

inline constexpr int kMaxRuleSize = 128;

/// Golub-Welsch on the Jacobi matrix, then Newton-polished nodes and
/// Christoffel-sum weights. Exact for polynomials of degree <= 2n-1.
QuadratureRule1D gauss_hermite(int n);
QuadratureRule1D gauss_laguerre(int n, double alpha);
QuadratureRule1D gauss_legendre(int n);
/// Gauss-Legendre mapped to [a, b].
QuadratureRule1D gauss_legendre(int n, double a, double b);
QuadratureRule1D uniform_angle(int n);

std::string to_json_string(const QuadratureRule1D& rule);
QuadratureRule1D rule_from_json(std::string_view text);

/// Product rule on the unit sphere of imaginary units: Gauss-Legendre in cos(phi)
/// times uniform psi. Weights sum to 4 pi.
struct SphereRule {
  std::vector<ImaginaryUnit> units;
  std::vector<double> weights;

  template <typename F>
  auto integrate(F&& f) const {
    using R = std::decay_t<decltype(f(units.front()))>;
    CompensatedSum<R> acc;
    for (std::size_t i = 0; i < units.size(); ++i) acc.add(f(units[i]) * weights[i]);
    return acc.value();
  }
};

SphereRule sphere_rule(int n_polar = 16, int n_azimuth = 32);

inline constexpr int kDefaultRadialNodes = 40;
inline constexpr int kDefaultAngularNodes = 64;

/// Rule for the slice Gaussian measure e^{-(x^2+y^2)} dx dy on a slice C_I, in
/// the variables t = r^2 (Gauss-Laguerre) and theta (uniform):
///   int f r dr dtheta e^{-r^2} = 1/2 int int f(sqrt(t) e^{I theta}) e^{-t} dt dtheta.
struct SliceGaussianRule {
  QuadratureRule1D radial;
  QuadratureRule1D angular;

  /// Flattened nodes (radial-major) as complex coordinates x + iy and their weights.
  std::vector<std::complex<double>> points() const;
  std::vector<double> point_weights() const;
};

SliceGaussianRule slice_gaussian_rule(int n_r = kDefaultRadialNodes,
                                      int n_theta = kDefaultAngularNodes,
                                      double alpha = 0.0);

using QuaternionFunction = std::function<Quaternion(const Quaternion&)>;

/// int_{C_I} f(x + I y) e^{-(x^2+y^2)} dx dy.
Quaternion slice_gaussian_integrate(const QuaternionFunction& f, const ImaginaryUnit& unit,
                                    const SliceGaussianRule& rule);
Quaternion slice_gaussian_integrate(const QuaternionFunction& f, const ImaginaryUnit& unit,
                                    int n_r = kDefaultRadialNodes,
                                    int n_theta = kDefaultAngularNodes);

/// The factorized measure e^{-r^2} r dr dtheta dsigma(I) over (0,inf) x (0,2pi) x S.
/// Its total mass is pi * 4 pi, not the pi^2 of the Lebesgue-Gaussian measure on R^4.
struct SlicedMeasureRule {
  SliceGaussianRule slice;
  SphereRule sphere;
};

SlicedMeasureRule sliced_measure_rule(int n_r = kDefaultRadialNodes,
                                      int n_theta = kDefaultAngularNodes, int n_polar = 16,
                                      int n_azimuth = 32);

Quaternion sliced_measure_integrate(const QuaternionFunction& f, const SlicedMeasureRule& rule);

}  // namespace qfock
