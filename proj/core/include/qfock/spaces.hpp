#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qfock/qhermite.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// f = sum_n H_{n,m}(q, qbar) C_n, finitely supported.
class FockCoefficients {
 public:
  FockCoefficients() = default;
  /// Throws std::out_of_range for a level or index outside [0, kMaxDegree].
  FockCoefficients(int level, std::map<int, Quaternion> coeffs);

  static FockCoefficients basis(int level, int n, const Quaternion& c = 1.0);
  /// psi_{m,n} = q^n 1F1(-m; n+1; |q|^2) = ((-1)^m n!/(m+n)!) H_{m+n,m}, n >= 0.
  static FockCoefficients psi(int level, int n);

  int level() const { return level_; }
  const std::map<int, Quaternion>& coeffs() const { return coeffs_; }

  std::string to_json() const;
  static FockCoefficients from_json(std::string_view text);

 private:
  int level_ = 0;
  std::map<int, Quaternion> coeffs_;
};

Quaternion evaluate(const FockCoefficients& f, const Quaternion& q);

/// pi m! sum_n n! |C_n|^2.
double norm_sq(const FockCoefficients& f);

/// int_{C_I} |f|^2 e^{-|q|^2} on the slice of `probe`.
double norm_sq_quadrature(const FockCoefficients& f, const ImaginaryUnit& probe,
                          const SliceGaussianRule& rule = slice_gaussian_rule());

/// q^n 1F1(-m; n+1; |q|^2). Throws std::domain_error for n < 0, where the lower
/// parameter is a nonpositive integer.
Quaternion psi(int m, int n, const Quaternion& q);

/// e_*^{[q, conj(q')]} L_m(|q - q'|^2) / pi, equal to the basis series on every common slice.
Quaternion kernel_closed(int m, const Quaternion& q, const Quaternion& qp, double tol = 1e-15);

/// e_*^{[conj(q), q']} L_m(|q - q'|^2) / pi, the conjugate orientation.
Quaternion kernel_conjugate_form(int m, const Quaternion& q, const Quaternion& qp,
                                 double tol = 1e-15);

/// sum_{n<=N} H_{n,m}(q) H_{m,n}(q') / (pi m! n!).
Quaternion kernel_series(int m, const Quaternion& q, const Quaternion& qp, int N);

/// Certified majorant of the series tail beyond N from the growth estimate.
double kernel_series_tail(int m, const Quaternion& q, const Quaternion& qp, int N);

/// Sum of |terms| of kernel_series.
double kernel_series_abs(int m, const Quaternion& q, const Quaternion& qp, int N);

/// P_m f(q) = int_{C_I} K_m(q, q') f(q') e^{-|q'|^2} over the slice I of q.
Quaternion project(int m, const QuaternionFunction& f, const Quaternion& q,
                   const SliceGaussianRule& rule = slice_gaussian_rule());

/// P_m over the sliced product measure, divided by Area(S) = 4 pi.
Quaternion project_sliced(int m, const QuaternionFunction& f, const Quaternion& q,
                          const SlicedMeasureRule& rule);

struct EvaluationBound {
  double lhs = 0.0;  // |f(q)|
  double rhs = 0.0;  // (e^{|q|^2}/pi)^{1/2} ||f||
  bool holds = false;
};

EvaluationBound evaluation_bound_check(const FockCoefficients& f, const Quaternion& q);

/// Sample points in several slices, 0.3 <= |q| <= 1.5.
std::vector<Quaternion> decomposition_points();

/// max_p |sum_{m<=M} P_m H_{a,b}(p) - H_{a,b}(p)| / max_p |H_{a,b}(p)|.
double hilbert_decomposition_check(int M, int a, int b,
                                   const std::vector<Quaternion>& points = decomposition_points(),
                                   const SliceGaussianRule& rule = slice_gaussian_rule());

struct DivergenceProbe {
  double mu = 0.0;
  int n = 0;
  std::vector<double> T;
  std::vector<double> integral;  // int_0^T t^n |1F1(-mu; n+1; t)|^2 e^{-t} dt
  std::vector<double> growth;    // integral[i] / integral[i-1]
};

/// Composite Gauss-Legendre on unit panels.
DivergenceProbe divergence_probe(double mu, int n, const std::vector<double>& T);

}  // namespace qfock
