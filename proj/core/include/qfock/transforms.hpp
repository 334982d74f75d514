#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

inline constexpr int kMaxBargmannLevel = 16;
inline constexpr int kTransformNodes = 80;

enum class DecayClass { none, hermite };

/// An H-valued function on R. With the hermite tag, value(t) = e^{-t^2/2} reduced(t)
/// and reduced has polynomial growth; with none, value(t) = reduced(t).
struct RealLineFunction {
  std::function<Quaternion(double)> reduced;
  DecayClass decay = DecayClass::hermite;

  Quaternion operator()(double t) const;

  static RealLineFunction zero();
  /// h_n(t) c.
  static RealLineFunction hermite(int n, const Quaternion& c = 1.0);
  /// sum_k h_k(t) c_k.
  static RealLineFunction hermite_combination(std::vector<Quaternion> c);
  /// e^{-t^2/2} H_m(-t).
  static RealLineFunction reflected_hermite(int m);
  static RealLineFunction untagged(std::function<Quaternion(double)> f);
};

/// exp(-t^2/2 - qbar^2/2 + sqrt2 qbar t) H_m(sqrt2 Re q - t) / (pi^{3/4} sqrt2^m sqrt(m!)).
Quaternion bargmann_kernel(int m, double t, const Quaternion& q);

/// sum_{n<=N} h_n(t) H_{m,n}(q) / (||h_n|| ||H_{m,n}||).
Quaternion bargmann_kernel_series(int m, double t, const Quaternion& q, int N);

/// int |A_m(t; q)|^2 dt by Gauss-Hermite centred at sqrt2 Re q.
double bargmann_kernel_norm_sq(int m, const Quaternion& q);

/// int A_m(t; q) phi(t) dt. Throws std::invalid_argument unless phi is hermite-class.
Quaternion bargmann_transform(int m, const RealLineFunction& phi, const Quaternion& q);

/// ||h_n|| / ||H_{m,n}|| = 2^{n/2} pi^{-1/4} / sqrt(m!).
double bargmann_basis_constant(int m, int n);

double l2_norm(const RealLineFunction& phi);

/// (1/sqrt(2 pi)) int e^{I y t} f(t + x/2) g(t - x/2) dt, factors in this order.
Quaternion fourier_wigner(const RealLineFunction& f, const RealLineFunction& g,
                          const ImaginaryUnit& unit, double x, double y);

/// l_i ~ r_i c with one right-multiplied constant.
struct ConstantFit {
  Quaternion constant;
  double spread = 0.0;  // max |l_i - r_i c| / max |l_i|
};

ConstantFit fit_right_constant(const std::vector<Quaternion>& lhs, const std::vector<Quaternion>& rhs);

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
};

/// n x n points spanning [lo, hi]^2.
std::vector<GridPoint> square_grid(int n = 5, double lo = -1.0, double hi = 1.0);

enum class WignerGaussian { as_stated, as_derived };

/// (-1)^n sqrt2^{m+n-1} G(q) H_{m,n}(q/sqrt2), G = e^{-|q|^2/2} as stated or e^{-|q|^2/4}.
Quaternion fw_hermite_closed(int m, int n, const Quaternion& q, WignerGaussian g);

struct GridComparison {
  std::vector<Quaternion> lhs;
  std::vector<Quaternion> rhs;
  ConstantFit fit;
};

GridComparison fw_hermite_check(int m, int n, const ImaginaryUnit& unit,
                                const std::vector<GridPoint>& grid, WignerGaussian g);

/// V_I(f, e^{-t^2/2} H_m(-t))(x + I y) against
/// sqrt(pi) m! 2^{(m-1)/2} e^{-|q|^2/4} [B_m f](conj(q / sqrt2)).
GridComparison fw_bargmann_relation_check(int m, const RealLineFunction& f, const ImaginaryUnit& unit,
                                          const std::vector<GridPoint>& grid);

/// B_m h_n against H_{m,n} on the given points.
GridComparison bargmann_basis_image_check(int m, int n, const std::vector<Quaternion>& points);

/// CSV rows m,n,c_w,c_x1,c_x2,c_x3,printed_constant,ratio with header, ratio = |c| / printed_constant, printed_constant = sqrt2^{m-1} / pi.
std::string fitted_constants_csv(int max_m, int max_n, const std::vector<Quaternion>& points);

}  // namespace qfock
