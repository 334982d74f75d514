#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

/// Index pair of H_{m,n}; both in [0, kMaxDegree].
struct QHermiteIndex {
  int m = 0;
  int n = 0;
};

/// Validates the index pair; throws std::out_of_range.
QHermiteIndex make_index(int m, int n);

/// m! n! sum_j (-1)^j / j! q^{m-j} qbar^{n-j} / ((m-j)! (n-j)!) in quaternion arithmetic.
Quaternion qhermite_direct(int m, int n, const Quaternion& q);

struct PolarResult {
  Quaternion value;
  bool fell_back = false;  // |q| below kPolarCutoff; value came from the direct route
};

inline constexpr double kPolarCutoff = 1e-8;

/// c_{m,n} r^{|m-n|} e^{(m-n) I theta} 1F1(-min(m,n); |m-n|+1; r^2).
PolarResult qhermite_polar(int m, int n, const Quaternion& q);

/// Complex Hermite recurrences in the slice of q, mapped back to H.
Quaternion qhermite_recurrence(int m, int n, const Quaternion& q);

/// Default route.
inline Quaternion qhermite(int m, int n, const Quaternion& q) { return qhermite_recurrence(m, n, q); }

/// Table T[a][b] = H_{a,b}(z, zbar) for a <= max_m, b <= max_n on a complex slice.
std::vector<std::vector<std::complex<double>>> qhermite_table(int max_m, int max_n,
                                                              std::complex<double> z);

/// Sum of |terms| of the direct sum at q.
double qhermite_abs_scale(int m, int n, const Quaternion& q);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// |H_{n+k,n}(q)| <= ((n+k)!/k!) |q|^k e^{|q|^2/2}.
BoundCheck qhermite_bound_check(int n, int k, const Quaternion& q);

/// Real-coefficient H_n evaluated by the three-term recurrence in the slice of q.
Quaternion hermite_poly(int n, const Quaternion& q);

/// Certified majorant of sum_{n>N} |H_n(x)| |H_{m,n}(q)| / n!, from Cramer's
/// inequality |H_n(x)| <= 1.086435 sqrt(2^n n!) e^{x^2/2} and the growth estimate.
double bilateral_genfn_tail(int m, double x, const Quaternion& q, int N);

/// Smallest N in [m, kMaxDegree] whose certified tail is below tol; throws std::runtime_error.
int bilateral_genfn_terms(int m, double x, const Quaternion& q, double tol = 1e-10);

struct GenFnCheck {
  Quaternion lhs;  // sum_{n<=N} H_n(x) H_{m,n}(q) / n!
  Quaternion rhs;  // e^{-qbar^2 + 2x qbar} H_m(qbar + q/2 - x)
  double tail = 0.0;
  double scale = 0.0;  // sum of |terms| on the left
};

GenFnCheck bilateral_genfn_check(int m, double x, const Quaternion& q, int N);

/// Polynomial sum c_{a,b} x^a y^b on the slice C_i with complex coefficients.
class SlicePolynomial {
 public:
  using Key = std::pair<int, int>;

  static SlicePolynomial monomial(int m, int n);  // z^m zbar^n expanded in x, y

  SlicePolynomial& operator+=(const SlicePolynomial& o);
  SlicePolynomial scaled(std::complex<double> s) const;
  SlicePolynomial operator*(const SlicePolynomial& o) const;

  /// -d^2/(dq dqbar) = -(1/4)(d_x^2 + d_y^2).
  SlicePolynomial neg_wirtinger_laplacian() const;
  /// exp(-d^2/(dq dqbar)); the series terminates on polynomials.
  SlicePolynomial exp_neg_wirtinger_laplacian() const;

  std::complex<double> operator()(std::complex<double> z) const;
  double max_abs_diff(const SlicePolynomial& o) const;
  const std::map<Key, std::complex<double>>& coefficients() const { return c_; }

 private:
  std::map<Key, std::complex<double>> c_;
};

/// The direct sum expanded in x, y.
SlicePolynomial qhermite_slice_polynomial(int m, int n);

}  // namespace qfock
