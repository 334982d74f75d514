#pragma once

#include "qfock/quaternion.hpp"

namespace qfock {

/// Degree cap for every polynomial family; recurrences stay in double range below it.
inline constexpr int kMaxDegree = 64;

/// Throws std::out_of_range unless 0 <= n <= kMaxDegree.
void check_degree(int n, const char* what);

double factorial(int n);

/// Rising factorial (c)_k = c (c+1) ... (c+k-1) as an iterated product.
double pochhammer(double c, int k);

/// Physicists' Hermite polynomial, H_{n+1} = 2t H_n - 2n H_{n-1}.
double hermite_poly(int n, double t);

/// h_n(t) = e^{-t^2/2} H_n(t).
double hermite_fn(int n, double t);

/// ||h_n||^2 = 2^n n! sqrt(pi).
double hermite_fn_norm_sq(int n);

/// Generalized Laguerre L_m^{(alpha)}(t) by the three-term recurrence.
double laguerre(int m, double alpha, double t);

/// 1F1(-m; c; t) as the finite sum over k <= m. Throws std::domain_error when
/// some factor c + k, k < m, of the lower Pochhammer symbol vanishes.
double hyp1f1_terminating(int m, double c, double t);

/// Sum of |terms| of the same finite sum; the natural scale for forward error.
double hyp1f1_terminating_abs(int m, double c, double t);

/// Non-terminating 1F1(a; c; t) by direct summation, t >= 0, c > 0.
double hyp1f1_series(double a, double c, double t);

/// Number of terms N such that sum_{n>N} x^n/n! < tol for x = |a||b|.
int star_exp_terms(double x, double tol);

/// e_*^{[a,b]} = sum_n a^n b^n / n!, truncated so the majorant tail is below tol.
/// Throws std::invalid_argument for tol <= 0.
Quaternion star_exp(const Quaternion& a, const Quaternion& b, double tol = 1e-15);

/// int_R e^{-alpha y^2 + beta y} dy by 80-point Gauss-Hermite, componentwise.
/// Throws std::invalid_argument for alpha <= 0.
Quaternion gaussian_integral(double alpha, const Quaternion& beta);

/// sqrt(pi/alpha) exp(beta^2 / (4 alpha)).
Quaternion gaussian_integral_closed(double alpha, const Quaternion& beta);

}  // namespace qfock
