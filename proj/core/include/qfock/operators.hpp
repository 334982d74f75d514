#pragma once

#include <functional>

#include "qfock/quaternion.hpp"

namespace qfock {

/// f restricted to the slice C_I, as a function of (x, y).
using SliceFunction = std::function<Quaternion(double x, double y, const ImaginaryUnit& unit)>;

/// f on C_I in polar coordinates (r, theta).
using PolarFunction = std::function<Quaternion(double r, double theta, const ImaginaryUnit& unit)>;

/// Central second-order differences with step h in [1e-6, 1e-1].
struct StencilConfig {
  double h = 1e-4;

  void validate() const;
};

/// (1/2)(d_x - I_q d_y) f at q. On the real axis, d/dx in the canonical slice.
Quaternion slice_deriv(const SliceFunction& f, const Quaternion& q, const StencilConfig& cfg = {});

/// (1/2)(d_x + I_q d_y) f at q. On the real axis, d/dx in the canonical slice.
Quaternion slice_deriv_conj(const SliceFunction& f, const Quaternion& q,
                            const StencilConfig& cfg = {});

/// -(1/4)(d_x^2 + d_y^2) f + (1/2)(x d_x + y d_y) f + (I/2)(x d_y - y d_x) f on the slice of q.
/// Throws std::invalid_argument for real q.
Quaternion laplacian_cartesian(const SliceFunction& f, const Quaternion& q,
                               const StencilConfig& cfg = {});

/// -(1/4)(d_r^2 + (1/r - 2r) d_r + r^{-2} d_theta^2 - 2 I d_theta) f.
/// Throws std::domain_error when r <= h.
Quaternion laplacian_polar(const PolarFunction& f, const Quaternion& q,
                           const StencilConfig& cfg = {});

/// laplacian_cartesian off the real axis; -f'' + x f' on it.
Quaternion laplacian_unified(const SliceFunction& f, const Quaternion& q,
                             const StencilConfig& cfg = {});

/// Principal part -(1/4)(1+chi)^2 d_x^2 - (1/4)(1-chi)^2 d_y^2 of the unified form,
/// chi the indicator of the real axis. Its coefficients are the symbol's eigenvalues.
struct PrincipalPart {
  double xx = 0.0;
  double yy = 0.0;
};

PrincipalPart principal_part(const Quaternion& q);

/// Lift a function of q to slice form.
SliceFunction as_slice_function(std::function<Quaternion(const Quaternion&)> f);

}  // namespace qfock
