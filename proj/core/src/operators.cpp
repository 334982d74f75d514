#include "qfock/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qfock {

void StencilConfig::validate() const {
  if (!(h >= 1e-6 && h <= 1e-1)) throw std::invalid_argument("StencilConfig: h must lie in [1e-6, 1e-1]");
}

namespace {

struct Partials {
  Quaternion f, fx, fy, fxx, fyy;
};

Partials partials(const SliceFunction& f, double x, double y, const ImaginaryUnit& unit, double h) {
  const Quaternion c = f(x, y, unit);
  const Quaternion xp = f(x + h, y, unit);
  const Quaternion xm = f(x - h, y, unit);
  const Quaternion yp = f(x, y + h, unit);
  const Quaternion ym = f(x, y - h, unit);
  const double h2 = h * h;
  return {c, (xp - xm) / (2.0 * h), (yp - ym) / (2.0 * h), (xp - 2.0 * c + xm) / h2,
          (yp - 2.0 * c + ym) / h2};
}

Quaternion wirtinger(const SliceFunction& f, const Quaternion& q, const StencilConfig& cfg,
                     double sign) {
  cfg.validate();
  const SliceCoords s = slice_decompose(q);
  const Partials p = partials(f, s.x, s.y, s.unit, cfg.h);
  if (s.canonical) return p.fx;
  return 0.5 * (p.fx + sign * (s.unit.quaternion() * p.fy));
}

}  // namespace

Quaternion slice_deriv(const SliceFunction& f, const Quaternion& q, const StencilConfig& cfg) {
  return wirtinger(f, q, cfg, -1.0);
}

Quaternion slice_deriv_conj(const SliceFunction& f, const Quaternion& q, const StencilConfig& cfg) {
  return wirtinger(f, q, cfg, 1.0);
}

Quaternion laplacian_cartesian(const SliceFunction& f, const Quaternion& q,
                               const StencilConfig& cfg) {
  cfg.validate();
  const SliceCoords s = slice_decompose(q);
  if (s.canonical) throw std::invalid_argument("laplacian_cartesian: q must not be real");
  const Partials p = partials(f, s.x, s.y, s.unit, cfg.h);
  return -0.25 * (p.fxx + p.fyy) + 0.5 * (s.x * p.fx + s.y * p.fy) +
         0.5 * (s.unit.quaternion() * (s.x * p.fy - s.y * p.fx));
}

Quaternion laplacian_polar(const PolarFunction& f, const Quaternion& q, const StencilConfig& cfg) {
  cfg.validate();
  const PolarCoords pc = polar_decompose(q);
  const double h = cfg.h;
  if (pc.r <= h) throw std::domain_error("laplacian_polar: stencil crosses the real axis (r <= h)");
  const double r = pc.r;
  const double t = pc.theta;
  const Quaternion c = f(r, t, pc.unit);
  const Quaternion rp = f(r + h, t, pc.unit);
  const Quaternion rm = f(r - h, t, pc.unit);
  const Quaternion tp = f(r, t + h, pc.unit);
  const Quaternion tm = f(r, t - h, pc.unit);
  const Quaternion fr = (rp - rm) / (2.0 * h);
  const Quaternion frr = (rp - 2.0 * c + rm) / (h * h);
  const Quaternion ft = (tp - tm) / (2.0 * h);
  const Quaternion ftt = (tp - 2.0 * c + tm) / (h * h);
  return -0.25 * (frr + (1.0 / r - 2.0 * r) * fr + ftt / (r * r) -
                  2.0 * (pc.unit.quaternion() * ft));
}

Quaternion laplacian_unified(const SliceFunction& f, const Quaternion& q,
                             const StencilConfig& cfg) {
  cfg.validate();
  const SliceCoords s = slice_decompose(q);
  if (!s.canonical) return laplacian_cartesian(f, q, cfg);
  const Partials p = partials(f, s.x, 0.0, s.unit, cfg.h);
  // no d_y^2 term: the principal part degenerates on the real axis
  return -p.fxx + s.x * p.fx;
}

PrincipalPart principal_part(const Quaternion& q) {
  const double chi = q.is_real() ? 1.0 : 0.0;
  return {-0.25 * (1.0 + chi) * (1.0 + chi), -0.25 * (1.0 - chi) * (1.0 - chi)};
}

SliceFunction as_slice_function(std::function<Quaternion(const Quaternion&)> f) {
  return [f = std::move(f)](double x, double y, const ImaginaryUnit& unit) {
    return f(from_slice(x, y, unit));
  };
}

}  // namespace qfock
