#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "qfock/qhermite.hpp"
#include "qfock/spaces.hpp"
#include "qfock/special.hpp"
#include "qfock/suites.hpp"
#include "qfock/transforms.hpp"

namespace qfock {
namespace {

using testing::load_fixture;
using testing::rel_dev;

constexpr double kPi = std::numbers::pi;

TEST(Transforms, RealLineFunctionTags) {
  const RealLineFunction h2 = RealLineFunction::hermite(2, Quaternion::j());
  EXPECT_LT(rel_dev(h2(0.7), Quaternion::j() * hermite_fn(2, 0.7)), 1e-15);
  EXPECT_EQ(RealLineFunction::zero()(1.0), Quaternion(0.0));
  const RealLineFunction combo = RealLineFunction::hermite_combination({1.0, Quaternion::k()});
  EXPECT_LT(rel_dev(combo(0.3), hermite_fn(0, 0.3) + Quaternion::k() * hermite_fn(1, 0.3)), 1e-15);
  const RealLineFunction r = RealLineFunction::reflected_hermite(3);
  EXPECT_NEAR(r(0.4).w, std::exp(-0.08) * hermite_poly(3, -0.4), 1e-15);
  const RealLineFunction u = RealLineFunction::untagged([](double t) { return Quaternion(t); });
  EXPECT_EQ(u.decay, DecayClass::none);
  EXPECT_EQ(u(2.0), Quaternion(2.0));
}

TEST(Transforms, KernelNormIsLevelIndependent) {
  const Quaternion q{0.9, 0.3, -0.8, 0.1};
  for (int m = 0; m <= 6; ++m)
    EXPECT_NEAR(bargmann_kernel_norm_sq(m, q) / (std::exp(norm_sq(q)) / kPi), 1.0, 1e-12) << m;
}

TEST(Transforms, KernelMatchesBasisExpansion) {
  const Quaternion q{0.3, 0.0, 0.4, 0.2};
  for (int m = 0; m <= 3; ++m)
    for (double t : {-1.0, 0.2, 1.5}) {
      const Quaternion closed = bargmann_kernel(m, t, q);
      EXPECT_LT(max_abs_diff(closed, bargmann_kernel_series(m, t, q, 60)), 1e-11) << m << " " << t;
    }
}

TEST(Transforms, BasisImage) {
  const Quaternion q{-0.4, 0.5, 0.5, -0.3};
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const Quaternion image = bargmann_transform(m, RealLineFunction::hermite(n), q);
      const Quaternion expected = qhermite(m, n, q) * bargmann_basis_constant(m, n);
      EXPECT_LT(max_abs_diff(image, expected) / std::max(1.0, norm(expected)), 1e-11) << m << "," << n;
    }
}

TEST(Transforms, TransformIsRightLinear) {
  const Quaternion q{0.2, 0.1, 0.7, 0.0};
  const Quaternion c{0.0, 1.0, 0.0, -1.0};
  const Quaternion a = bargmann_transform(2, RealLineFunction::hermite(1, c), q);
  const Quaternion b = bargmann_transform(2, RealLineFunction::hermite(1), q) * c;
  EXPECT_LT(max_abs_diff(a, b), 1e-13);
}

TEST(Transforms, RejectsUnboundedInput) {
  const RealLineFunction u = RealLineFunction::untagged([](double t) { return Quaternion(std::exp(t * t)); });
  EXPECT_THROW(bargmann_transform(0, u, 0.5), std::invalid_argument);
  EXPECT_THROW(bargmann_transform(kMaxBargmannLevel + 1, RealLineFunction::hermite(0), 0.5), std::out_of_range);
}

TEST(Transforms, L2Norm) {
  for (int n = 0; n <= 6; ++n) EXPECT_NEAR(l2_norm(RealLineFunction::hermite(n)), std::sqrt(hermite_fn_norm_sq(n)), 1e-10);
}

TEST(Transforms, FourierWignerMatchesHighPrecisionQuadrature) {
  for (const auto& c : load_fixture("wigner.json")) {
    const ImaginaryUnit I = ImaginaryUnit::from({0.0, 2.0, 1.0, -2.0});
    const Quaternion v = fourier_wigner(RealLineFunction::hermite(c.at("m")), RealLineFunction::hermite(c.at("n")), I,
                                        c.at("x"), c.at("y"));
    const Quaternion expected = from_slice(c.at("re").get<double>(), c.at("im").get<double>(), I);
    EXPECT_LT(rel_dev(v, expected), 1e-13) << c.dump();
  }
}

TEST(Transforms, FourierWignerOriginValue) {
  const Quaternion v = fourier_wigner(RealLineFunction::hermite(0), RealLineFunction::hermite(0), default_unit(), 0.0, 0.0);
  EXPECT_NEAR(v.w, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Transforms, FourierWignerQuarterGaussianIsExact) {
  const auto grid = square_grid();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const GridComparison c = fw_hermite_check(m, n, default_unit(), grid, WignerGaussian::as_derived);
      EXPECT_LT(c.fit.spread, 1e-12) << m << "," << n;
      EXPECT_LT(rel_dev(c.fit.constant, 1.0), 1e-12) << m << "," << n;
    }
}

TEST(Transforms, FourierWignerHalfGaussianLeavesRadialFactor) {
  // With e^{-|q|^2/2} the ratio varies like e^{|q|^2/4}; no constant fits.
  const GridComparison c = fw_hermite_check(0, 0, default_unit(), square_grid(), WignerGaussian::as_stated);
  EXPECT_GT(c.fit.spread, 0.05);
}

TEST(Transforms, FitRightConstant) {
  const Quaternion c{0.5, -1.0, 0.0, 2.0};
  std::vector<Quaternion> r = {{1.0, 2.0, 0.0, 0.0}, {0.0, 0.3, 1.0, -1.0}, {-2.0, 0.0, 0.0, 0.5}}, l;
  for (const Quaternion& x : r) l.push_back(x * c);
  const ConstantFit fit = fit_right_constant(l, r);
  EXPECT_LT(rel_dev(fit.constant, c), 1e-15);
  EXPECT_LT(fit.spread, 1e-15);
}

TEST(Transforms, SquareGrid) {
  const auto g = square_grid(3, -1.0, 1.0);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front().x, -1.0);
  EXPECT_EQ(g.back().y, 1.0);
}

TEST(Transforms, BargmannConnectionHoldsUpToConstant) {
  for (int m = 0; m <= 3; ++m) {
    const GridComparison c =
        fw_bargmann_relation_check(m, RealLineFunction::hermite(1), default_unit(), square_grid());
    EXPECT_LT(c.fit.spread, 1e-8) << m;
  }
}

TEST(Transforms, FittedConstantTable) {
  const std::string csv = fitted_constants_csv(1, 1, decomposition_points());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,n,c_w,c_x1,c_x2,c_x3,printed_constant,ratio");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
}  // namespace qfock
