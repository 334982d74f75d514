#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "qfock/spaces.hpp"
#include "qfock/special.hpp"

namespace qfock {
namespace {

using testing::load_fixture;
using testing::quaternion_from;
using testing::rel_dev;

constexpr double kPi = std::numbers::pi;

TEST(Spaces, CoefficientValidation) {
  EXPECT_THROW(FockCoefficients(-1, {}), std::out_of_range);
  EXPECT_THROW(FockCoefficients(0, {{kMaxDegree + 1, 1.0}}), std::out_of_range);
  EXPECT_THROW(FockCoefficients::basis(2, -1), std::out_of_range);
}

TEST(Spaces, BasisEvaluationRightMultiplies) {
  const Quaternion q{0.2, 0.7, -0.1, 0.4};
  const Quaternion c{0.0, 0.0, 1.0, 0.0};
  const FockCoefficients f = FockCoefficients::basis(2, 3, c);
  EXPECT_LT(rel_dev(evaluate(f, q), qhermite(3, 2, q) * c), 1e-14);
  EXPECT_GT(max_abs_diff(evaluate(f, q), c * qhermite(3, 2, q)), 1e-3);
}

TEST(Spaces, NormFormulaMatchesQuadrature) {
  const FockCoefficients f(2, {{0, {1.0, 0.0, 0.5, 0.0}}, {3, {0.0, -1.0, 0.0, 2.0}}, {5, 0.25}});
  const double closed = norm_sq(f);
  EXPECT_NEAR(closed, kPi * 2 * (1.25 * 1 + 5.0 * 6 + 0.0625 * 120), 1e-12 * closed);
  EXPECT_NEAR(norm_sq_quadrature(f, ImaginaryUnit::from({0.0, 1.0, 1.0, 0.0})) / closed, 1.0, 1e-12);
}

TEST(Spaces, PsiIsRescaledBasis) {
  const Quaternion q{0.3, -0.5, 0.2, 0.6};
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const Quaternion direct = psi(m, n, q);
      const Quaternion via = evaluate(FockCoefficients::psi(m, n), q);
      EXPECT_LT(rel_dev(direct, via), 1e-13) << m << "," << n;
    }
  EXPECT_THROW(psi(2, -1, q), std::domain_error);
}

TEST(Spaces, JsonRoundTrip) {
  const FockCoefficients f(3, {{1, {1.0, 2.0, 3.0, 4.0}}, {4, {-0.5, 0.0, 0.0, 1e-17}}});
  const FockCoefficients back = FockCoefficients::from_json(f.to_json());
  EXPECT_EQ(back.level(), 3);
  EXPECT_EQ(back.coeffs(), f.coeffs());
  EXPECT_THROW(FockCoefficients::from_json(R"({"m":1,"coeffs":[{"n":0,"w":1,"x1":0,"x2":0,"x3":0},)"
                                           R"({"n":0,"w":2,"x1":0,"x2":0,"x3":0}]})"),
               std::invalid_argument);
}

TEST(Spaces, KernelAtOriginAndDiagonal) {
  EXPECT_NEAR(kernel_closed(0, 0.0, 0.0).w, 1.0 / kPi, 1e-16);
  const Quaternion q{0.5, 1.0, -0.5, 0.3};
  for (int m = 0; m <= 5; ++m) {
    const Quaternion k = kernel_closed(m, q, q);
    EXPECT_LT(rel_dev(k, std::exp(norm_sq(q)) / kPi), 1e-14) << m;
  }
}

TEST(Spaces, KernelMatchesHighPrecisionOracle) {
  for (const auto& c : load_fixture("kernel.json")) {
    const int m = c.at("m");
    const Quaternion q = quaternion_from(c.at("q")), qp = quaternion_from(c.at("qprime"));
    const Quaternion expected = quaternion_from(c.at("value"));
    EXPECT_LT(rel_dev(kernel_closed(m, q, qp), expected), 1e-13) << m;
    EXPECT_LT(max_abs_diff(kernel_series(m, q, qp, 60), expected) / kernel_series_abs(m, q, qp, 60), 1e-13) << m;
  }
}

TEST(Spaces, PrintedOrientationIsTheAdjoint) {
  // On a common slice the conjugate orientation is K_m(q', q) = conj K_m(q, q').
  const ImaginaryUnit I = ImaginaryUnit::from({0.0, 0.3, 0.4, 1.2});
  const Quaternion q = from_slice(0.4, 0.9, I), qp = from_slice(-0.7, 0.2, I);
  for (int m = 0; m <= 3; ++m) {
    const Quaternion printed = kernel_conjugate_form(m, q, qp);
    EXPECT_LT(rel_dev(printed, kernel_closed(m, qp, q)), 1e-14);
    EXPECT_LT(rel_dev(printed, conj(kernel_closed(m, q, qp))), 1e-14);
    EXPECT_GT(max_abs_diff(printed, kernel_series(m, q, qp, 60)), 1e-3);
  }
}

TEST(Spaces, KernelSeriesTailIsCertified) {
  const Quaternion q{0.8, 0.6, 0.0, 0.0}, qp{-0.2, 0.9, 0.0, 0.0};
  for (int m = 0; m <= 3; ++m)
    for (int N : {10, 20, 30}) {
      const double actual = max_abs_diff(kernel_series(m, q, qp, N), kernel_closed(m, q, qp));
      EXPECT_LE(actual, kernel_series_tail(m, q, qp, N) + 1e-15) << m << " " << N;
    }
}

TEST(Spaces, HermitianSymmetryOnASlice) {
  const ImaginaryUnit I = ImaginaryUnit::k();
  const Quaternion q = from_slice(0.1, -0.6, I), qp = from_slice(1.2, 0.3, I);
  for (int m = 0; m <= 4; ++m)
    EXPECT_LT(rel_dev(kernel_closed(m, q, qp), conj(kernel_closed(m, qp, q))), 1e-14);
}

TEST(Spaces, ProjectionReproducesAndAnnihilates) {
  const Quaternion q{0.4, -0.2, 0.7, 0.1};
  for (int m = 0; m <= 3; ++m)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const Quaternion p = project(m, [=](const Quaternion& x) { return qhermite(a, b, x); }, q);
        const Quaternion expected = b == m ? qhermite(a, b, q) : Quaternion(0.0);
        EXPECT_LT(max_abs_diff(p, expected), 1e-10) << m << " " << a << " " << b;
      }
}

TEST(Spaces, SlicedProjectionReproducesSliceRegularPowers) {
  // At level 0 the kernel reproduces q^a from every slice, so the sphere average does too.
  const SlicedMeasureRule rule = sliced_measure_rule(30, 32, 8, 16);
  const Quaternion q{0.4, 0.0, 0.0, 0.6};
  for (int a = 0; a <= 3; ++a) {
    auto f = [a](const Quaternion& x) { return pow(x, a); };
    EXPECT_LT(max_abs_diff(project_sliced(0, f, q, rule), pow(q, a)), 1e-10) << a;
  }
}

TEST(Spaces, EvaluationBound) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 30; ++t) {
    std::map<int, Quaternion> c;
    for (int n = 0; n <= 5; ++n) c[n] = {g(rng), g(rng), g(rng), g(rng)};
    const FockCoefficients f(t % 4, c);
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    EXPECT_TRUE(evaluation_bound_check(f, q).holds);
  }
}

TEST(Spaces, HilbertDecompositionRecoversPolynomials) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) EXPECT_LT(hilbert_decomposition_check(3, a, b), 1e-9) << a << "," << b;
  EXPECT_THROW(hilbert_decomposition_check(1, 2, 2), std::invalid_argument);
}

TEST(Spaces, DivergenceProbeMatchesHighPrecisionOracle) {
  const auto fx = load_fixture("divergence.json");
  std::vector<double> T;
  for (const auto& row : fx.at("rows")) T.push_back(row.at("T"));
  const DivergenceProbe p = divergence_probe(fx.at("mu"), fx.at("n"), T);
  ASSERT_EQ(p.integral.size(), T.size());
  ASSERT_EQ(p.growth.size(), T.size() - 1);
  for (std::size_t i = 0; i < T.size(); ++i)
    EXPECT_NEAR(p.integral[i] / fx.at("rows")[i].at("integral").get<double>(), 1.0, 1e-10) << T[i];
}

TEST(Spaces, DecompositionPointsSpanSeveralSlices) {
  const auto pts = decomposition_points();
  EXPECT_GE(pts.size(), 6u);
  for (const Quaternion& p : pts) {
    EXPECT_GE(norm(p), 0.3 - 1e-12);
    EXPECT_LE(norm(p), 1.5 + 1e-12);
  }
}

}  // namespace
}  // namespace qfock
