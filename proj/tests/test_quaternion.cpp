#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {
namespace {

using testing::rel_dev;

Quaternion random_q(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng), g(rng), g(rng)};
}

TEST(Quaternion, HamiltonTable) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * i, Quaternion(-1.0));
  EXPECT_EQ(i * j * k, Quaternion(-1.0));
}

TEST(Quaternion, ProductIsAssociativeAndNormMultiplicative) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = random_q(rng), b = random_q(rng), c = random_q(rng);
    EXPECT_LT(rel_dev((a * b) * c, a * (b * c)), 1e-14);
    EXPECT_NEAR(norm(a * b), norm(a) * norm(b), 1e-13 * norm(a) * norm(b));
    EXPECT_LT(rel_dev(conj(a * b), conj(b) * conj(a)), 1e-15);
  }
}

TEST(Quaternion, InverseAndConjNorm) {
  const Quaternion q{1.0, -2.0, 0.5, 3.0};
  EXPECT_LT(rel_dev(q * inverse(q), 1.0), 1e-15);
  EXPECT_LT(rel_dev(inverse(q) * q, 1.0), 1e-15);
  const ConjNorm cn = conj_norm(q);
  EXPECT_EQ(cn.conjugate, conj(q));
  EXPECT_DOUBLE_EQ(cn.modulus, std::sqrt(14.25));
}

TEST(Quaternion, ExpOnASliceIsEuler) {
  const ImaginaryUnit I = ImaginaryUnit::from({0.0, 1.0, -2.0, 2.0});
  const Quaternion e = exp(from_slice(0.3, 1.2, I));
  const std::complex<double> z = std::exp(std::complex<double>(0.3, 1.2));
  EXPECT_LT(rel_dev(e, from_slice(z, I)), 1e-15);
  EXPECT_EQ(exp(Quaternion(0.0)), Quaternion(1.0));
}

TEST(Quaternion, PowMatchesRepeatedProduct) {
  const Quaternion q{0.3, -0.7, 0.2, 1.1};
  Quaternion acc = 1.0;
  for (int n = 0; n <= 12; ++n) {
    EXPECT_LT(rel_dev(pow(q, n), acc), 1e-14) << n;
    acc = acc * q;
  }
}

TEST(Quaternion, UnitFromNormalizes) {
  const ImaginaryUnit I = ImaginaryUnit::from({5.0, 0.0, 3.0, 4.0});
  EXPECT_LT(rel_dev(I.quaternion(), {0.0, 0.0, 0.6, 0.8}), 1e-16);
  EXPECT_LT(rel_dev(I.quaternion() * I.quaternion(), -1.0), 1e-15);
  EXPECT_THROW(ImaginaryUnit::from(2.5), std::invalid_argument);
}

TEST(Quaternion, UnitFromAngles) {
  const ImaginaryUnit north = ImaginaryUnit::from_angles(0.0, 1.0);
  EXPECT_LT(rel_dev(north.quaternion(), Quaternion::k()), 1e-16);
  const ImaginaryUnit eq = ImaginaryUnit::from_angles(std::numbers::pi / 2, std::numbers::pi / 2);
  EXPECT_LT(rel_dev(eq.quaternion(), Quaternion::j()), 1e-15);
}

TEST(Quaternion, SliceDecompositionRoundTrips) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_q(rng);
    const SliceCoords s = slice_decompose(q);
    EXPECT_GT(s.y, 0.0);
    EXPECT_FALSE(s.canonical);
    EXPECT_LT(rel_dev(s.reconstruct(), q), 1e-15);
    EXPECT_LT(slice_deviation(q, s.unit), 1e-14 * norm(q));
    const PolarCoords p = polar_decompose(q);
    EXPECT_GE(p.theta, 0.0);
    EXPECT_LT(p.theta, 2 * std::numbers::pi);
    EXPECT_LT(rel_dev(p.reconstruct(), q), 1e-14);
  }
}

TEST(Quaternion, RealAxisUsesCanonicalUnit) {
  const SliceCoords s = slice_decompose(-2.0);
  EXPECT_TRUE(s.canonical);
  EXPECT_EQ(s.unit, ImaginaryUnit::i());
  EXPECT_EQ(s.x, -2.0);
  EXPECT_EQ(s.y, 0.0);
  const PolarCoords p = polar_decompose(-2.0);
  EXPECT_TRUE(p.canonical);
  EXPECT_DOUBLE_EQ(p.r, 2.0);
  EXPECT_DOUBLE_EQ(p.theta, std::numbers::pi);
  const PolarCoords o = polar_decompose(0.0);
  EXPECT_EQ(o.r, 0.0);
  EXPECT_EQ(o.reconstruct(), Quaternion(0.0));
}

TEST(Quaternion, SliceCoordinatesAndDeviation) {
  const ImaginaryUnit I = ImaginaryUnit::j();
  const Quaternion q = from_slice(1.5, -0.5, I);
  EXPECT_EQ(to_slice(q, I), std::complex<double>(1.5, -0.5));
  EXPECT_EQ(slice_deviation(q, I), 0.0);
  EXPECT_DOUBLE_EQ(slice_deviation({0.0, 3.0, 0.0, 4.0}, I), 5.0);
}

TEST(Quaternion, SliceIsACommutativeSubalgebra) {
  const ImaginaryUnit I = ImaginaryUnit::from({0.0, 1.0, 1.0, 1.0});
  const std::complex<double> a(0.4, -1.3), b(-2.0, 0.7);
  const Quaternion p = from_slice(a, I), q = from_slice(b, I);
  EXPECT_LT(rel_dev(p * q, q * p), 1e-15);
  EXPECT_LT(rel_dev(p * q, from_slice(a * b, I)), 1e-15);
}

TEST(Quaternion, ApproxEqualAndPrinting) {
  EXPECT_TRUE(approx_equal({1.0, 2.0, 3.0, 4.0}, {1.0, 2.0, 3.0, 4.0 + 1e-13}));
  EXPECT_FALSE(approx_equal({1.0, 2.0, 3.0, 4.0}, {1.0, 2.0, 3.0, 4.1}));
  EXPECT_DOUBLE_EQ(max_abs_diff({1.0, 2.0, 3.0, 4.0}, {1.0, 2.5, 3.0, 3.0}), 1.0);
  std::ostringstream os;
  os << Quaternion{1.0, -2.0, 0.0, 0.5};
  EXPECT_FALSE(os.str().empty());
}

}  // namespace
}  // namespace qfock
