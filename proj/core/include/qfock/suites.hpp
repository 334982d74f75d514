#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qfock/quaternion.hpp"
#include "qfock/report.hpp"
#include "qfock/transforms.hpp"

namespace qfock {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

/// Uniform samples from the ball |q| <= radius in R^4.
std::vector<Quaternion> random_ball(std::size_t count, double radius, std::uint64_t seed);

/// Uniform samples from the sphere of imaginary units.
std::vector<ImaginaryUnit> random_units(std::size_t count, std::uint64_t seed);

/// Default off-axis unit for single-slice suites, (i - 2j + 2k)/3.
ImaginaryUnit default_unit();

struct OrthogonalityParams {
  int max_index = 8;
  double tol = 1e-10;
  int n_r = 40;
  int n_theta = 64;
  ImaginaryUnit unit = default_unit();
};

struct RoutesParams {
  int max_index = 12;
  std::size_t samples = 1000;
  double radius = 3.0;
  double tol = 1e-11;
  std::uint64_t seed = kDefaultSeed;
};

struct LandauParams {
  int max_n = 8;
  int max_m = 6;
  double h = 1e-2;
  double ratio_lo = 3.5;
  double ratio_hi = 4.5;
  std::vector<double> radii = {0.5, 1.0, 1.5, 2.0, 2.5};
  int n_angles = 7;
  double floor_factor = 64.0;  // rounding floor floor_factor * eps / h^2
  ImaginaryUnit unit = default_unit();
};

struct KernelParams {
  int max_m = 5;
  int terms = 60;
  double radius = 2.0;
  std::size_t samples = 100;
  double tol_diagonal = 1e-9;
  double tol_closed = 1e-8;
  std::uint64_t seed = kDefaultSeed + 1;
};

struct ReproductionParams {
  int max_a = 6;
  int max_level = 6;
  std::vector<Quaternion> points;  // empty: decomposition_points()
  double tol = 1e-8;
  int n_r = 40;
  int n_theta = 64;
};

struct BargmannParams {
  int max_m = 6;
  double radius = 2.0;
  std::size_t norm_samples = 20;
  double tol_norm = 1e-10;
  std::size_t bound_samples = 100;
  int bound_degree = 8;
  int basis_max_m = 5;
  int basis_max_n = 5;
  double tol_fit = 1e-8;
  std::uint64_t seed = kDefaultSeed + 2;
};

struct WignerParams {
  int max_index = 6;
  std::vector<GridPoint> grid = square_grid(5, -1.0, 1.0);
  ImaginaryUnit unit = default_unit();
  double tol_spread = 1e-8;
  double tol_origin = 1e-12;
  int connection_max_m = 4;
};

struct DivergenceParams {
  double mu = 0.5;
  int n = 20;
  std::vector<double> T = {20.0, 30.0, 40.0};
  double threshold = 10.0;
  std::vector<double> diagnostic_T = {40.0, 60.0};
};

struct GenFnParams {
  int max_m = 5;
  std::vector<double> xs = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::size_t samples = 20;
  double radius = 1.0;
  double tol = 1e-9;
  double tail_tol = 1e-10;
  std::uint64_t seed = kDefaultSeed + 3;
};

struct CrossSliceParams {
  int max_m = 3;
  std::size_t samples = 10;
  int n_r = 20;
  int n_theta = 32;
  int n_polar = 8;
  int n_azimuth = 16;
  std::uint64_t seed = kDefaultSeed + 4;
};

VerificationReport orthogonality_suite(const OrthogonalityParams& p = {});
VerificationReport routes_suite(const RoutesParams& p = {});
VerificationReport landau_suite(const LandauParams& p = {});
VerificationReport kernel_suite(const KernelParams& p = {});
VerificationReport reproduction_suite(const ReproductionParams& p = {});
VerificationReport bargmann_suite(const BargmannParams& p = {});
VerificationReport wigner_suite(const WignerParams& p = {});
VerificationReport divergence_suite(const DivergenceParams& p = {});
VerificationReport genfn_suite(const GenFnParams& p = {});
/// Measured only; every case has asserted == false.
VerificationReport cross_slice_suite(const CrossSliceParams& p = {});

/// Suite names in acceptance order, then cross-slice.
const std::vector<std::string>& suite_names();

/// Runs one suite with default parameters, or every suite for "all".
/// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name);

}  // namespace qfock
