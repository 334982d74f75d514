#include "qfock/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qfock/operators.hpp"
#include "qfock/parallel.hpp"
#include "qfock/qhermite.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/spaces.hpp"
#include "qfock/special.hpp"

namespace qfock {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string pair_id(const char* name, int a, int b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple_id(const char* name, int a, int b, int c) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

template <typename... Args>
std::string note(Args&&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

using ComplexTable = std::vector<std::vector<std::complex<double>>>;

}  // namespace

std::vector<Quaternion> random_ball(std::size_t count, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Quaternion> out;
  out.reserve(count);
  while (out.size() < count) {
    const Quaternion d{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm(d);
    if (n == 0.0) continue;
    out.push_back(d * (radius * std::pow(uni(rng), 0.25) / n));
  }
  return out;
}

std::vector<ImaginaryUnit> random_units(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<ImaginaryUnit> out;
  out.reserve(count);
  while (out.size() < count) {
    const Quaternion d{0.0, gauss(rng), gauss(rng), gauss(rng)};
    if (norm(d) == 0.0) continue;
    out.push_back(ImaginaryUnit::from(d));
  }
  return out;
}

ImaginaryUnit default_unit() { return ImaginaryUnit::from({0.0, 1.0, -2.0, 2.0}); }

VerificationReport orthogonality_suite(const OrthogonalityParams& p) {
  VerificationReport report("orthogonality");
  const int K = p.max_index + 1;
  const SliceGaussianRule rule = slice_gaussian_rule(p.n_r, p.n_theta);
  const auto pts = rule.points();
  const auto w = rule.point_weights();
  std::vector<ComplexTable> tables(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { tables[i] = qhermite_table(p.max_index, p.max_index, pts[i]); });

  // G[(m,n),(m',n')] = int conj(H_{m,n}) H_{m',n'} on the slice
  const int dim = K * K;
  std::vector<std::complex<double>> gram(static_cast<std::size_t>(dim) * dim);
  parallel_for(static_cast<std::size_t>(dim), [&](std::size_t row) {
    const int m = static_cast<int>(row) / K;
    const int n = static_cast<int>(row) % K;
    for (int col = 0; col < dim; ++col) {
      const int m2 = col / K;
      const int n2 = col % K;
      CompensatedSum<double> re;
      CompensatedSum<double> im;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::complex<double> v = std::conj(tables[i][m][n]) * tables[i][m2][n2] * w[i];
        re.add(v.real());
        im.add(v.imag());
      }
      gram[row * dim + col] = {re.value(), im.value()};
    }
  });

  auto expected = [](int m, int n) { return kPi * factorial(m) * factorial(n); };
  for (int row = 0; row < dim; ++row) {
    const int m = row / K;
    const int n = row % K;
    const std::complex<double> d = gram[static_cast<std::size_t>(row) * dim + row];
    const double e = expected(m, n);
    report.add(pair_id("diag", m, n), from_slice(d, p.unit), Quaternion(e), std::abs(d - e) / e, p.tol);
  }
  for (int row = 0; row < dim; ++row) {
    const int m = row / K;
    const int n = row % K;
    double worst = 0.0;
    std::complex<double> worst_value = 0.0;
    int worst_col = row;
    for (int col = 0; col < dim; ++col) {
      if (col == row) continue;
      const double scale = std::sqrt(expected(m, n) * expected(col / K, col % K));
      const std::complex<double> v = gram[static_cast<std::size_t>(row) * dim + col];
      if (std::abs(v) / scale > worst) {
        worst = std::abs(v) / scale;
        worst_value = v;
        worst_col = col;
      }
    }
    report.add(pair_id("offdiag", m, n), from_slice(worst_value, p.unit), Quaternion(0.0), worst, p.tol)
        .note = note("largest against H(", worst_col / K, ",", worst_col % K, "), relative to sqrt(D D')");
  }
  return report;
}

VerificationReport routes_suite(const RoutesParams& p) {
  VerificationReport report("routes");
  const int K = p.max_index + 1;
  const auto qs = random_ball(p.samples, p.radius, p.seed);
  struct Worst {
    double err = 0.0;
    Quaternion direct, polar, recurrence;
  };
  std::vector<std::vector<Worst>> per_sample(qs.size(), std::vector<Worst>(K * K));
  parallel_for(qs.size(), [&](std::size_t s) {
    const Quaternion& q = qs[s];
    for (int m = 0; m < K; ++m)
      for (int n = 0; n < K; ++n) {
        const Quaternion d = qhermite_direct(m, n, q);
        const Quaternion po = qhermite_polar(m, n, q).value;
        const Quaternion r = qhermite_recurrence(m, n, q);
        const double scale = qhermite_abs_scale(m, n, q);
        const double err = std::max({norm(d - po), norm(d - r), norm(po - r)}) / scale;
        per_sample[s][m * K + n] = {err, d, po, r};
      }
  });
  for (int m = 0; m < K; ++m)
    for (int n = 0; n < K; ++n) {
      Worst w;
      for (const auto& s : per_sample)
        if (s[m * K + n].err >= w.err) w = s[m * K + n];
      report.add(pair_id("H", m, n), w.direct, w.polar, w.err, p.tol).note =
          "max pairwise route difference over samples, relative to the sum of |terms|";
    }
  return report;
}

VerificationReport landau_suite(const LandauParams& p) {
  VerificationReport report("landau");
  std::vector<Quaternion> points;
  for (double r : p.radii)
    for (int k = 0; k < p.n_angles; ++k) {
      const double theta = 0.1 + k * (2.0 * kPi - 0.1) / p.n_angles;
      points.push_back(from_slice(r * std::cos(theta), r * std::sin(theta), p.unit));
    }
  const double floor = p.floor_factor * kEps / (p.h * p.h);
  const int cols = p.max_m + 1;
  std::vector<VerificationCase> cases((p.max_n + 1) * cols);
  parallel_for(cases.size(), [&](std::size_t idx) {
    const int n = static_cast<int>(idx) / cols;
    const int m = static_cast<int>(idx) % cols;
    const SliceFunction f = as_slice_function([n, m](const Quaternion& q) { return qhermite(n, m, q); });
    auto rms_residual = [&](double h) {
      double s = 0.0;
      double sc = 0.0;
      for (const Quaternion& q : points) {
        const Quaternion v = qhermite(n, m, q);
        s += norm_sq(laplacian_cartesian(f, q, {h}) - v * static_cast<double>(m));
        sc += norm_sq(v);
      }
      return std::sqrt(s / sc);
    };
    const double r1 = rms_residual(p.h);
    const double r2 = rms_residual(0.5 * p.h);
    const double ratio = r1 / r2;
    VerificationCase c;
    c.suite = report.suite();
    c.id = pair_id("H", n, m);
    c.lhs = laplacian_cartesian(f, points.front(), {p.h});
    c.rhs = qhermite(n, m, points.front()) * static_cast<double>(m);
    const std::string detail =
        note("res(h)=", r1, " res(h/2)=", r2, " ratio=", ratio, " C=res(h)/h^2=", r1 / (p.h * p.h));
    if (r1 <= floor && r2 <= floor) {
      c.residual = std::max(r1, r2) / floor;
      c.tolerance = 1.0;
      c.note = "stencil-exact: residual at rounding floor; " + detail;
    } else {
      c.residual = std::abs(ratio - 0.5 * (p.ratio_lo + p.ratio_hi));
      c.tolerance = 0.5 * (p.ratio_hi - p.ratio_lo);
      c.note = "|ratio - 4| under h -> h/2; " + detail;
    }
    c.pass = c.residual <= c.tolerance;
    cases[idx] = c;
  });
  for (const auto& c : cases) report.cases().push_back(c);
  return report;
}

VerificationReport kernel_suite(const KernelParams& p) {
  VerificationReport report("kernel");
  const auto qs = random_ball(p.samples, p.radius, p.seed);
  const auto qps = random_ball(p.samples, p.radius, p.seed + 100);
  for (int m = 0; m <= p.max_m; ++m) {
    double worst = -1.0;
    Quaternion lhs, rhs;
    for (const Quaternion& q : qs) {
      const Quaternion series = kernel_series(m, q, q, p.terms);
      const double exact = std::exp(norm_sq(q)) / kPi;
      const double err = norm(series - exact) / exact;
      if (err > worst) {
        worst = err;
        lhs = series;
        rhs = exact;
      }
    }
    report.add("diagonal(m=" + std::to_string(m) + ")", lhs, rhs, worst, p.tol_diagonal).note =
        "K_m(q,q) by the N-term basis series against e^{|q|^2}/pi, worst sample";
  }
  for (int m = 0; m <= p.max_m; ++m) {
    double worst = -1.0;
    double worst_conj = 0.0;
    double worst_tail = 0.0;
    Quaternion lhs, rhs;
    for (std::size_t s = 0; s < qs.size(); ++s) {
      // q' moved into the slice of q
      const ImaginaryUnit unit = slice_decompose(qs[s]).unit;
      const Quaternion qp = from_slice(qps[s].w, norm(qps[s].imag()), unit);
      const Quaternion closed = kernel_closed(m, qs[s], qp);
      const Quaternion series = kernel_series(m, qs[s], qp, p.terms);
      const double scale = kernel_series_abs(m, qs[s], qp, p.terms);
      const double err = norm(closed - series) / scale;
      worst_conj = std::max(worst_conj, norm(kernel_conjugate_form(m, qs[s], qp) - series) / scale);
      worst_tail = std::max(worst_tail, kernel_series_tail(m, qs[s], qp, p.terms) / scale);
      if (err > worst) {
        worst = err;
        lhs = closed;
        rhs = series;
      }
    }
    report.add("closed_vs_series(m=" + std::to_string(m) + ")", lhs, rhs, worst, p.tol_closed).note =
        note("common slice, relative to the sum of |terms|; certified tail/scale <= ", worst_tail);
    report.add("conjugate_form_vs_series(m=" + std::to_string(m) + ")", lhs, rhs, worst_conj,
               p.tol_closed, false)
        .note = "e_*^{[conj q, q']} orientation, measured only";
  }
  return report;
}

VerificationReport reproduction_suite(const ReproductionParams& p) {
  VerificationReport report("reproduction");
  const std::vector<Quaternion> points = p.points.empty() ? decomposition_points() : p.points;
  const SliceGaussianRule rule = slice_gaussian_rule(p.n_r, p.n_theta);
  const auto nodes = rule.points();
  const auto w = rule.point_weights();
  const int A = p.max_a + 1;
  const int L = p.max_level + 1;
  const int top = std::max(p.max_a, p.max_level);

  // P[pt][m][a][b] = (P_m H_{a,b})(pt); the kernel is shared by every (a, b)
  std::vector<std::vector<Quaternion>> proj(points.size(), std::vector<Quaternion>(L * A * L));
  parallel_for(points.size(), [&](std::size_t ip) {
    const Quaternion& q = points[ip];
    const ImaginaryUnit unit = slice_decompose(q).unit;
    std::vector<CompensatedSum<Quaternion>> acc(L * A * L);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const Quaternion qp = from_slice(nodes[k], unit);
      const Quaternion e = star_exp(q, conj(qp), 1e-15) * (w[k] / kPi);
      const double d2 = norm_sq(q - qp);
      const ComplexTable t = qhermite_table(top, top, nodes[k]);
      for (int m = 0; m < L; ++m) {
        const Quaternion kern = e * laguerre(m, 0.0, d2);
        for (int a = 0; a < A; ++a)
          for (int b = 0; b < L; ++b) acc[(m * A + a) * L + b].add(kern * from_slice(t[a][b], unit));
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) proj[ip][i] = acc[i].value();
  });
  auto P = [&](std::size_t ip, int m, int a, int b) { return proj[ip][(m * A + a) * L + b]; };

  // max over points of |value - expected| relative to max |H_{a,b}|
  auto compare = [&](const std::string& id, const std::function<Quaternion(std::size_t)>& value_at, int a,
                     int b, bool expects_zero) -> VerificationCase& {
    double worst = 0.0;
    double scale = 0.0;
    Quaternion lhs, rhs;
    for (std::size_t ip = 0; ip < points.size(); ++ip) {
      const Quaternion target = qhermite(a, b, points[ip]);
      const Quaternion value = value_at(ip);
      const Quaternion expect = expects_zero ? Quaternion{} : target;
      if (norm(value - expect) >= worst) {
        worst = norm(value - expect);
        lhs = value;
        rhs = expect;
      }
      scale = std::max(scale, norm(target));
    }
    return report.add(id, lhs, rhs, worst / scale, p.tol);
  };

  for (int m = 0; m < L; ++m)
    for (int a = 0; a < A; ++a)
      for (int b = 0; b < L; ++b) {
        const auto single = [&, m, a, b](std::size_t ip) { return P(ip, m, a, b); };
        if (b == m)
          compare(triple_id("reproduce", m, a, b), single, a, b, false).note = "P_m H_{a,m} = H_{a,m}";
        else
          compare(triple_id("annihilate", m, a, b), single, a, b, true).note = "P_m H_{a,b} = 0 for b != m";
      }
  for (int M = 0; M < L; ++M)
    for (int a = 0; a < A; ++a)
      for (int b = 0; b <= M; ++b) {
        const auto partial = [&, M, a, b](std::size_t ip) {
          CompensatedSum<Quaternion> s;
          for (int m = 0; m <= M; ++m) s.add(P(ip, m, a, b));
          return s.value();
        };
        compare(triple_id("decompose", M, a, b), partial, a, b, false).note = "sum_{m<=M} P_m H_{a,b} = H_{a,b}";
      }
  return report;
}

VerificationReport bargmann_suite(const BargmannParams& p) {
  VerificationReport report("bargmann");
  const auto qs = random_ball(p.norm_samples, p.radius, p.seed);
  for (int m = 0; m <= p.max_m; ++m) {
    double worst = -1.0;
    Quaternion lhs, rhs;
    for (const Quaternion& q : qs) {
      const double got = std::sqrt(bargmann_kernel_norm_sq(m, q));
      const double want = std::exp(0.5 * norm_sq(q)) / std::sqrt(kPi);
      const double err = std::abs(got - want) / want;
      if (err > worst) {
        worst = err;
        lhs = got;
        rhs = want;
      }
    }
    report.add("kernel_norm(m=" + std::to_string(m) + ")", lhs, rhs, worst, p.tol_norm).note =
        "||A_{m;q}|| against e^{|q|^2/2}/sqrt(pi), worst sample";
  }

  std::mt19937_64 rng(p.seed + 7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(0, p.bound_degree);
  std::uniform_int_distribution<int> level(0, p.max_m);
  const auto bound_points = random_ball(p.bound_samples, p.radius, p.seed + 8);
  for (std::size_t s = 0; s < p.bound_samples; ++s) {
    std::vector<Quaternion> c(degree(rng) + 1);
    for (auto& v : c) v = {coef(rng), coef(rng), coef(rng), coef(rng)};
    const int m = level(rng);
    const RealLineFunction phi = RealLineFunction::hermite_combination(c);
    const Quaternion& q = bound_points[s];
    const double lhs = norm(bargmann_transform(m, phi, q));
    const double rhs = std::exp(0.5 * norm_sq(q)) / std::sqrt(kPi) * l2_norm(phi);
    report.add("pointwise_bound(" + std::to_string(s) + ")", lhs, rhs, lhs / rhs, 1.0).note =
        note("|B_m phi(q)| / (e^{|q|^2/2} ||phi|| / sqrt(pi)), m=", m, ", degree ", c.size() - 1);
  }

  std::vector<Quaternion> points = decomposition_points();
  for (const Quaternion& q : random_ball(10, 1.5, p.seed + 9)) points.push_back(q);
  for (int m = 0; m <= p.basis_max_m; ++m)
    for (int n = 0; n <= p.basis_max_n; ++n) {
      const GridComparison g = bargmann_basis_image_check(m, n, points);
      report.add(pair_id("basis_image", m, n), g.lhs.front(), g.rhs.front() * g.fit.constant,
                 g.fit.spread, p.tol_fit)
          .note = note("B_m h_n = H_{m,n} c; fitted c = ", g.fit.constant);
      const double derived = bargmann_basis_constant(m, n);
      report.add(pair_id("basis_constant", m, n), g.fit.constant, derived,
                 norm(g.fit.constant - derived) / derived, p.tol_fit, false)
          .note = "fitted c against ||h_n|| / ||H_{m,n}||, measured only";
      const double printed = std::pow(std::sqrt(2.0), m - 1) / kPi;
      report.add(pair_id("printed_constant", m, n), g.fit.constant, printed,
                 norm(g.fit.constant - printed) / printed, p.tol_fit, false)
          .note = "fitted c against sqrt2^{m-1}/pi, measured only";
    }
  return report;
}

VerificationReport wigner_suite(const WignerParams& p) {
  VerificationReport report("wigner");
  const int K = p.max_index + 1;
  std::vector<GridComparison> stated(K * K);
  std::vector<GridComparison> derived(K * K);
  parallel_for(stated.size(), [&](std::size_t idx) {
    const int m = static_cast<int>(idx) / K;
    const int n = static_cast<int>(idx) % K;
    stated[idx] = fw_hermite_check(m, n, p.unit, p.grid, WignerGaussian::as_stated);
    derived[idx] = fw_hermite_check(m, n, p.unit, p.grid, WignerGaussian::as_derived);
  });
  for (int m = 0; m < K; ++m)
    for (int n = 0; n < K; ++n) {
      const GridComparison& g = stated[m * K + n];
      report.add(pair_id("hermite", m, n), g.lhs.front(), g.rhs.front() * g.fit.constant, g.fit.spread,
                 p.tol_spread)
          .note = note("Gaussian e^{-|q|^2/2}; fitted constant ", g.fit.constant);
    }
  for (int m = 0; m < K; ++m)
    for (int n = 0; n < K; ++n) {
      const GridComparison& g = derived[m * K + n];
      report.add(pair_id("hermite_quarter_gaussian", m, n), g.lhs.front(), g.rhs.front() * g.fit.constant,
                 g.fit.spread, p.tol_spread, false)
          .note = note("Gaussian e^{-|q|^2/4}, measured only; fitted constant ", g.fit.constant);
    }

  const RealLineFunction h0 = RealLineFunction::hermite(0);
  const Quaternion origin = fourier_wigner(h0, h0, p.unit, 0.0, 0.0);
  report.add("origin(0,0)", origin, 1.0 / std::sqrt(2.0), norm(origin - 1.0 / std::sqrt(2.0)), p.tol_origin)
      .note = "V_I(h_0,h_0)(0) = 1/sqrt2, absolute";

  const std::vector<std::pair<std::string, RealLineFunction>> fs = {
      {"h0", RealLineFunction::hermite(0)},
      {"h1", RealLineFunction::hermite(1)},
      {"h2", RealLineFunction::hermite(2)},
      {"h0+h1*j", RealLineFunction::hermite_combination({1.0, Quaternion::j()})},
  };
  for (int m = 0; m <= p.connection_max_m; ++m)
    for (const auto& [name, f] : fs) {
      const GridComparison g = fw_bargmann_relation_check(m, f, p.unit, p.grid);
      report.add("connection(m=" + std::to_string(m) + ",f=" + name + ")", g.lhs.front(),
                 g.rhs.front() * g.fit.constant, g.fit.spread, p.tol_spread)
          .note = note("(p,s) read as (x,y); fitted constant ", g.fit.constant);
    }
  return report;
}

VerificationReport divergence_suite(const DivergenceParams& p) {
  VerificationReport report("divergence");
  const DivergenceProbe probe = divergence_probe(p.mu, p.n, p.T);
  for (std::size_t i = 0; i < probe.T.size(); ++i)
    report.add(note("integral(T=", probe.T[i], ")"), probe.integral[i], probe.integral[i],
               probe.integral[i], 0.0, false)
        .note = "truncated radial integral, measured only";
  for (std::size_t i = 0; i < probe.growth.size(); ++i)
    report.add_exceeds(note("growth(T=", probe.T[i], "->", probe.T[i + 1], ")"), probe.growth[i],
                       p.threshold)
        .note = "I(T_next) / I(T)";
  const DivergenceProbe extended = divergence_probe(p.mu, p.n, p.diagnostic_T);
  for (std::size_t i = 0; i < extended.growth.size(); ++i)
    report.add_exceeds(note("growth(T=", extended.T[i], "->", extended.T[i + 1], ")"), extended.growth[i],
                       p.threshold, false)
        .note = "beyond the stated range, measured only";
  return report;
}

VerificationReport genfn_suite(const GenFnParams& p) {
  VerificationReport report("genfn");
  const auto qs = random_ball(p.samples, p.radius, p.seed);
  for (int m = 0; m <= p.max_m; ++m)
    for (double x : p.xs) {
      double worst = -1.0;
      double worst_tail = 0.0;
      int worst_terms = 0;
      Quaternion lhs, rhs;
      for (const Quaternion& q : qs) {
        const int N = bilateral_genfn_terms(m, x, q, p.tail_tol);
        const GenFnCheck g = bilateral_genfn_check(m, x, q, N);
        const double scale = std::max({g.scale, norm(g.rhs), std::numeric_limits<double>::min()});
        const double err = norm(g.lhs - g.rhs) / scale;
        worst_tail = std::max(worst_tail, g.tail);
        worst_terms = std::max(worst_terms, N);
        if (err > worst) {
          worst = err;
          lhs = g.lhs;
          rhs = g.rhs;
        }
      }
      const std::string tag = note("(m=", m, ",x=", x, ")");
      report.add("agreement" + tag, lhs, rhs, worst, p.tol).note =
          "relative to the sum of |terms| on the left, worst sample";
      report.add("certified_tail" + tag, worst_tail, 0.0, worst_tail, p.tail_tol).note =
          note("largest certified truncation bound, N up to ", worst_terms);
    }
  return report;
}

VerificationReport cross_slice_suite(const CrossSliceParams& p) {
  VerificationReport report("cross-slice");
  const auto qs = random_ball(p.samples, 1.5, p.seed);
  const auto qps = random_ball(p.samples, 1.5, p.seed + 1);
  for (int m = 0; m <= p.max_m; ++m) {
    double worst = 0.0;
    for (std::size_t s = 0; s < qs.size(); ++s) {
      const Quaternion closed = kernel_closed(m, qs[s], qps[s]);
      const Quaternion series = kernel_series(m, qs[s], qps[s], 60);
      worst = std::max(worst, norm(closed - series) / kernel_series_abs(m, qs[s], qps[s], 60));
    }
    report.add("closed_vs_series(m=" + std::to_string(m) + ")", {}, {}, worst, 0.0, false).note =
        "q, q' in different slices, measured only";
  }
  const SlicedMeasureRule rule = sliced_measure_rule(p.n_r, p.n_theta, p.n_polar, p.n_azimuth);
  const Quaternion q{0.3, 0.4, -0.2, 0.5};
  for (int m = 0; m <= std::min(p.max_m, 1); ++m)
    for (int a = 0; a <= 2; ++a) {
      const QuaternionFunction f = [a, m](const Quaternion& x) { return qhermite(a, m, x); };
      const Quaternion got = project_sliced(m, f, q, rule);
      const Quaternion want = f(q);
      report.add(pair_id("sliced_reproduction", m, a), got, want, norm(got - want) / norm(want), 0.0, false)
          .note = "P_m over the sliced measure divided by 4 pi, measured only";
    }
  for (auto& c : report.cases()) c.pass = false;
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"orthogonality", "routes",     "landau",
                                                 "kernel",        "reproduction", "bargmann",
                                                 "wigner",        "divergence", "genfn",
                                                 "cross-slice"};
  return names;
}

VerificationReport run_suite(std::string_view name) {
  if (name == "orthogonality") return orthogonality_suite();
  if (name == "routes") return routes_suite();
  if (name == "landau") return landau_suite();
  if (name == "kernel") return kernel_suite();
  if (name == "reproduction") return reproduction_suite();
  if (name == "bargmann") return bargmann_suite();
  if (name == "wigner") return wigner_suite();
  if (name == "divergence") return divergence_suite();
  if (name == "genfn") return genfn_suite();
  if (name == "cross-slice") return cross_slice_suite();
  if (name == "all") {
    VerificationReport all("all");
    for (const auto& n : suite_names()) all.merge(run_suite(n));
    return all;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace qfock
