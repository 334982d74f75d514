// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qfock/suites.hpp"

namespace {

using qfock::VerificationCase;
using qfock::VerificationReport;

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Summary {
  std::size_t asserted = 0;
  std::size_t failed = 0;
  double worst = 0.0;  // worst residual / tolerance, or smallest residual / threshold for ">"
  bool any_exceeds = false;
  std::string worst_case;
};

Summary summarize(const VerificationReport& r, const std::function<bool(const VerificationCase&)>& select) {
  Summary s;
  double best_exceeds = INFINITY;
  for (const VerificationCase& c : r.cases()) {
    if (!c.asserted || !select(c)) continue;
    ++s.asserted;
    if (!c.pass) ++s.failed;
    if (c.relation == ">") {
      s.any_exceeds = true;
      const double ratio = c.residual / c.tolerance;
      if (ratio < best_exceeds) {
        best_exceeds = ratio;
        s.worst_case = c.id;
      }
    } else {
      const double ratio = c.tolerance > 0 ? c.residual / c.tolerance : (c.residual > 0 ? INFINITY : 0.0);
      if (s.worst_case.empty() || !(ratio <= s.worst)) {
        s.worst = ratio;
        s.worst_case = c.id;
      }
    }
  }
  if (s.any_exceeds) s.worst = best_exceeds;
  return s;
}

int failures = 0;

void line(const std::string& label, const VerificationReport& r,
          const std::function<bool(const VerificationCase&)>& select = [](const VerificationCase&) { return true; }) {
  const Summary s = summarize(r, select);
  const bool pass = s.asserted > 0 && s.failed == 0;
  if (!pass) ++failures;
  std::printf("%s %-34s cases=%-4zu failed=%-4zu %s=%.3g (%s)\n", pass ? "PASS" : "FAIL", label.c_str(), s.asserted,
              s.failed, s.any_exceeds ? "min residual/threshold" : "worst residual/tol", s.worst,
              s.worst_case.c_str());
}

void diagnostic(const std::string& label, const VerificationReport& r,
                const std::function<bool(const VerificationCase&)>& select) {
  double worst = 0.0;
  std::string id;
  std::size_t n = 0;
  for (const VerificationCase& c : r.cases()) {
    if (!select(c)) continue;
    ++n;
    if (!(c.residual <= worst)) {
      worst = c.residual;
      id = c.id;
    }
  }
  std::printf("INFO %-34s cases=%-4zu max residual=%.3g (%s)\n", label.c_str(), n, worst, id.c_str());
}

auto prefix(const std::string& p) {
  return [p](const VerificationCase& c) { return starts_with(c.id, p); };
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  line("1 orthogonality and norms", qfock::orthogonality_suite());
  line("2 route equivalence", qfock::routes_suite());
  line("3 Landau eigen-relation", qfock::landau_suite());
  line("4 kernel identities", qfock::kernel_suite());
  line("5 reproduction and decomposition", qfock::reproduction_suite());
  line("6 Segal-Bargmann", qfock::bargmann_suite());

  const VerificationReport wigner = qfock::wigner_suite();
  line("7a Fourier-Wigner Hermite images", wigner, prefix("hermite("));
  line("7b Fourier-Wigner origin value", wigner, prefix("origin"));
  line("7c Fourier-Wigner Bargmann link", wigner, prefix("connection"));
  diagnostic("7 quarter-Gaussian variant (spread)", wigner, prefix("hermite_quarter_gaussian"));

  const VerificationReport divergence = qfock::divergence_suite();
  line("8 divergence probe", divergence);
  diagnostic("8 growth beyond T=40", divergence, prefix("growth(T=40"));

  line("9 generating function", qfock::genfn_suite());

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d criterion line(s) failed, %.1f s\n", failures ? "FAIL" : "PASS", failures, seconds);
  return failures ? 1 : 0;
}
