#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

inline constexpr int kReportSchemaVersion = 1;

/// One checked identity. pass means `residual relation tolerance`; cases with
/// asserted == false are measured and reported but never fail a suite.
struct VerificationCase {
  std::string suite;
  std::string id;
  Quaternion lhs;
  Quaternion rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string relation = "<=";  // "<=" or ">"
  bool pass = false;
  bool asserted = true;
  std::string note;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  /// Records residual <= tolerance.
  VerificationCase& add(std::string id, const Quaternion& lhs, const Quaternion& rhs, double residual,
                        double tolerance, bool asserted = true);
  /// Records residual > threshold.
  VerificationCase& add_exceeds(std::string id, double residual, double threshold, bool asserted = true);

  void merge(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<VerificationCase>& cases() const { return cases_; }
  std::vector<VerificationCase>& cases() { return cases_; }

  /// Every asserted case passes.
  bool passed() const;
  std::size_t asserted_count() const;
  std::size_t failed_count() const;
  /// Worst residual/tolerance among asserted "<=" cases.
  double worst_ratio() const;

  std::string to_json() const;
  std::string to_csv() const;

 private:
  std::string suite_;
  std::vector<VerificationCase> cases_;
};

}  // namespace qfock
