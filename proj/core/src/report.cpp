#include "qfock/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qfock {
namespace {

nlohmann::json quaternion_json(const Quaternion& q) { return {q.w, q.x1, q.x2, q.x3}; }

// JSON has no NaN or infinity; they are written as null
nlohmann::json number_json(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

VerificationCase& VerificationReport::add(std::string id, const Quaternion& lhs, const Quaternion& rhs,
                                          double residual, double tolerance, bool asserted) {
  VerificationCase c;
  c.suite = suite_;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;  // NaN fails
  c.asserted = asserted;
  cases_.push_back(std::move(c));
  return cases_.back();
}

VerificationCase& VerificationReport::add_exceeds(std::string id, double residual, double threshold,
                                                  bool asserted) {
  VerificationCase& c = add(std::move(id), residual, threshold, residual, threshold, asserted);
  c.relation = ">";
  c.pass = residual > threshold;
  return c;
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
}

bool VerificationReport::passed() const { return failed_count() == 0; }

std::size_t VerificationReport::asserted_count() const {
  return static_cast<std::size_t>(
      std::count_if(cases_.begin(), cases_.end(), [](const auto& c) { return c.asserted; }));
}

std::size_t VerificationReport::failed_count() const {
  return static_cast<std::size_t>(std::count_if(
      cases_.begin(), cases_.end(), [](const auto& c) { return c.asserted && !c.pass; }));
}

double VerificationReport::worst_ratio() const {
  double worst = 0.0;
  for (const auto& c : cases_)
    if (c.asserted && c.relation == "<=" && c.tolerance > 0.0)
      worst = std::max(worst, c.residual / c.tolerance);
  return worst;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite_;
  j["pass"] = passed();
  j["asserted"] = asserted_count();
  j["failed"] = failed_count();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases_) {
    nlohmann::json e;
    e["suite"] = c.suite;
    e["case"] = c.id;
    e["lhs"] = quaternion_json(c.lhs);
    e["rhs"] = quaternion_json(c.rhs);
    e["residual"] = number_json(c.residual);
    e["tolerance"] = number_json(c.tolerance);
    e["relation"] = c.relation;
    e["pass"] = c.pass;
    e["asserted"] = c.asserted;
    if (!c.note.empty()) e["note"] = c.note;
    j["cases"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "suite,case,lhs_w,lhs_x1,lhs_x2,lhs_x3,rhs_w,rhs_x1,rhs_x2,rhs_x3,residual,relation,"
        "tolerance,pass,asserted,note\n";
  for (const auto& c : cases_) {
    os << csv_field(c.suite) << ',' << csv_field(c.id) << ',' << c.lhs.w << ',' << c.lhs.x1 << ','
       << c.lhs.x2 << ',' << c.lhs.x3 << ',' << c.rhs.w << ',' << c.rhs.x1 << ',' << c.rhs.x2 << ','
       << c.rhs.x3 << ',' << c.residual << ',' << c.relation << ',' << c.tolerance << ','
       << (c.pass ? "true" : "false") << ',' << (c.asserted ? "true" : "false") << ','
       << csv_field(c.note) << '\n';
  }
  return os.str();
}

}  // namespace qfock
