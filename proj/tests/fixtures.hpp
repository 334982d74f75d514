#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "qfock/quaternion.hpp"

namespace qfock::testing {

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(QFOCK_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

inline Quaternion quaternion_from(const nlohmann::json& a) {
  return {a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>(), a.at(3).get<double>()};
}

// Componentwise closeness relative to max(1, |expected|).
inline double rel_dev(const Quaternion& got, const Quaternion& expected) {
  const double scale = std::max(1.0, norm(expected));
  return max_abs_diff(got, expected) / scale;
}

}  // namespace qfock::testing
