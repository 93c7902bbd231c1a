#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hermspec/classify.hpp"
#include "hermspec/polynomial.hpp"
#include "hermspec/sturm.hpp"
#include "hermspec/verify.hpp"

namespace hermspec {

/// Coefficients as decimal strings, highest degree first (exact at any size).
inline nlohmann::json poly_to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BigInt& c : p.coeffs_descending()) {
    std::ostringstream os;
    os << c;
    arr.push_back(os.str());
  }
  return arr;
}

inline nlohmann::json comparison_to_json(const RadiusComparison& c) {
  return {{"class", radius_class_name(c.cls)},
          {"roots_above", c.roots_above},
          {"roots_below", c.roots_below},
          {"upper_is_root", c.upper_is_root},
          {"lower_is_root", c.lower_is_root}};
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["outcome"] = verdict_outcome_name(v.outcome);
  j["family_tag"] = v.tag ? nlohmann::json(family_tag_name(*v.tag)) : nlohmann::json(nullptr);
  j["embedding"] = v.embedding ? nlohmann::json(*v.embedding) : nlohmann::json(nullptr);
  j["crosscheck"] =
      v.crosscheck ? comparison_to_json(*v.crosscheck) : nlohmann::json(nullptr);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

inline nlohmann::json report_to_json(const Report& rep) {
  nlohmann::json j;
  j["scope"] = {{"max_n", rep.scope.max_n},
                {"c4free_only", rep.scope.c4free_only},
                {"connected_only", rep.scope.connected_only},
                {"orientation_mode", rep.scope.orientation_mode == OrientationMode::All
                                         ? "all"
                                         : "one_per_sign_vector"}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"check", c.check},
                      {"instance", c.instance},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"pass", c.pass}});
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", rep.total()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
  j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

/// Shortest text with the given number of significant digits.
inline std::string format_significant(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace hermspec
