#pragma once

#include <string>

#include <json.hpp>

namespace logmaj {

struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;

  /// atol + rtol * max(|lhs|, |rhs|), ignoring infinite sides.
  double bound(double lhs, double rhs) const;
};

enum class Outcome { kPass, kVacuousPass, kFail, kSkipped };

const char* to_string(Outcome o) noexcept;

/// One inequality lhs <= rhs evaluated on concrete inputs.
/// Invariant: outcome is a pass exactly when slack >= -tolerance.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs (+inf when lhs = -inf).
  double slack = 0.0;
  double tolerance = 0.0;
  Outcome outcome = Outcome::kPass;
  nlohmann::json context = nlohmann::json::object();

  bool passed() const noexcept { return outcome == Outcome::kPass || outcome == Outcome::kVacuousPass; }
  bool vacuous() const noexcept { return outcome == Outcome::kVacuousPass; }
  bool skipped() const noexcept { return outcome == Outcome::kSkipped; }
};

/// lhs <= rhs with the tolerance policy; lhs = -inf is a vacuous pass.
InequalityReport make_inequality(std::string name, double lhs, double rhs, const Tolerance& tol,
                                 nlohmann::json context = nlohmann::json::object());

/// An identity reported as lhs = discrepancy, rhs = 0; passes when the
/// discrepancy is within atol + rtol * scale.
InequalityReport make_identity(std::string name, double discrepancy, double scale, const Tolerance& tol,
                               nlohmann::json context = nlohmann::json::object());

InequalityReport make_skipped(std::string name, nlohmann::json context = nlohmann::json::object());

/// slack + tolerance; the report with the smallest margin is the tightest.
double margin(const InequalityReport& r);

nlohmann::json to_json(const InequalityReport& r);

/// Doubles as JSON numbers, non-finite values as the strings "inf"/"-inf"/"nan".
nlohmann::json number_to_json(double v);

}  // namespace logmaj
