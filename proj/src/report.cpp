#include "logmaj/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logmaj {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double Tolerance::bound(double lhs, double rhs) const {
  double scale = 0.0;
  if (std::isfinite(lhs)) scale = std::max(scale, std::abs(lhs));
  if (std::isfinite(rhs)) scale = std::max(scale, std::abs(rhs));
  return atol + rtol * scale;
}

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kVacuousPass: return "vacuous";
    case Outcome::kFail: return "fail";
    case Outcome::kSkipped: return "skipped";
  }
  return "unknown";
}

InequalityReport make_inequality(std::string name, double lhs, double rhs, const Tolerance& tol,
                                 nlohmann::json context) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol.bound(lhs, rhs);
  r.context = std::move(context);
  if (lhs == -kInf) {
    r.slack = kInf;
    r.outcome = Outcome::kVacuousPass;
    return r;
  }
  if (std::isnan(lhs) || std::isnan(rhs)) {
    r.slack = std::numeric_limits<double>::quiet_NaN();
    r.outcome = Outcome::kFail;
    return r;
  }
  r.slack = rhs == kInf ? kInf : rhs - lhs;
  r.outcome = r.slack >= -r.tolerance ? Outcome::kPass : Outcome::kFail;
  return r;
}

InequalityReport make_identity(std::string name, double discrepancy, double scale, const Tolerance& tol,
                               nlohmann::json context) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = discrepancy;
  r.rhs = 0.0;
  r.slack = -discrepancy;
  r.tolerance = tol.atol + tol.rtol * std::abs(scale);
  r.context = std::move(context);
  r.context["kind"] = "identity";
  r.outcome = r.slack >= -r.tolerance ? Outcome::kPass : Outcome::kFail;
  return r;
}

InequalityReport make_skipped(std::string name, nlohmann::json context) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
  r.context = std::move(context);
  r.outcome = Outcome::kSkipped;
  return r;
}

double margin(const InequalityReport& r) {
  if (r.skipped()) return kInf;
  if (std::isnan(r.slack)) return -kInf;
  return r.slack + r.tolerance;
}

nlohmann::json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

nlohmann::json to_json(const InequalityReport& r) {
  return {
      {"name", r.name},
      {"lhs", number_to_json(r.lhs)},
      {"rhs", number_to_json(r.rhs)},
      {"slack", number_to_json(r.slack)},
      {"tolerance", number_to_json(r.tolerance)},
      {"outcome", to_string(r.outcome)},
      {"context", r.context},
  };
}

}  // namespace logmaj
