#include "logmaj/submajorisation.hpp"

#include <cmath>
#include <limits>

#include "logmaj/error.hpp"
#include "logmaj/spectral.hpp"

namespace logmaj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_log(double v) { return v > 0.0 ? std::log(v) : -kInf; }

std::vector<double> test_points(const StepFunction& f, const StepFunction& g, const RelationOptions& opts) {
  if (opts.evaluation == Evaluation::kBreakpoints) return merged_breakpoints(f, g);
  std::vector<double> pts;
  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / opts.grid_step));
  for (std::size_t k = 1; k < steps; ++k) pts.push_back(static_cast<double>(k) * opts.grid_step);
  pts.push_back(1.0);
  return pts;
}

void require_positive_invertible(const ComplexMatrix& x, const char* name) {
  if (hermiticity_residual(x) > 1e-10 * frobenius_norm(x)) {
    throw Error(ErrorCode::kNotPositiveInvertible, std::string(name) + " is not Hermitian");
  }
  const auto eig = herm_eig(x).eigenvalues;
  if (eig.empty() || !(eig.back() > 0.0)) {
    throw Error(ErrorCode::kNotPositiveInvertible, std::string(name) + " is not positive invertible");
  }
}

}  // namespace

RelationReport cumulative_relation(const StepFunction& f, const StepFunction& g,
                                   const std::function<double(double)>& phi,
                                   const RelationOptions& opts) {
  RelationReport out;
  out.slack = kInf;
  bool first = true;
  for (double t : test_points(f, g, opts)) {
    const IntervalSet k = IntervalSet::prefix(t);
    const double lhs = integrate(f, k, phi);
    const double rhs = integrate(g, k, phi);
    double slack;
    if (lhs == -kInf) {
      slack = kInf;
    } else if (rhs == -kInf) {
      slack = -kInf;
    } else {
      slack = rhs - lhs;
    }
    if (first || slack < out.slack) {
      out.slack = slack;
      out.worst_t = t;
      out.lhs_at_worst = lhs;
      out.rhs_at_worst = rhs;
      first = false;
    }
  }
  out.holds = out.slack >= -opts.tol;
  return out;
}

RelationReport log_submaj(const StepFunction& f, const StepFunction& g, const RelationOptions& opts) {
  return cumulative_relation(f, g, safe_log, opts);
}

RelationReport log_submaj(const ComplexMatrix& x, const ComplexMatrix& y, const RelationOptions& opts) {
  return log_submaj(mu(x), mu(y), opts);
}

RelationReport p_submaj(const StepFunction& f, const StepFunction& g, double p, const RelationOptions& opts) {
  if (!(p > 0.0)) throw Error(ErrorCode::kOutOfDomain, "p must be positive");
  return cumulative_relation(f, g, [p](double v) { return std::pow(v, p); }, opts);
}

RelationReport p_submaj(const ComplexMatrix& x, const ComplexMatrix& y, double p, const RelationOptions& opts) {
  return p_submaj(mu(x), mu(y), p, opts);
}

Remark26Battery remark26_battery(const ComplexMatrix& x, const ComplexMatrix& y, const RelationOptions& opts) {
  require_positive_invertible(x, "x");
  require_positive_invertible(y, "y");
  const StepFunction fx = mu(x);
  const StepFunction fy = mu(y);

  Remark26Battery out;
  for (double r : {0.1, 1.0, 10.0, 100.0}) {
    const ComplexMatrix ix = add_identity(r * x, 1.0);
    const ComplexMatrix iy = add_identity(r * y, 1.0);
    out.items.push_back({"1", "r=" + std::to_string(r), log_submaj(ix, iy, opts)});
  }
  for (double p : {0.25, 0.5, 0.75}) {
    out.items.push_back({"2", "p=" + std::to_string(p), p_submaj(fx, fy, p, opts)});
  }
  const RelationReport logrel = log_submaj(fx, fy, opts);
  out.items.push_back({"3", "", logrel});
  out.items.push_back({"4", "phi=sqrt", cumulative_relation(fx, fy, [](double v) { return std::sqrt(v); }, opts)});
  out.items.push_back({"4", "phi=square", cumulative_relation(fx, fy, [](double v) { return v * v; }, opts)});
  out.items.push_back({"4", "phi=log1p", cumulative_relation(fx, fy, [](double v) { return std::log1p(v); }, opts)});

  out.log_submaj_holds = logrel.holds;
  if (out.log_submaj_holds) {
    for (const auto& item : out.items) {
      if (!item.report.holds) out.consistent = false;
    }
  }
  return out;
}

}  // namespace logmaj
