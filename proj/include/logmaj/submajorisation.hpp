#pragma once

// Logarithmic, p- and phi-submajorisation between singular-value functions.
//
// Every relation compares cumulative integrals of piecewise-constant
// integrands. Their difference is piecewise linear in t with kinks only at
// breakpoints, so comparing at the union of breakpoints decides the relation
// for all t. A dense-grid evaluation is kept for auditing that claim.

#include <functional>
#include <string>
#include <vector>

#include "logmaj/matrix.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

struct RelationReport {
  bool holds = true;
  double worst_t = 1.0;
  double lhs_at_worst = 0.0;
  double rhs_at_worst = 0.0;
  /// min over tested t of rhs - lhs; +inf when every lhs is -inf.
  double slack = 0.0;
};

enum class Evaluation { kBreakpoints, kDenseGrid };

struct RelationOptions {
  double tol = 1e-9;
  Evaluation evaluation = Evaluation::kBreakpoints;
  double grid_step = 1e-3;
};

/// Compares the integral over [0,t] of phi(f) against phi(g) at every test
/// point t. phi may return -inf (a -inf left side passes).
RelationReport cumulative_relation(const StepFunction& f, const StepFunction& g,
                                   const std::function<double(double)>& phi,
                                   const RelationOptions& opts = {});

/// x ≺≺_log y: Lambda_t(x) <= Lambda_t(y) for all t.
RelationReport log_submaj(const ComplexMatrix& x, const ComplexMatrix& y, const RelationOptions& opts = {});
RelationReport log_submaj(const StepFunction& f, const StepFunction& g, const RelationOptions& opts = {});

/// x ≺≺_p y: cumulative integrals of mu^p dominated for all t.
RelationReport p_submaj(const ComplexMatrix& x, const ComplexMatrix& y, double p,
                        const RelationOptions& opts = {});
RelationReport p_submaj(const StepFunction& f, const StepFunction& g, double p,
                        const RelationOptions& opts = {});

struct BatteryItem {
  /// "1", "2", "3" or "4" (the numbering of the equivalence list).
  std::string condition;
  std::string parameter;
  RelationReport report;
};

struct Remark26Battery {
  std::vector<BatteryItem> items;
  bool log_submaj_holds = false;
  /// False only when x ≺≺_log y holds but some sampled consequence fails.
  bool consistent = true;
};

/// Sampled check of the equivalent conditions for positive invertible x, y:
///   (1) I + r x ≺≺_log I + r y for r in {0.1, 1, 10, 100}
///   (2) x ≺≺_p y for p in {0.25, 0.5, 0.75}
///   (3) x ≺≺_log y
///   (4) phi-dominance for phi in {sqrt, square, log1p}
/// Throws NotPositiveInvertible.
Remark26Battery remark26_battery(const ComplexMatrix& x, const ComplexMatrix& y,
                                 const RelationOptions& opts = {});

}  // namespace logmaj
