#pragma once

// Non-increasing step functions on [0,1) and finite unions of subintervals.
//
// A StepFunction stores pieces [t_{i-1}, t_i) with values v_1 > v_2 > ... > v_m.
// The same data represents both continuity variants of a singular-value
// function: eval_right reads the piece containing t under [t_{i-1}, t_i),
// eval_left under (t_{i-1}, t_i]. Integrals never depend on the variant.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace logmaj {

class StepFunction {
 public:
  /// Validates a partition 0 = t_0 < ... < t_m = 1 and non-increasing values,
  /// then merges adjacent equal values. Throws NotPartition / NotMonotone.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double c);

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return values_.size(); }

  double front() const noexcept { return values_.front(); }
  double back() const noexcept { return values_.back(); }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Disjoint sorted union of half-open intervals [a_k, b_k) inside [0,1].
/// Touching intervals are merged; the empty set is allowed.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

  static IntervalSet whole() { return IntervalSet({{0.0, 1.0}}); }
  /// [0, t)
  static IntervalSet prefix(double t);
  /// [1 - t, 1)
  static IntervalSet suffix(double t);

  std::span<const std::pair<double, double>> intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  double measure() const noexcept;

  /// Image under s -> 1 - s. Integrating g(f(1 - s)) over K equals
  /// integrating g(f(u)) over reflected(K).
  IntervalSet reflected() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// Result of integrating a logarithm: finite, or -infinity when a zero value
/// meets the domain with positive measure.
class ExtendedLog {
 public:
  static ExtendedLog finite(double v);
  static ExtendedLog neg_infinity() noexcept { return ExtendedLog(); }

  bool is_neg_infinity() const noexcept { return neg_inf_; }
  /// The finite value, or -inf.
  double value() const noexcept;
  /// exp(value), 0 for the sentinel.
  double exp() const noexcept;

  friend bool operator==(const ExtendedLog&, const ExtendedLog&) = default;

 private:
  ExtendedLog() = default;
  double value_ = 0.0;
  bool neg_inf_ = true;
};

StepFunction make_step(std::vector<double> breaks, std::vector<double> vals);

/// Value of the piece [t_{i-1}, t_i) containing t; requires 0 <= t < 1.
double eval_right(const StepFunction& f, double t);
/// Value of the piece (t_{i-1}, t_i] containing t; requires 0 < t <= 1.
double eval_left(const StepFunction& f, double t);

/// s -> -eval_left(f, 1 - s). For f = mu(x) with x >= 0 this is lambda(-x).
StepFunction reflect_neg(const StepFunction& f);

/// Step function whose left evaluation at t is 1 / eval_right(f, 1 - t).
StepFunction invert_flip(const StepFunction& f);

/// Exact sum over pieces of m(piece ∩ K) * log(v_piece).
ExtendedLog integrate_log(const StepFunction& f, const IntervalSet& k);

/// Decreasing rearrangement of a simple function given as (value, measure)
/// pairs whose measures sum to 1.
StepFunction rearrange(std::vector<std::pair<double, double>> pieces);

/// Exact sum over pieces of m(piece ∩ K) * phi(v_piece). Pieces that miss K
/// contribute nothing even if phi(v) is infinite.
double integrate(const StepFunction& f, const IntervalSet& k,
                 const std::function<double(double)>& phi);

/// Values v_1 >= ... >= v_n placed on the uniform pieces [(j-1)/n, j/n).
StepFunction uniform_step(std::span<const double> descending_values);

StepFunction shift(const StepFunction& f, double a);
StepFunction scale(const StepFunction& f, double alpha);

/// Largest |f - g| over the common refinement, ignoring slivers of width
/// below `sliver` (breakpoints that differ only by rounding).
double max_discrepancy(const StepFunction& f, const StepFunction& g, double sliver = 1e-12);

/// Union of the interior breakpoints of f and g plus the endpoint 1.
std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g);

}  // namespace logmaj
