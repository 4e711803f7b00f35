#include "logmaj/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "logmaj/error.hpp"

namespace logmaj {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Drops zero-width pieces and merges equal neighbours before validation.
// Used by transforms whose rounded breakpoints may collapse.
StepFunction canonical(const std::vector<double>& breaks, const std::vector<double>& vals) {
  std::vector<double> b{0.0};
  std::vector<double> v;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double right = breaks[i + 1];
    if (!(right > b.back())) continue;
    if (!v.empty() && v.back() == vals[i]) {
      b.back() = right;
    } else {
      v.push_back(vals[i]);
      b.push_back(right);
    }
  }
  return StepFunction(std::move(b), std::move(v));
}

std::vector<double> reversed_breakpoints(std::span<const double> breaks) {
  std::vector<double> out(breaks.size());
  const std::size_t m = breaks.size() - 1;
  for (std::size_t i = 0; i <= m; ++i) out[i] = 1.0 - breaks[m - i];
  out.front() = 0.0;
  out.back() = 1.0;
  return out;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty() || breakpoints_.size() != values_.size() + 1) {
    throw Error(ErrorCode::kNotPartition,
                "need one more breakpoint than values (got " + std::to_string(breakpoints_.size()) +
                    " and " + std::to_string(values_.size()) + ")");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw Error(ErrorCode::kNotPartition, "breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw Error(ErrorCode::kNotPartition, "breakpoints must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw Error(ErrorCode::kNotMonotone, "non-finite value");
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw Error(ErrorCode::kNotMonotone, "values must be non-increasing");
    }
  }
  // merge equal neighbours in place
  std::size_t w = 0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[w]) {
      breakpoints_[w + 1] = breakpoints_[i + 1];
    } else {
      ++w;
      values_[w] = values_[i];
      breakpoints_[w + 1] = breakpoints_[i + 1];
    }
  }
  values_.resize(w + 1);
  breakpoints_.resize(w + 2);
}

StepFunction StepFunction::constant(double c) { return StepFunction({0.0, 1.0}, {c}); }

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals) {
  for (const auto& [a, b] : intervals) {
    if (!(a >= 0.0 && b <= 1.0 && a < b)) {
      throw Error(ErrorCode::kInvalidIntervals, "interval [" + std::to_string(a) + ", " +
                                                    std::to_string(b) + ") not inside [0,1]");
    }
    if (!intervals_.empty()) {
      if (a < intervals_.back().second) {
        throw Error(ErrorCode::kInvalidIntervals, "intervals must be sorted and disjoint");
      }
      if (a == intervals_.back().second) {
        intervals_.back().second = b;
        continue;
      }
    }
    intervals_.emplace_back(a, b);
  }
}

IntervalSet IntervalSet::prefix(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::kOutOfDomain, "prefix length outside [0,1]");
  if (t == 0.0) return {};
  return IntervalSet({{0.0, t}});
}

IntervalSet IntervalSet::suffix(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::kOutOfDomain, "suffix length outside [0,1]");
  if (t == 0.0) return {};
  return IntervalSet({{1.0 - t, 1.0}});
}

double IntervalSet::measure() const noexcept {
  double m = 0.0;
  for (const auto& [a, b] : intervals_) m += b - a;
  return m;
}

IntervalSet IntervalSet::reflected() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(intervals_.size());
  for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it) {
    double a = 1.0 - it->second;
    double b = 1.0 - it->first;
    if (b > a) out.emplace_back(a, b);
  }
  return IntervalSet(std::move(out));
}

ExtendedLog ExtendedLog::finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::kOutOfDomain, "ExtendedLog::finite needs a finite value");
  ExtendedLog out;
  out.value_ = v;
  out.neg_inf_ = false;
  return out;
}

double ExtendedLog::value() const noexcept { return neg_inf_ ? kNegInf : value_; }

double ExtendedLog::exp() const noexcept { return neg_inf_ ? 0.0 : std::exp(value_); }

StepFunction make_step(std::vector<double> breaks, std::vector<double> vals) {
  return StepFunction(std::move(breaks), std::move(vals));
}

double eval_right(const StepFunction& f, double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw Error(ErrorCode::kOutOfDomain, "eval_right needs 0 <= t < 1, got " + std::to_string(t));
  }
  auto b = f.breakpoints();
  auto it = std::upper_bound(b.begin(), b.end(), t);
  return f.values()[static_cast<std::size_t>(it - b.begin()) - 1];
}

double eval_left(const StepFunction& f, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kOutOfDomain, "eval_left needs 0 < t <= 1, got " + std::to_string(t));
  }
  auto b = f.breakpoints();
  auto it = std::lower_bound(b.begin(), b.end(), t);
  return f.values()[static_cast<std::size_t>(it - b.begin()) - 1];
}

StepFunction reflect_neg(const StepFunction& f) {
  auto v = f.values();
  if (std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0; })) {
    throw Error(ErrorCode::kNegativeValues, "reflect_neg expects a non-negative step function");
  }
  std::vector<double> vals(v.rbegin(), v.rend());
  for (double& x : vals) x = -x;
  return canonical(reversed_breakpoints(f.breakpoints()), vals);
}

StepFunction invert_flip(const StepFunction& f) {
  auto v = f.values();
  if (std::any_of(v.begin(), v.end(), [](double x) { return !(x > 0.0); })) {
    throw Error(ErrorCode::kNotInvertible, "invert_flip expects strictly positive values");
  }
  std::vector<double> vals(v.rbegin(), v.rend());
  for (double& x : vals) x = 1.0 / x;
  return canonical(reversed_breakpoints(f.breakpoints()), vals);
}

double integrate(const StepFunction& f, const IntervalSet& k,
                 const std::function<double(double)>& phi) {
  auto b = f.breakpoints();
  auto v = f.values();
  auto ivs = k.intervals();
  double sum = 0.0;
  std::size_t piece = 0;
  for (const auto& [lo, hi] : ivs) {
    while (piece < v.size() && b[piece + 1] <= lo) ++piece;
    for (std::size_t p = piece; p < v.size() && b[p] < hi; ++p) {
      double overlap = std::min(hi, b[p + 1]) - std::max(lo, b[p]);
      if (overlap <= 0.0) continue;
      double g = phi(v[p]);
      if (g == kNegInf) return kNegInf;
      sum += overlap * g;
    }
  }
  return sum;
}

ExtendedLog integrate_log(const StepFunction& f, const IntervalSet& k) {
  double s = integrate(f, k, [](double v) { return v > 0.0 ? std::log(v) : kNegInf; });
  return s == kNegInf ? ExtendedLog::neg_infinity() : ExtendedLog::finite(s);
}

StepFunction rearrange(std::vector<std::pair<double, double>> pieces) {
  double total = 0.0;
  for (const auto& [value, m] : pieces) {
    if (!(m >= 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::kMeasureMismatch, "pieces need finite values and non-negative measures");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kMeasureMismatch, "measures sum to " + std::to_string(total) + ", not 1");
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<double> breaks{0.0};
  std::vector<double> vals;
  double acc = 0.0;
  for (const auto& [value, m] : pieces) {
    if (m == 0.0) continue;
    acc += m;
    breaks.push_back(acc);
    vals.push_back(value);
  }
  breaks.back() = 1.0;
  return canonical(breaks, vals);
}

StepFunction uniform_step(std::span<const double> descending_values) {
  const std::size_t n = descending_values.size();
  std::vector<double> breaks(n + 1);
  for (std::size_t j = 0; j <= n; ++j) breaks[j] = static_cast<double>(j) / static_cast<double>(n);
  return StepFunction(std::move(breaks),
                      std::vector<double>(descending_values.begin(), descending_values.end()));
}

StepFunction shift(const StepFunction& f, double a) {
  std::vector<double> vals(f.values().begin(), f.values().end());
  for (double& x : vals) x += a;
  return canonical(std::vector<double>(f.breakpoints().begin(), f.breakpoints().end()), vals);
}

StepFunction scale(const StepFunction& f, double alpha) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::kOutOfDomain, "scale factor must be non-negative");
  std::vector<double> vals(f.values().begin(), f.values().end());
  for (double& x : vals) x *= alpha;
  return canonical(std::vector<double>(f.breakpoints().begin(), f.breakpoints().end()), vals);
}

std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g) {
  std::vector<double> out;
  out.insert(out.end(), f.breakpoints().begin() + 1, f.breakpoints().end());
  out.insert(out.end(), g.breakpoints().begin() + 1, g.breakpoints().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double max_discrepancy(const StepFunction& f, const StepFunction& g, double sliver) {
  std::vector<double> grid = merged_breakpoints(f, g);
  grid.insert(grid.begin(), 0.0);
  double worst = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] - grid[i - 1] <= sliver) continue;
    double mid = 0.5 * (grid[i] + grid[i - 1]);
    worst = std::max(worst, std::abs(eval_right(f, mid) - eval_right(g, mid)));
  }
  return worst;
}

}  // namespace logmaj
