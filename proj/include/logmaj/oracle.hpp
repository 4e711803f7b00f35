#pragma once

// Closed-form reference computations for diagonal and scalar inputs. Nothing
// here touches the Jacobi kernels.

#include <cstddef>
#include <vector>

#include "logmaj/matrix.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

struct DiagonalSpec {
  std::vector<Complex> entries;
};

/// |d_j| sorted descending on the uniform pieces.
StepFunction diag_mu(const DiagonalSpec& spec);

/// Midpoint Riemann sum of log f over K with m subintervals per interval.
/// Throws ZeroOnK if f vanishes at a sample point.
double brute_integral(const StepFunction& f, const IntervalSet& k, std::size_t m);

struct ScalarHarnack {
  double middle;
  double upper;
  double lower;
};

/// (1+r)/(1-r), (1+r)/(1-r), (1-r)/(1+r). Throws OutOfRange unless 0 <= r < 1.
ScalarHarnack scalar_harnack(double r);

}  // namespace logmaj
