#pragma once

// Matrices in (M_n, tau_n) mapped to their singular-value and spectral-scale
// step functions, plus the determinant functionals built from them.

#include <cstddef>

#include "logmaj/matrix.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

/// tau_n(x) = tr(x) / n, so tau_n(I) = 1.
Complex normalized_trace(const ComplexMatrix& x);

/// Singular values on the pieces [(j-1)/n, j/n).
StepFunction mu(const ComplexMatrix& x);

/// Eigenvalues of a Hermitian matrix, descending, on [(j-1)/n, j/n).
StepFunction lambda_scale(const ComplexMatrix& h);

/// Fuglede-Kadison determinant in log form: mean of log s_j, or -inf.
ExtendedLog log_fk_det(const ComplexMatrix& x);

/// (det |x|)^{1/n}; 0 when some singular value is exactly zero.
double fk_det(const ComplexMatrix& x);

/// exp of the integral of log mu_s(x) over [0, t]; t in (0, 1].
double big_lambda(const ComplexMatrix& x, double t);

enum class DyadicMode {
  /// Snap eigenvalues up to the grid j*||x||/2^k (x_k >= x, offset 0).
  kFromAbove,
  /// Snap eigenvalues down to delta + j*a/2^k with delta = lambda_min,
  /// a = ||x|| - delta (x_k <= x); requires x invertible.
  kFromBelow,
};

struct DyadicApprox {
  ComplexMatrix matrix;
  double offset;
  /// Grid range; ||x - x_k|| <= range / 2^k.
  double range;
};

/// Spectral discretization of a positive matrix on a dyadic grid of level k,
/// keeping the eigenbasis. Throws NotPositive.
DyadicApprox dyadic_approx(const ComplexMatrix& x, unsigned k, DyadicMode mode = DyadicMode::kFromAbove);

/// Throws NotPositive unless x is Hermitian with lambda_min >= -tol * ||x||.
void require_positive(const ComplexMatrix& x, double tol = 1e-12);

}  // namespace logmaj
