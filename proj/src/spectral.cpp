#include "logmaj/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logmaj/error.hpp"

namespace logmaj {

namespace {

// Snaps q to the nearest integer when it sits within rounding distance of it,
// so grid points stay fixed under discretization.
double snap_integer(double q) {
  const double r = std::round(q);
  return std::abs(q - r) <= 1e-9 * std::max(1.0, std::abs(q)) ? r : q;
}

ComplexMatrix rebuild(const ComplexMatrix& basis, const std::vector<double>& values) {
  const std::size_t n = basis.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += basis(i, k) * values[k] * std::conj(basis(j, k));
      out(i, j) = s;
    }
  return out;
}

}  // namespace

Complex normalized_trace(const ComplexMatrix& x) {
  return trace(x) / static_cast<double>(x.dim());
}

StepFunction mu(const ComplexMatrix& x) { return uniform_step(svd(x).sigma); }

StepFunction lambda_scale(const ComplexMatrix& h) { return uniform_step(herm_eig(h).eigenvalues); }

ExtendedLog log_fk_det(const ComplexMatrix& x) {
  const auto sigma = svd(x).sigma;
  double acc = 0.0;
  for (double s : sigma) {
    if (s == 0.0) return ExtendedLog::neg_infinity();
    acc += std::log(s);
  }
  return ExtendedLog::finite(acc / static_cast<double>(sigma.size()));
}

double fk_det(const ComplexMatrix& x) { return log_fk_det(x).exp(); }

double big_lambda(const ComplexMatrix& x, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kOutOfDomain, "big_lambda needs 0 < t <= 1, got " + std::to_string(t));
  }
  return integrate_log(mu(x), IntervalSet::prefix(t)).exp();
}

void require_positive(const ComplexMatrix& x, double tol) {
  const double norm = frobenius_norm(x);
  if (hermiticity_residual(x) > 1e-10 * norm) {
    throw Error(ErrorCode::kNotPositive, "matrix is not Hermitian");
  }
  const auto eig = herm_eig(x).eigenvalues;
  if (!eig.empty() && eig.back() < -tol * std::max(norm, 1.0)) {
    throw Error(ErrorCode::kNotPositive,
                "matrix has a negative eigenvalue " + std::to_string(eig.back()));
  }
}

DyadicApprox dyadic_approx(const ComplexMatrix& x, unsigned k, DyadicMode mode) {
  require_positive(x);
  const SpectralData d = herm_eig(x);
  std::vector<double> lam = d.eigenvalues;
  for (double& l : lam) l = std::max(l, 0.0);
  const double top = lam.front();
  const double cells = std::ldexp(1.0, static_cast<int>(k));

  if (mode == DyadicMode::kFromAbove) {
    if (top == 0.0) return {x, 0.0, 0.0};
    const double h = top / cells;
    for (double& l : lam) {
      const double j = std::clamp(std::ceil(snap_integer(l / h)), 0.0, cells);
      l = j * h;
    }
    return {rebuild(d.basis, lam), 0.0, top};
  }

  const double offset = lam.back();
  if (!(offset > 0.0)) {
    throw Error(ErrorCode::kNotPositive, "snapping from below requires an invertible matrix");
  }
  const double range = top - offset;
  if (range == 0.0) return {x, offset, 0.0};
  const double h = range / cells;
  for (double& l : lam) {
    const double j = std::clamp(std::floor(snap_integer((l - offset) / h)), 0.0, cells - 1.0);
    l = offset + j * h;
  }
  return {rebuild(d.basis, lam), offset, range};
}

}  // namespace logmaj
