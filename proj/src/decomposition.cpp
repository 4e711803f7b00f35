#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "logmaj/error.hpp"
#include "logmaj/matrix.hpp"

namespace logmaj {

namespace {

// Unitary J acting on coordinates (p, q):
//   J = [[c, -s*phase], [s*conj(phase), c]]
// chosen so that J^* [[alpha, beta], [conj(beta), gamma]] J is diagonal,
// where phase = beta / |beta|.
struct Rotation {
  double c;
  double s;
  Complex phase;
};

Rotation jacobi_rotation(double alpha, double gamma, Complex beta) {
  const double b = std::abs(beta);
  const double tau = (gamma - alpha) / (2.0 * b);
  const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, beta / b};
}

// x <- x J
void rotate_columns(ComplexMatrix& x, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex sp = r.s * r.phase;
  const Complex sc = r.s * std::conj(r.phase);
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Complex xp = x(k, p);
    const Complex xq = x(k, q);
    x(k, p) = r.c * xp + sc * xq;
    x(k, q) = -sp * xp + r.c * xq;
  }
}

// x <- J^* x
void rotate_rows(ComplexMatrix& x, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex sp = r.s * r.phase;
  const Complex sc = r.s * std::conj(r.phase);
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Complex xp = x(p, k);
    const Complex xq = x(q, k);
    x(p, k) = r.c * xp + sp * xq;
    x(q, k) = -sc * xp + r.c * xq;
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

std::vector<std::size_t> descending_order(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

ComplexMatrix permute_columns(const ComplexMatrix& x, const std::vector<std::size_t>& order) {
  ComplexMatrix y(x.dim());
  for (std::size_t j = 0; j < order.size(); ++j)
    for (std::size_t i = 0; i < x.dim(); ++i) y(i, j) = x(i, order[j]);
  return y;
}

// Orthogonalizes column j of q against columns [0, j) twice, then normalizes.
// Returns the norm before normalization.
double orthonormalize_column(ComplexMatrix& q, std::size_t j, std::size_t against) {
  const std::size_t n = q.dim();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < against; ++i) {
      Complex r{};
      for (std::size_t k = 0; k < n; ++k) r += std::conj(q(k, i)) * q(k, j);
      for (std::size_t k = 0; k < n; ++k) q(k, j) -= r * q(k, i);
    }
  }
  double norm = 0.0;
  for (std::size_t k = 0; k < n; ++k) norm += std::norm(q(k, j));
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (std::size_t k = 0; k < n; ++k) q(k, j) /= norm;
  return norm;
}

}  // namespace

SpectralData herm_eig(const ComplexMatrix& h, const JacobiOptions& opts) {
  const std::size_t n = h.dim();
  const double norm = frobenius_norm(h);
  if (hermiticity_residual(h) > opts.hermitian_tol * norm) {
    throw Error(ErrorCode::kNotHermitian, "herm_eig input is not Hermitian");
  }
  ComplexMatrix a = real_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= opts.tol * norm) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = a(p, q);
        if (beta == Complex{}) continue;
        const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), beta);
        rotate_columns(a, p, q, r);
        rotate_rows(a, p, q, r);
        rotate_columns(v, p, q, r);
        a(p, q) = a(q, p) = Complex{};
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) throw Error(ErrorCode::kNoConvergence, "Hermitian Jacobi exceeded the sweep cap");

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);
  SpectralData out;
  out.eigenvalues.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.eigenvalues[j] = diag[order[j]];
  out.basis = permute_columns(v, order);
  return out;
}

SingularData svd(const ComplexMatrix& x, const JacobiOptions& opts) {
  const std::size_t n = x.dim();
  ComplexMatrix w = x;
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          gamma += std::conj(w(k, p)) * w(k, q);
        }
        if (gamma == Complex{} || std::abs(gamma) <= opts.tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Rotation r = jacobi_rotation(alpha, beta, gamma);
        rotate_columns(w, p, q, r);
        rotate_columns(v, p, q, r);
      }
    }
    if (!rotated) {
      converged = true;
      break;
    }
  }
  if (!converged) throw Error(ErrorCode::kNoConvergence, "one-sided Jacobi exceeded the sweep cap");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(w(k, j));
    norms[j] = std::sqrt(s);
  }
  const auto order = descending_order(norms);
  SingularData out;
  out.sigma.resize(n);
  out.left = ComplexMatrix(n);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double sj = norms[order[j]];
    out.sigma[j] = sj;
    if (sj > 0.0) {
      for (std::size_t k = 0; k < n; ++k) out.left(k, j) = w(k, order[j]) / sj;
      ++rank;
    }
  }
  // Complete the left factor on the null space with canonical basis vectors.
  std::size_t candidate = 0;
  for (std::size_t j = rank; j < n; ++j) {
    for (; candidate < n; ++candidate) {
      for (std::size_t k = 0; k < n; ++k) out.left(k, j) = k == candidate ? 1.0 : 0.0;
      if (orthonormalize_column(out.left, j, j) > 0.5) {
        ++candidate;
        break;
      }
    }
  }
  out.right = permute_columns(v, order);
  return out;
}

ComplexMatrix inverse(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  const SingularData d = svd(x);
  if (n == 0) return x;
  const double smax = d.sigma.front();
  const double smin = d.sigma.back();
  if (smax == 0.0 || smin < 1e-13 * smax) {
    throw Error(ErrorCode::kSingular, "matrix is numerically singular");
  }
  ComplexMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += d.right(i, k) * std::conj(d.left(j, k)) / d.sigma[k];
      inv(i, j) = s;
    }
  return inv;
}

ComplexMatrix cayley(const ComplexMatrix& x) {
  const Complex i{0.0, 1.0};
  return add_identity(x, -i) * inverse(add_identity(x, i));
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      q(i, j) = Complex(re, im);
    }
  // Gram-Schmidt leaves R with a positive diagonal, so Q is Haar distributed.
  for (std::size_t j = 0; j < n; ++j) orthonormalize_column(q, j, j);
  return q;
}

double op_norm(const ComplexMatrix& x) {
  if (x.dim() == 0) return 0.0;
  return svd(x).sigma.front();
}

ComplexMatrix apply_hermitian(const ComplexMatrix& h, const std::function<double(double)>& f) {
  const SpectralData d = herm_eig(h);
  const std::size_t n = h.dim();
  std::vector<double> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(d.eigenvalues[k]);
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += d.basis(i, k) * fl[k] * std::conj(d.basis(j, k));
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix abs(const ComplexMatrix& x) {
  const SingularData d = svd(x);
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += d.right(i, k) * d.sigma[k] * std::conj(d.right(j, k));
      out(i, j) = s;
    }
  return out;
}

}  // namespace logmaj
