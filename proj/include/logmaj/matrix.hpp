#pragma once

// Dense square complex matrices and the Jacobi kernels built on them.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace logmaj {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// n x n zero matrix.
  explicit ComplexMatrix(std::size_t n);
  /// Row-major entries; throws DimensionMismatch unless entries.size() == n*n.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex a);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex a, ComplexMatrix m);
ComplexMatrix operator-(ComplexMatrix m);

ComplexMatrix adjoint(const ComplexMatrix& x);
/// (x + x*) / 2
ComplexMatrix real_part(const ComplexMatrix& x);
/// (x - x*) / 2i
ComplexMatrix imag_part(const ComplexMatrix& x);
/// x + a*I
ComplexMatrix add_identity(ComplexMatrix x, Complex a);

double frobenius_norm(const ComplexMatrix& x);
/// ||x - x*||_F
double hermiticity_residual(const ComplexMatrix& x);
Complex trace(const ComplexMatrix& x);

struct JacobiOptions {
  /// Convergence threshold relative to ||.||_F.
  double tol = 1e-14;
  /// Accepted ||h - h*||_F / ||h||_F for Hermitian input.
  double hermitian_tol = 1e-10;
  int max_sweeps = 30;
};

/// Eigenvalues sorted descending, eigenvectors in the columns of `basis`.
struct SpectralData {
  std::vector<double> eigenvalues;
  ComplexMatrix basis;
};

/// x = left * diag(sigma) * right^*, sigma sorted descending.
struct SingularData {
  ComplexMatrix left;
  std::vector<double> sigma;
  ComplexMatrix right;
};

/// Cyclic two-sided Jacobi for Hermitian matrices.
SpectralData herm_eig(const ComplexMatrix& h, const JacobiOptions& opts = {});

/// One-sided (Hestenes) Jacobi SVD.
SingularData svd(const ComplexMatrix& x, const JacobiOptions& opts = {});

/// Inverse through the SVD. Throws Singular when sigma_min < 1e-13 sigma_max.
ComplexMatrix inverse(const ComplexMatrix& x);

/// (x - iI)(x + iI)^{-1}
ComplexMatrix cayley(const ComplexMatrix& x);

/// Haar-distributed unitary: Gram-Schmidt QR of a complex Gaussian matrix,
/// which yields R with positive real diagonal. Deterministic per seed.
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Largest singular value.
double op_norm(const ComplexMatrix& x);

/// basis * diag(f(eigenvalues)) * basis^* for Hermitian h.
ComplexMatrix apply_hermitian(const ComplexMatrix& h, const std::function<double(double)>& f);

/// (x^* x)^{1/2}
ComplexMatrix abs(const ComplexMatrix& x);

}  // namespace logmaj
