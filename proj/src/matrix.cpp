#include "logmaj/matrix.hpp"

#include <cmath>
#include <string>

#include "logmaj/error.hpp"

namespace logmaj {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kOutOfDomain, "matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex a) {
  for (Complex& z : data_) z *= a;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex a, ComplexMatrix m) { return m *= a; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = std::conj(x(j, i));
  return y;
}

ComplexMatrix real_part(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  return y;
}

ComplexMatrix imag_part(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  const Complex half_i_inv{0.0, -0.5};  // 1 / (2i)
  ComplexMatrix y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = half_i_inv * (x(i, j) - std::conj(x(j, i)));
  return y;
}

ComplexMatrix add_identity(ComplexMatrix x, Complex a) {
  for (std::size_t i = 0; i < x.dim(); ++i) x(i, i) += a;
  return x;
}

double frobenius_norm(const ComplexMatrix& x) {
  double s = 0.0;
  for (const Complex& z : x.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double hermiticity_residual(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += std::norm(x(i, j) - std::conj(x(j, i)));
  return std::sqrt(s);
}

Complex trace(const ComplexMatrix& x) {
  Complex t{};
  for (std::size_t i = 0; i < x.dim(); ++i) t += x(i, i);
  return t;
}

}  // namespace logmaj
