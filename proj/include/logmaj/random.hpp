#pragma once

// Seeded generators for checker inputs. Every trial gets its own seed derived
// from (master seed, checker id, dimension, trial index) with splitmix64, so a
// trial can be regenerated in isolation and results do not depend on the
// order in which trials run.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "logmaj/matrix.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

/// splitmix64 step: advances state and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

std::uint64_t derive_seed(std::uint64_t master, std::string_view checker, std::size_t dim, std::size_t trial) noexcept;

/// Deterministic stream of sub-seeds and uniforms.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept { return splitmix64(state_); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform on {lo, ..., hi}.
  std::size_t integer(std::size_t lo, std::size_t hi) noexcept;

 private:
  std::uint64_t state_;
};

/// Entries i.i.d. standard complex Gaussian (real and imaginary parts N(0, 1/2)).
ComplexMatrix gen_gaussian(std::size_t n, std::uint64_t seed);

/// Gaussian rescaled to operator norm (1 - delta) * U with U ~ Uniform(0, 1).
ComplexMatrix gen_contraction(std::size_t n, std::uint64_t seed, double delta);

/// g^*g rescaled the same way: positive semidefinite with norm <= 1 - delta.
ComplexMatrix gen_positive_contraction(std::size_t n, std::uint64_t seed, double delta);

/// Haar eigenbasis with eigenvalues log-uniform in [0.1, 10].
ComplexMatrix gen_positive_invertible(std::size_t n, std::uint64_t seed);

/// Haar singular vectors with singular values log-uniform in [0.1, 3].
ComplexMatrix gen_invertible(std::size_t n, std::uint64_t seed);

/// Hermitian part of a Gaussian matrix.
ComplexMatrix gen_hermitian(std::size_t n, std::uint64_t seed);

struct MatrixPair {
  ComplexMatrix x;
  ComplexMatrix y;
};

/// Positive invertible x, y in independent Haar bases with mu(x) ≺≺_log mu(y):
/// log-eigenvalues of y are those of x plus a non-increasing shift with
/// non-negative sum, so every partial sum of the shift is non-negative.
MatrixPair gen_log_submaj_pair(std::size_t n, std::uint64_t seed);

/// k ~ Uniform{1..k_max} intervals from 2k sorted uniforms. With snap_n > 0
/// the endpoints are rounded to the grid j/snap_n (falling back to a single
/// random piece if everything collapses).
IntervalSet gen_interval_set(std::uint64_t seed, std::size_t k_max, std::size_t snap_n = 0);

}  // namespace logmaj
