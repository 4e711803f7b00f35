#include "logmaj/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace logmaj {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view checker, std::size_t dim,
                          std::size_t trial) noexcept {
  // FNV-1a of the checker id, folded into splitmix64 together with the rest.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : checker) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t state = master;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t part : {h, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(trial)}) {
    state ^= part + out;
    out = splitmix64(state);
  }
  return out;
}

double SeedStream::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t SeedStream::integer(std::size_t lo, std::size_t hi) noexcept {
  return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1));
}

namespace {

double log_uniform(SeedStream& s, double lo, double hi) { return std::exp(s.uniform(std::log(lo), std::log(hi))); }

// (1 - delta) * U, kept away from 1 - delta itself so rounding in the
// rescaling cannot push the norm over the margin.
double target_norm(SeedStream& s, double delta) { return (1.0 - delta) * s.uniform() * (1.0 - 1e-12); }

ComplexMatrix with_basis(const ComplexMatrix& left, std::span<const double> d, const ComplexMatrix& right) {
  return left * ComplexMatrix::diagonal(d) * adjoint(right);
}

}  // namespace

ComplexMatrix gen_gaussian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> entries(n * n);
  for (auto& e : entries) {
    const double re = normal(rng);
    e = Complex(re, normal(rng));
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix gen_contraction(std::size_t n, std::uint64_t seed, double delta) {
  SeedStream s(seed);
  const ComplexMatrix g = gen_gaussian(n, s.next());
  const double norm = op_norm(g);
  return Complex(target_norm(s, delta) / norm) * g;
}

ComplexMatrix gen_positive_contraction(std::size_t n, std::uint64_t seed, double delta) {
  SeedStream s(seed);
  const ComplexMatrix g = gen_gaussian(n, s.next());
  const ComplexMatrix h = real_part(adjoint(g) * g);
  const double top = herm_eig(h).eigenvalues.front();
  return Complex(target_norm(s, delta) / top) * h;
}

ComplexMatrix gen_positive_invertible(std::size_t n, std::uint64_t seed) {
  SeedStream s(seed);
  const ComplexMatrix v = haar_unitary(n, s.next());
  std::vector<double> eig(n);
  for (auto& e : eig) e = log_uniform(s, 0.1, 10.0);
  return real_part(with_basis(v, eig, v));
}

ComplexMatrix gen_invertible(std::size_t n, std::uint64_t seed) {
  SeedStream s(seed);
  const ComplexMatrix left = haar_unitary(n, s.next());
  const ComplexMatrix right = haar_unitary(n, s.next());
  std::vector<double> sigma(n);
  for (auto& v : sigma) v = log_uniform(s, 0.1, 3.0);
  return with_basis(left, sigma, right);
}

ComplexMatrix gen_hermitian(std::size_t n, std::uint64_t seed) { return real_part(gen_gaussian(n, seed)); }

MatrixPair gen_log_submaj_pair(std::size_t n, std::uint64_t seed) {
  SeedStream s(seed);
  const ComplexMatrix vx = haar_unitary(n, s.next());
  const ComplexMatrix vy = haar_unitary(n, s.next());
  std::vector<double> base(n);
  std::vector<double> shift(n);
  for (auto& b : base) b = s.uniform(std::log(0.1), std::log(10.0));
  for (auto& c : shift) c = s.uniform(-1.0, 1.0);
  std::sort(base.begin(), base.end(), std::greater<>());
  std::sort(shift.begin(), shift.end(), std::greater<>());
  double mean = 0.0;
  for (double c : shift) mean += c / static_cast<double>(n);
  const double lift = s.uniform(0.0, 0.3);
  std::vector<double> ex(n);
  std::vector<double> ey(n);
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = std::exp(base[i]);
    ey[i] = std::exp(base[i] + shift[i] - mean + lift);
  }
  return {real_part(with_basis(vx, ex, vx)), real_part(with_basis(vy, ey, vy))};
}

IntervalSet gen_interval_set(std::uint64_t seed, std::size_t k_max, std::size_t snap_n) {
  SeedStream s(seed);
  const std::size_t k = s.integer(1, std::max<std::size_t>(k_max, 1));
  std::vector<double> cuts(2 * k);
  for (auto& c : cuts) c = s.uniform();
  std::sort(cuts.begin(), cuts.end());
  if (snap_n > 0) {
    const double n = static_cast<double>(snap_n);
    for (auto& c : cuts) c = std::round(c * n) / n;
  }
  std::vector<std::pair<double, double>> ivs;
  for (std::size_t i = 0; i < k; ++i) {
    if (cuts[2 * i] < cuts[2 * i + 1]) ivs.emplace_back(cuts[2 * i], cuts[2 * i + 1]);
  }
  if (ivs.empty()) {
    if (snap_n == 0) return IntervalSet::whole();
    const auto j = static_cast<double>(s.integer(0, snap_n - 1));
    const double n = static_cast<double>(snap_n);
    ivs.emplace_back(j / n, (j + 1.0) / n);
  }
  return IntervalSet(std::move(ivs));
}

}  // namespace logmaj
