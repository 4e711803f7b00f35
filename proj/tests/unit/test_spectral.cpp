#include <cmath>

#include <doctest.h>

#include "logmaj/error.hpp"
#include "logmaj/random.hpp"
#include "logmaj/spectral.hpp"
#include "property.hpp"

using namespace logmaj;
using logmaj::testing::for_all_seeds;

namespace {

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(std::span<const double>(d)); }

// Grid points k/(2n) strictly inside (0, 1).
std::vector<double> grid(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k < 2 * n; ++k) out.push_back(static_cast<double>(k) / static_cast<double>(2 * n));
  return out;
}

}  // namespace

TEST_CASE("mu and lambda_scale") {
  CHECK(mu(diag({3.0, 1.0})) == make_step({0.0, 0.5, 1.0}, {3.0, 1.0}));
  CHECK(max_discrepancy(mu(haar_unitary(4, 8)), StepFunction::constant(1.0)) < 1e-13);
  const ComplexMatrix x = gen_gaussian(3, 4);
  CHECK(max_discrepancy(mu(Complex(0.0, -2.5) * x), scale(mu(x), 2.5)) < 1e-13);
  CHECK(lambda_scale(diag({1.0, -2.0})) == make_step({0.0, 0.5, 1.0}, {1.0, -2.0}));
  const ComplexMatrix p = gen_positive_invertible(4, 2);
  CHECK(max_discrepancy(lambda_scale(p), mu(p)) < 1e-12);
  const ComplexMatrix h = gen_hermitian(4, 6);
  CHECK(max_discrepancy(lambda_scale(add_identity(h, 1.5)), shift(lambda_scale(h), 1.5)) < 1e-12);
}

TEST_CASE("determinants") {
  CHECK(fk_det(diag({3.0, 1.0})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(fk_det(diag({3.0, 1.0})) == doctest::Approx(1.7320508).epsilon(1e-7));
  CHECK(fk_det(ComplexMatrix::identity(5)) == doctest::Approx(1.0));
  CHECK(fk_det(diag({2.0, 0.0})) == 0.0);
  CHECK(log_fk_det(diag({2.0, 0.0})).is_neg_infinity());
  const ComplexMatrix x = gen_gaussian(4, 9);
  CHECK(big_lambda(x, 1.0) == doctest::Approx(fk_det(x)).epsilon(1e-14));
  CHECK(big_lambda(haar_unitary(3, 1), 0.4) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(big_lambda(diag({8.0, 2.0}), 0.5) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(big_lambda(diag({8.0, 2.0}), 0.5) == doctest::Approx(2.8284271).epsilon(1e-7));
  CHECK_THROWS_AS(big_lambda(x, 0.0), Error);
  CHECK(normalized_trace(ComplexMatrix::identity(7)) == Complex(1.0, 0.0));
}

TEST_CASE("dyadic_approx") {
  const ComplexMatrix on_grid = diag({1.0, 0.5});
  CHECK(frobenius_norm(dyadic_approx(on_grid, 1).matrix - on_grid) < 1e-14);
  const DyadicApprox below = dyadic_approx(diag({0.3, 0.8}), 1, DyadicMode::kFromBelow);
  CHECK(below.offset == doctest::Approx(0.3));
  CHECK(below.range == doctest::Approx(0.5));
  CHECK(frobenius_norm(below.matrix - diag({0.3, 0.55})) < 1e-14);
  CHECK_THROWS_AS(dyadic_approx(diag({1.0, -0.5}), 3), Error);
  CHECK_THROWS_AS(dyadic_approx(diag({1.0, 0.0}), 3, DyadicMode::kFromBelow), Error);
}

TEST_CASE("property: mu is invariant under adjoint and absolute value") {
  for_all_seeds(31, 150, [](std::uint64_t seed) {
    SeedStream s(seed);
    const ComplexMatrix x = gen_gaussian(s.integer(1, 8), s.next());
    CHECK(max_discrepancy(mu(x), mu(adjoint(x))) <= 1e-12 * op_norm(x));
    CHECK(max_discrepancy(mu(x), mu(abs(x))) <= 1e-12 * op_norm(x));
  });
}

TEST_CASE("property: singular numbers of products and sums on grid points") {
  for_all_seeds(32, 150, [](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix x = gen_gaussian(n, s.next());
    const ComplexMatrix y = gen_gaussian(n, s.next());
    const ComplexMatrix hx = gen_hermitian(n, s.next());
    const ComplexMatrix hy = gen_hermitian(n, s.next());
    const StepFunction fx = mu(x), fy = mu(y), fxy = mu(x * y), fsum = mu(x + y);
    const StepFunction lx = lambda_scale(hx), ly = lambda_scale(hy), lsum = lambda_scale(hx + hy);
    const auto g = grid(n);
    for (double t : g) {
      for (double u : g) {
        if (t + u >= 1.0) continue;
        const double slack = 1e-10 * (1.0 + fx.front() * fy.front());
        CHECK(eval_right(fxy, t + u) <= eval_right(fx, t) * eval_right(fy, u) + slack);
        CHECK(eval_right(fsum, t + u) <= eval_right(fx, t) + eval_right(fy, u) + slack);
        CHECK(eval_right(lsum, t + u) <= eval_right(lx, t) + eval_right(ly, u) + slack);
      }
    }
  });
}

TEST_CASE("property: monotonicity of mu and fk_det under the operator order") {
  for_all_seeds(33, 150, [](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix x = gen_positive_contraction(n, s.next(), 0.1);
    const ComplexMatrix y = x + gen_positive_contraction(n, s.next(), 0.1);
    REQUIRE(herm_eig(y - x).eigenvalues.back() >= -1e-12);
    const StepFunction fx = mu(x), fy = mu(y);
    for (double t : grid(n)) CHECK(eval_right(fx, t) <= eval_right(fy, t) + 1e-12);
    CHECK(fk_det(x) <= fk_det(y) * (1.0 + 1e-9));
  });
}

TEST_CASE("property: fk_det algebra") {
  for_all_seeds(34, 150, [](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix x = gen_invertible(n, s.next());
    const ComplexMatrix y = gen_invertible(n, s.next());
    const double dx = fk_det(x), dy = fk_det(y);
    CHECK(std::abs(fk_det(x * y) - dx * dy) <= 1e-9 * dx * dy);
    CHECK(fk_det(inverse(x)) == doctest::Approx(1.0 / dx).epsilon(1e-9));
    const ComplexMatrix ax = abs(x);
    for (double alpha : {0.5, 2.0, 3.0}) {
      const ComplexMatrix power = apply_hermitian(real_part(ax), [alpha](double v) { return std::pow(std::max(v, 0.0), alpha); });
      CHECK(fk_det(power) == doctest::Approx(std::pow(dx, alpha)).epsilon(1e-9));
    }
  });
}

TEST_CASE("property: fk_det(x + eps I) decreases to fk_det(x) for x >= 0") {
  for_all_seeds(35, 100, [](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 6);
    const ComplexMatrix x = gen_positive_contraction(n, s.next(), 0.1);
    double previous = std::numeric_limits<double>::infinity();
    for (double eps = 1.0; eps >= 1e-10; eps /= 10.0) {
      const double d = fk_det(add_identity(x, eps));
      CHECK(d <= previous);
      previous = d;
    }
    CHECK(previous == doctest::Approx(fk_det(x)).epsilon(1e-6));
  });
}

TEST_CASE("property: dyadic approximation error and left-limit convergence") {
  for_all_seeds(36, 60, [](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 6);
    const ComplexMatrix x = gen_positive_invertible(n, s.next());
    const StepFunction fx = mu(x);
    for (DyadicMode mode : {DyadicMode::kFromAbove, DyadicMode::kFromBelow}) {
      double previous_gap = std::numeric_limits<double>::infinity();
      for (unsigned k = 0; k <= 20; ++k) {
        const DyadicApprox a = dyadic_approx(x, k, mode);
        CHECK(op_norm(x - a.matrix) <= a.range / std::ldexp(1.0, static_cast<int>(k)) * (1.0 + 1e-9) + 1e-12);
        double gap = 0.0;
        for (double t : grid(n)) gap = std::max(gap, std::abs(eval_left(mu(a.matrix), t) - eval_left(fx, t)));
        if (k >= 1) CHECK(gap <= previous_gap + 1e-12);
        previous_gap = gap;
      }
      CHECK(previous_gap <= 1e-5);
    }
  });
}
