#include <cmath>

#include <doctest.h>

#include "logmaj/error.hpp"
#include "logmaj/random.hpp"
#include "logmaj/spectral.hpp"
#include "logmaj/submajorisation.hpp"
#include "property.hpp"

using namespace logmaj;
using logmaj::testing::for_all_seeds;
using logmaj::testing::random_step;

namespace {
ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(std::span<const double>(d)); }
}  // namespace

TEST_CASE("log_submaj basics") {
  const ComplexMatrix x = gen_gaussian(4, 1);
  const RelationReport self = log_submaj(x, x);
  CHECK(self.holds);
  CHECK(self.slack == 0.0);
  const ComplexMatrix c = gen_contraction(4, 2, 1e-3);
  CHECK(log_submaj(c, Complex(op_norm(c)) * ComplexMatrix::identity(4)).holds);
  // A zero singular value on the left is a vacuous pass.
  const RelationReport vac = log_submaj(diag({0.0, 0.0}), diag({1.0, 1.0}));
  CHECK(vac.holds);
  CHECK(std::isinf(vac.slack));
  CHECK_FALSE(log_submaj(diag({1.0, 1.0}), diag({2.0, 0.0})).holds);
}

TEST_CASE("p_submaj hand sums") {
  const ComplexMatrix ones = diag({1.0, 1.0});
  const ComplexMatrix split = diag({2.0, 0.0});
  const RelationReport ok = p_submaj(ones, split, 1.0);
  CHECK(ok.holds);
  CHECK(ok.slack == doctest::Approx(0.0));
  CHECK(ok.worst_t == 1.0);
  CHECK(p_submaj(ones, split, 2.0).holds);
  const RelationReport bad = p_submaj(split, ones, 1.0);
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst_t == 0.5);
  CHECK(bad.lhs_at_worst == doctest::Approx(1.0));
  CHECK(bad.rhs_at_worst == doctest::Approx(0.5));
  CHECK_THROWS_AS(p_submaj(ones, split, 0.0), Error);
}

TEST_CASE("remark26_battery fixed cases") {
  const ComplexMatrix x = gen_positive_invertible(3, 5);
  const Remark26Battery same = remark26_battery(x, x);
  CHECK(same.log_submaj_holds);
  CHECK(same.consistent);
  for (const auto& item : same.items) CHECK(item.report.holds);
  const Remark26Battery doubled = remark26_battery(x, Complex(2.0) * x);
  for (const auto& item : doubled.items) CHECK(item.report.holds);
  CHECK(doubled.items.size() == 11);
  CHECK_THROWS_AS(remark26_battery(diag({1.0, 0.0}), x.dim() == 2 ? x : diag({1.0, 1.0})), Error);
}

TEST_CASE("property: the relations are reflexive and transitive") {
  for_all_seeds(41, 200, [](std::uint64_t seed) {
    SeedStream s(seed);
    StepFunction f = random_step(s, 5, 0.1, 4.0);
    // g >= f and h >= g pointwise, so f ≺≺ g ≺≺ h for every relation.
    const StepFunction g = scale(f, s.uniform(1.0, 2.0));
    const StepFunction h = shift(g, s.uniform(0.0, 1.0));
    const double p = s.uniform(0.1, 3.0);
    CHECK(log_submaj(f, f).holds);
    CHECK(p_submaj(f, f, p).holds);
    CHECK(log_submaj(f, g).holds);
    CHECK(log_submaj(g, h).holds);
    CHECK(log_submaj(f, h).holds);
    CHECK(p_submaj(f, g, p).holds);
    CHECK(p_submaj(g, h, p).holds);
    CHECK(p_submaj(f, h, p).holds);
  });
}

TEST_CASE("property: breakpoint evaluation matches a dense grid") {
  for_all_seeds(42, 200, [](std::uint64_t seed) {
    SeedStream s(seed);
    const StepFunction f = random_step(s, 6, 0.1, 4.0);
    const StepFunction g = random_step(s, 6, 0.1, 4.0);
    RelationOptions dense;
    dense.evaluation = Evaluation::kDenseGrid;
    const RelationReport a = log_submaj(f, g);
    const RelationReport b = log_submaj(f, g, dense);
    // The slack is piecewise linear and starts at 0 for t = 0, so its minimum
    // sits on a breakpoint or at the origin; the grid can only see a larger
    // value, and never larger by more than the slope times the grid spacing.
    const double slope = std::abs(std::log(4.0 / 0.1));
    CHECK(b.slack >= std::min(a.slack, 0.0) - 1e-12);
    CHECK(b.slack <= a.slack + slope * dense.grid_step + 1e-12);
    const double p = s.uniform(0.2, 2.0);
    const RelationReport pa = p_submaj(f, g, p);
    const RelationReport pb = p_submaj(f, g, p, dense);
    CHECK(pb.slack >= std::min(pa.slack, 0.0) - 1e-12);
    CHECK(pb.slack <= pa.slack + std::pow(4.0, p) * dense.grid_step + 1e-12);
  });
}

TEST_CASE("property: log-submajorisation implies the other conditions") {
  for_all_seeds(43, 150, [](std::uint64_t seed) {
    SeedStream s(seed);
    const MatrixPair pair = gen_log_submaj_pair(s.integer(1, 6), s.next());
    const Remark26Battery b = remark26_battery(pair.x, pair.y);
    CHECK(b.log_submaj_holds);
    CHECK(b.consistent);
  });
}

TEST_CASE("property: contrapositive sampling on unconstrained pairs") {
  std::size_t sampled_failures = 0;
  for_all_seeds(44, 150, [&](std::uint64_t seed) {
    SeedStream s(seed);
    const std::size_t n = s.integer(1, 6);
    const Remark26Battery b = remark26_battery(gen_positive_invertible(n, s.next()), gen_positive_invertible(n, s.next()));
    CHECK(b.consistent);
    for (const auto& item : b.items) {
      if (!item.report.holds) {
        ++sampled_failures;
        CHECK_FALSE(b.log_submaj_holds);
      }
    }
  });
  CHECK(sampled_failures > 0);
}
