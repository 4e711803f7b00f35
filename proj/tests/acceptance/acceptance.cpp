// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when everything holds).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "logmaj/harness.hpp"
#include "logmaj/inequalities.hpp"
#include "logmaj/oracle.hpp"
#include "logmaj/random.hpp"
#include "logmaj/spectral.hpp"
#include "logmaj/submajorisation.hpp"

using namespace logmaj;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const InequalityReport* find(const Reports& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

// |det x| by Gaussian elimination with partial pivoting, in log form.
// Deliberately shares nothing with the Jacobi kernels.
double log_abs_det_lu(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  std::vector<Complex> a(x.entries().begin(), x.entries().end());
  double log_det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == Complex(0.0)) return -std::numeric_limits<double>::infinity();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
    }
    const Complex p = a[col * n + col];
    log_det += std::log(std::abs(p));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r * n + col] / p;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return log_det;
}

Verdict scalar_harnack_equality() {
  double worst_middle = 0.0;
  double worst_slack = 0.0;
  for (int i = 0; i <= 9; ++i) {
    const double r = 0.1 * i;
    const ComplexMatrix x(1, {r});
    const double a = harnack_middle(x).a(0, 0).real();
    worst_middle = std::max(worst_middle, std::abs(a - scalar_harnack(r).middle));
    const Reports rs = check_harnack_upper(x, IntervalSet::whole());
    worst_slack = std::max(worst_slack, std::abs(find(rs, "pointwise")->slack));
  }
  return {worst_middle <= 1e-12 && worst_slack <= 1e-12,
          fmt("max |A - (1+r)/(1-r)| = %.2e, max |upper slack| = %.2e (limit 1e-12)", worst_middle, worst_slack)};
}

Verdict determinant_model() {
  double worst = 0.0;
  SeedStream s(2);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix x = gen_gaussian(n, s.next());
    const double expected = std::exp(log_abs_det_lu(x) / static_cast<double>(n));
    worst = std::max(worst, std::abs(fk_det(x) - expected) / expected);
  }
  const double worked = std::abs(fk_det(ComplexMatrix::diagonal(std::vector<double>{3.0, 1.0})) - std::sqrt(3.0));
  return {worst <= 1e-9 && worked <= 1e-12,
          fmt("500 matrices vs LU: max rel err %.2e (limit 1e-9); |fk_det(diag(3,1)) - sqrt3| = %.1e", worst, worked)};
}

Verdict oracle_equivalence() {
  double worst_mu = 0.0;
  double worst_closed = 0.0;
  double worst_svd = 0.0;
  SeedStream s(3);
  for (std::size_t n : {2, 4, 8}) {
    for (int i = 0; i < 500; ++i) {
      std::vector<Complex> d(n);
      std::vector<Complex> positive(n);
      std::vector<Complex> inv(n);
      for (std::size_t j = 0; j < n; ++j) {
        d[j] = std::polar(s.uniform(0.05, 5.0), s.uniform(0.0, 6.283185307179586));
        positive[j] = s.uniform(0.05, 5.0);
        inv[j] = 1.0 / positive[j].real();
      }
      worst_mu = std::max(worst_mu, max_discrepancy(mu(ComplexMatrix::diagonal(std::span<const Complex>(d))), diag_mu({d})));
      worst_closed = std::max(worst_closed, max_discrepancy(invert_flip(diag_mu({positive})), diag_mu({inv})));
      const InequalityReport r = check_lemma36(gen_positive_invertible(n, s.next()));
      worst_svd = std::max(worst_svd, r.lhs);
    }
  }
  return {worst_mu <= 1e-12 && worst_closed == 0.0 && worst_svd <= 1e-9,
          fmt("mu vs diag_mu %.2e (limit 1e-12); inverse flip closed form %.1e (exact), SVD path %.2e (limit 1e-9)",
              worst_mu, worst_closed, worst_svd)};
}

Verdict full_sweep() {
  TrialConfig cfg;
  cfg.trials = 1000;
  cfg.dims = {1, 2, 4, 8};
  cfg.delta = 1e-3;
  cfg.atol = cfg.rtol = 1e-9;
  cfg.seed = 20260401;
  const SuiteReport r = run_suite(cfg);
  std::size_t failures = 0;
  double worst_vacuous = 0.0;
  std::string worst_checker;
  for (const auto& c : r.checkers) {
    failures += c.failures;
    const double rate = static_cast<double>(c.vacuous) / static_cast<double>(c.trials);
    if (rate >= worst_vacuous) {
      worst_vacuous = rate;
      worst_checker = c.checker;
    }
  }
  return {failures == 0 && worst_vacuous < 0.01,
          fmt("%zu checkers x 4 dims x 1000 trials: %zu failures; max vacuous rate %.2f%% (%s); %.1fs",
              r.checkers.size(), failures, 100.0 * worst_vacuous, worst_checker.c_str(), r.wall_time_seconds)};
}

Verdict bridge_consistency() {
  double worst = 0.0;
  SeedStream s(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix z = gen_contraction(n, s.next(), 1e-3);
    const ComplexMatrix u = haar_unitary(n, s.next());
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s.uniform() < 0.5) idx.push_back(k);
    }
    if (idx.empty()) idx.push_back(s.integer(1, n));
    std::vector<std::size_t> mirrored;
    for (std::size_t k : idx) mirrored.push_back(n - k + 1);

    const Reports tung = check_tung_matrix(z, u, idx);
    const ComplexMatrix a = u * z;
    CheckOptions loose;
    loose.delta = 1e-3 - 1e-12;
    const Reports upper = check_harnack_upper(a, dyadic_interval_set(n, idx), loose);
    const InequalityReport lower = check_harnack_lower(a, dyadic_interval_set(n, mirrored), loose);
    const double dn = static_cast<double>(n);
    const InequalityReport* top = find(tung, "subset_top");
    const InequalityReport* bottom = find(tung, "subset_bottom");
    const InequalityReport* on_k = find(upper, "integral_K");
    auto rel = [](double a1, double b1) { return std::abs(a1 - b1) / (1.0 + std::max(std::abs(a1), std::abs(b1))); };
    worst = std::max({worst, rel(dn * on_k->lhs, top->lhs), rel(dn * on_k->rhs, top->rhs),
                      rel(dn * lower.rhs, bottom->rhs), rel(dn * lower.lhs, bottom->lhs)});
    for (const auto& r : tung) {
      if (r.name.rfind("bridge", 0) == 0 && !r.passed()) worst = std::max(worst, 1.0);
    }
  }
  return {worst <= 1e-9, fmt("200 instances: max scaled gap between subset sums and integrals %.2e (limit 1e-9)", worst)};
}

Verdict kernel_accuracy() {
  double worst_svd = 0.0;
  double worst_eig = 0.0;
  double worst_cayley = 0.0;
  SeedStream s(6);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = s.integer(1, 16);
    const ComplexMatrix x = gen_gaussian(n, s.next());
    const SingularData d = svd(x);
    const ComplexMatrix rebuilt = d.left * ComplexMatrix::diagonal(std::span<const double>(d.sigma)) * adjoint(d.right);
    worst_svd = std::max(worst_svd, frobenius_norm(rebuilt - x) / frobenius_norm(x));
    const ComplexMatrix h = real_part(x);
    const SpectralData e = herm_eig(h);
    const ComplexMatrix rebuilt_h =
        e.basis * ComplexMatrix::diagonal(std::span<const double>(e.eigenvalues)) * adjoint(e.basis);
    worst_eig = std::max(worst_eig, frobenius_norm(rebuilt_h - h) / frobenius_norm(h));
    const ComplexMatrix c = cayley(h);
    worst_cayley = std::max(worst_cayley, frobenius_norm(adjoint(c) * c - ComplexMatrix::identity(n)));
  }
  return {worst_svd <= 1e-10 && worst_eig <= 1e-10 && worst_cayley <= 1e-10,
          fmt("n <= 16, 200 matrices: SVD %.2e, eig %.2e (limit 1e-10 ||x||_F); Cayley unitarity %.2e (limit 1e-10)",
              worst_svd, worst_eig, worst_cayley)};
}

Verdict implication_battery() {
  std::size_t accepted = 0;
  std::size_t violations = 0;
  SeedStream s(7);
  while (accepted < 500) {
    const MatrixPair p = gen_log_submaj_pair(s.integer(1, 8), s.next());
    const Remark26Battery b = remark26_battery(p.x, p.y);
    if (!b.log_submaj_holds) continue;
    ++accepted;
    for (const auto& item : b.items) {
      if (!item.report.holds) ++violations;
    }
  }
  return {violations == 0, fmt("500 pairs with (3): %zu violations of (1), (2), (4)", violations)};
}

Verdict convergence() {
  double worst_ratio = 0.0;
  double worst_excess = -1.0;
  bool monotone = true;
  double final_gap = 0.0;
  SeedStream s(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = s.integer(1, 8);
    const ComplexMatrix x = gen_positive_invertible(n, s.next());
    const StepFunction fx = mu(x);
    for (DyadicMode mode : {DyadicMode::kFromAbove, DyadicMode::kFromBelow}) {
      double previous = std::numeric_limits<double>::infinity();
      for (unsigned k = 0; k <= 20; ++k) {
        const DyadicApprox a = dyadic_approx(x, k, mode);
        const double bound = a.range / std::ldexp(1.0, static_cast<int>(k));
        const double err = op_norm(x - a.matrix);
        worst_ratio = std::max(worst_ratio, err / (bound + 1e-300));
        worst_excess = std::max(worst_excess, (err - bound) / op_norm(x));
        const StepFunction fa = mu(a.matrix);
        double gap = 0.0;
        for (std::size_t j = 1; j <= 2 * n; ++j) {
          const double t = static_cast<double>(j) / static_cast<double>(2 * n);
          gap = std::max(gap, std::abs(eval_left(fa, t) - eval_left(fx, t)));
        }
        if (gap > previous + 1e-12) monotone = false;
        previous = gap;
      }
      final_gap = std::max(final_gap, previous);
    }
  }
  return {worst_excess <= 1e-12 && monotone && final_gap <= 1e-5,
          fmt("k <= 20: max ||x - x_k|| / (range/2^k) = %.6f, excess over bound %.1e ||x|| (limit 1e-12); left-limit gaps monotone: %s; gap at k = 20: %.2e",
              worst_ratio, worst_excess, monotone ? "yes" : "no", final_gap)};
}

Verdict determinism() {
  TrialConfig cfg;
  cfg.trials = 25;
  cfg.dims = {1, 2, 4, 8};
  cfg.seed = 99;
  cfg.threads = 1;
  const std::string first = to_json(run_suite(cfg), false).dump();
  const std::string second = to_json(run_suite(cfg), false).dump();
  cfg.threads = 4;
  const std::string parallel = to_json(run_suite(cfg), false).dump();
  return {first == second && first == parallel,
          fmt("repeat run identical: %s; serial vs 4 threads identical: %s (%zu bytes)", first == second ? "yes" : "no",
              first == parallel ? "yes" : "no", first.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"scalar Harnack equality", scalar_harnack_equality},
      {"determinant model", determinant_model},
      {"oracle equivalence", oracle_equivalence},
      {"full inequality sweep", full_sweep},
      {"bridge consistency", bridge_consistency},
      {"kernel accuracy", kernel_accuracy},
      {"log-submajorisation implication battery", implication_battery},
      {"convergence of dyadic approximations", convergence},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s  criterion %zu  %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed;
}
