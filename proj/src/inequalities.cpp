#include "logmaj/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "logmaj/error.hpp"
#include "logmaj/io.hpp"
#include "logmaj/spectral.hpp"

namespace logmaj {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI{0.0, 1.0};

double safe_log(double v) { return v > 0.0 ? std::log(v) : -kInf; }
// log (1 + v)/(1 - v)
double log_ratio_up(double v) { return std::log1p(v) - std::log1p(-v); }
// log (1 - v)/(1 + v)
double log_ratio_down(double v) { return std::log1p(-v) - std::log1p(v); }

// Midpoint of the j-th uniform piece (0-based) and its mirror image 1 - mid,
// both built as exact quotients so they land on the intended piece.
double midpoint(std::size_t j, std::size_t n) {
  return static_cast<double>(2 * j + 1) / static_cast<double>(2 * n);
}
double mirrored_midpoint(std::size_t j, std::size_t n) {
  return static_cast<double>(2 * n - 2 * j - 1) / static_cast<double>(2 * n);
}

InequalityReport tightest(std::vector<InequalityReport> candidates) {
  auto it = std::min_element(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return margin(a) < margin(b); });
  return std::move(*it);
}

void require_hermitian(const ComplexMatrix& x, const char* what) {
  if (hermiticity_residual(x) > 1e-10 * std::max(1.0, frobenius_norm(x))) {
    throw Error(ErrorCode::kNotHermitian, std::string(what) + " must be Hermitian");
  }
}

void require_unitary(const ComplexMatrix& u) {
  const ComplexMatrix gram = adjoint(u) * u;
  if (frobenius_norm(gram - ComplexMatrix::identity(u.dim())) > 1e-10 * static_cast<double>(u.dim())) {
    throw Error(ErrorCode::kOutOfDomain, "u must be unitary");
  }
}

void require_same_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "operands differ in dimension");
}

// Scans every breakpoint t of f and g and reports the tightest instance of
// ∫_0^t log f <= ∫_0^t log g.
InequalityReport log_submaj_report(const std::string& name, const StepFunction& f, const StepFunction& g,
                                   const Tolerance& tol, const json& context) {
  std::vector<InequalityReport> all;
  for (double t : merged_breakpoints(f, g)) {
    const IntervalSet k = IntervalSet::prefix(t);
    json ctx = context;
    ctx["t"] = t;
    all.push_back(make_inequality(name, integrate_log(f, k).value(), integrate_log(g, k).value(), tol, ctx));
  }
  return tightest(std::move(all));
}

struct MiddleParts {
  ComplexMatrix direct;
  ComplexMatrix via_resolvent;
  ComplexMatrix via_cayley_form;
  ComplexMatrix s;
  double gap = 0.0;
};

MiddleParts middle_parts(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix resolvent = inverse(id - x);
  const ComplexMatrix defect = id - adjoint(x) * x;

  MiddleParts p;
  p.direct = adjoint(resolvent) * defect * resolvent;
  p.via_resolvent = add_identity(2.0 * real_part(resolvent), -1.0);
  p.via_cayley_form = real_part((id + x) * resolvent);
  p.s = apply_hermitian(defect, [](double v) { return std::sqrt(std::max(v, 0.0)); }) * resolvent;
  p.gap = std::max({frobenius_norm(p.direct - p.via_resolvent), frobenius_norm(p.direct - p.via_cayley_form),
                    frobenius_norm(p.via_resolvent - p.via_cayley_form)});
  return p;
}

// Det quotient Delta(I - x^*x) / Delta(I - x)^2 in log form.
double log_harnack_determinant(const ComplexMatrix& x) {
  const ComplexMatrix id = ComplexMatrix::identity(x.dim());
  return log_fk_det(id - adjoint(x) * x).value() - 2.0 * log_fk_det(id - x).value();
}

}  // namespace

void require_strict_contraction(const ComplexMatrix& x, double delta) {
  const double norm = op_norm(x);
  if (!(norm <= 1.0 - delta)) {
    throw Error(ErrorCode::kNotStrictContraction,
                "||x|| = " + std::to_string(norm) + " exceeds 1 - delta = " + std::to_string(1.0 - delta));
  }
}

HarnackMiddle harnack_middle(const ComplexMatrix& x, double delta) {
  require_strict_contraction(x, delta);
  MiddleParts p = middle_parts(x);
  const double norm = frobenius_norm(p.direct);
  if (p.gap > 1e-9 * norm) {
    throw Error(ErrorCode::kIdentityMismatch, "constructions of the middle term disagree by " + std::to_string(p.gap));
  }
  return {real_part(p.direct), std::move(p.s), p.gap};
}

Reports check_harnack_middle(const ComplexMatrix& x, const CheckOptions& opts) {
  require_strict_contraction(x, opts.delta);
  const MiddleParts p = middle_parts(x);
  const double norm = frobenius_norm(p.direct);
  const Tolerance rel{opts.tol.atol, 1e-9};
  Reports out;
  out.push_back(make_identity("constructions_agree", p.gap, norm, rel));
  out.push_back(make_identity("a_equals_s_star_s", frobenius_norm(p.direct - adjoint(p.s) * p.s), norm, rel));
  out.push_back(make_inequality("a_positive", 0.0, herm_eig(real_part(p.direct)).eigenvalues.back(), opts.tol));
  return out;
}

Reports check_re_im_bounds(const ComplexMatrix& x, const CheckOptions& opts) {
  const std::size_t n = x.dim();
  const StepFunction fx = mu(x);
  Reports out;
  const std::pair<const char*, StepFunction> parts[] = {{"re", lambda_scale(real_part(x))},
                                                        {"im", lambda_scale(imag_part(x))}};
  for (const auto& [label, lam] : parts) {
    for (std::size_t j = 0; j < n; ++j) {
      const double m = midpoint(j, n);
      const double value = eval_right(lam, m);
      const double lower = -eval_left(fx, mirrored_midpoint(j, n));
      const json ctx = {{"piece", j + 1}};
      out.push_back(make_inequality(std::string(label) + "_lower", lower, value, opts.tol, ctx));
      out.push_back(make_inequality(std::string(label) + "_upper", value, eval_right(fx, m), opts.tol, ctx));
    }
  }
  return out;
}

Reports check_cor_alpha(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, const CheckOptions& opts) {
  require_same_dims(x, y);
  require_hermitian(x, "x");
  const std::size_t n = x.dim();
  // Both left-hand elements are Hermitian up to rounding; take the Hermitian part.
  const StepFunction l1 = lambda_scale(real_part(kI * (real_part(y) - y)));
  const StepFunction l2 = lambda_scale(real_part(y - kI * imag_part(y)));
  const StepFunction r1 = mu(y - alpha * x);
  const StepFunction r2 = mu(y - (kI * alpha) * x);
  Reports out;
  for (std::size_t j = 0; j < n; ++j) {
    const double m = midpoint(j, n);
    const json ctx = {{"piece", j + 1}, {"alpha", alpha}};
    out.push_back(make_inequality("im_form", eval_right(l1, m), eval_right(r1, m), opts.tol, ctx));
    out.push_back(make_inequality("re_form", eval_right(l2, m), eval_right(r2, m), opts.tol, ctx));
  }
  return out;
}

Reports check_remark33(const ComplexMatrix& x, const std::vector<double>& ts, const CheckOptions& opts) {
  const ComplexMatrix two_re = 2.0 * real_part(x);
  const StepFunction f = mu(two_re);
  const double det_lhs = fk_det(two_re);
  const ComplexMatrix gram = adjoint(x) * x;
  Reports out;
  for (double t : ts) {
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::kOutOfDomain, "t must be positive");
    const ComplexMatrix bound = add_identity((t * t) * gram, 1.0 / (t * t));
    const json ctx = {{"param_t", t}};
    out.push_back(log_submaj_report("log_submaj", f, mu(bound), opts.tol, ctx));
    out.push_back(make_inequality("determinant", det_lhs, fk_det(bound), opts.tol, ctx));
  }
  return out;
}

double prop35_side_gap(const ComplexMatrix& x, const ComplexMatrix& u) {
  auto mean_abs = [](const ComplexMatrix& z) {
    const auto s = svd(z).sigma;
    double acc = 0.0;
    for (double v : s) acc += v;
    return acc / static_cast<double>(s.size());
  };
  return std::abs(mean_abs(add_identity(x, -1.0)) - mean_abs(x - u));
}

Reports check_prop35(const ComplexMatrix& x, const ComplexMatrix& u, const CheckOptions& opts, double side_tol) {
  require_same_dims(x, u);
  require_positive(x);
  const double norm = op_norm(x);
  if (!(norm > 1.0)) {
    throw Error(ErrorCode::kNormNotAboveOne, "||x|| = " + std::to_string(norm) + " must exceed 1");
  }
  require_unitary(u);

  const ComplexMatrix shifted_re = x - real_part(u);
  const ComplexMatrix plus_id = add_identity(x, 1.0);
  Reports out;
  out.push_back(log_submaj_report("part1_log_submaj", mu(shifted_re), mu(plus_id), opts.tol, json::object()));
  out.push_back(make_inequality("part1_determinant", fk_det(shifted_re), fk_det(plus_id), opts.tol));

  const ComplexMatrix minus_id = add_identity(x, -1.0);
  const double base = normalized_trace(abs(minus_id)).real();
  const double gap = prop35_side_gap(x, u);
  const json ctx = {{"side_gap", gap}, {"side_tol", side_tol}};
  if (gap <= side_tol * (1.0 + base)) {
    out.push_back(make_inequality("part2_determinant", fk_det(x - u), fk_det(minus_id), opts.tol, ctx));
  } else {
    out.push_back(make_skipped("part2_determinant", ctx));
  }
  return out;
}

InequalityReport check_lemma36(const ComplexMatrix& x, const CheckOptions& opts) {
  require_positive(x);
  ComplexMatrix inv;
  try {
    inv = inverse(x);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotInvertible, e.what());
  }
  const StepFunction lhs = mu(inv);
  const StepFunction rhs = invert_flip(mu(x));
  const double scale = std::max(lhs.front(), rhs.front());
  return make_identity("inverse_flip", max_discrepancy(lhs, rhs), scale, opts.tol);
}

Reports check_lemma37(const ComplexMatrix& x, const CheckOptions& opts, bool with_item5) {
  const std::size_t n = x.dim();
  const std::size_t grid = 2 * n;
  auto point = [grid](std::size_t k) { return static_cast<double>(k) / static_cast<double>(grid); };

  const StepFunction fx = mu(x);
  const StepFunction fc = mu(add_identity(-x, 1.0));
  Reports out;

  {
    const ComplexMatrix h = real_part(x);
    const StepFunction lam = lambda_scale(h);
    const StepFunction fh = mu(h);
    Reports cand;
    for (std::size_t j = 0; j < n; ++j) {
      const double m = midpoint(j, n);
      cand.push_back(make_inequality("item1", eval_right(lam, m), eval_right(fh, m), opts.tol, {{"piece", j + 1}}));
    }
    out.push_back(tightest(std::move(cand)));
  }

  {
    Reports right;
    Reports left;
    for (std::size_t a = 1; a < grid; ++a) {
      for (std::size_t b = 1; a + b < grid; ++b) {
        const json ctx = {{"t", point(a)}, {"s", point(b)}};
        right.push_back(make_inequality("item2_right", 1.0,
                                        eval_right(fx, point(a)) + eval_right(fc, point(b)), opts.tol, ctx));
        left.push_back(make_inequality("item2_left", 1.0,
                                       eval_left(fx, point(a)) + eval_left(fc, point(b)), opts.tol, ctx));
      }
    }
    if (!right.empty()) {
      out.push_back(tightest(std::move(right)));
      out.push_back(tightest(std::move(left)));
    }
  }

  // Items (3) and (4) share the same three continuity patterns at (t, 1 - t).
  auto complementary = [&](const std::string& prefix, const StepFunction& other) {
    Reports rl;
    Reports ll;
    Reports lr;
    for (std::size_t a = 1; a < grid; ++a) {
      const double t = point(a);
      const double c = point(grid - a);
      const json ctx = {{"t", t}};
      rl.push_back(make_inequality(prefix + "_right_left", 1.0, eval_right(fx, t) + eval_left(other, c), opts.tol, ctx));
      ll.push_back(make_inequality(prefix + "_left_left", 1.0, eval_left(fx, t) + eval_left(other, c), opts.tol, ctx));
      lr.push_back(make_inequality(prefix + "_left_right", 1.0, eval_left(fx, t) + eval_right(other, c), opts.tol, ctx));
    }
    out.push_back(tightest(std::move(rl)));
    out.push_back(tightest(std::move(ll)));
    out.push_back(tightest(std::move(lr)));
  };
  complementary("item3", fc);
  complementary("item4_plus", mu(add_identity(x, kI)));
  complementary("item4_minus", mu(add_identity(x, -kI)));

  if (with_item5) {
    bool ok = hermiticity_residual(x) <= 1e-10 * std::max(1.0, frobenius_norm(x));
    if (ok) {
      const auto eig = herm_eig(x).eigenvalues;
      ok = eig.back() >= -1e-12 && eig.front() <= 1.0 + 1e-12;
    }
    if (!ok) throw Error(ErrorCode::kContractionRequired, "item 5 needs 0 <= x <= I");
    const StepFunction expected = shift(reflect_neg(fx), 1.0);
    out.push_back(make_identity("item5_right", max_discrepancy(fc, expected), 1.0, opts.tol));
    double worst = 0.0;
    for (std::size_t a = 1; a < grid; ++a) {
      worst = std::max(worst, std::abs(eval_left(fc, point(a)) - (1.0 - eval_right(fx, point(grid - a)))));
    }
    out.push_back(make_identity("item5_left", worst, 1.0, opts.tol));
  }
  return out;
}

Reports check_borel_lemma(const ComplexMatrix& x, const ComplexMatrix& y, const IntervalSet& k,
                          const CheckOptions& opts) {
  require_same_dims(x, y);
  const double t = std::min(1.0, k.measure());
  const StepFunction fx = mu(x);
  const StepFunction fy = mu(y);
  const double on_k = integrate_log(fx, k).value();
  const double lower = on_k + integrate_log(fy, IntervalSet::suffix(t)).value();
  const double middle = integrate_log(mu(x * y), k).value();
  const double upper = on_k + integrate_log(fy, IntervalSet::prefix(t)).value();
  const json ctx = {{"K", to_json(k)}, {"m_K", t}};
  return {make_inequality("lower", lower, middle, opts.tol, ctx),
          make_inequality("upper", middle, upper, opts.tol, ctx)};
}

Reports check_harnack_upper(const ComplexMatrix& x, const IntervalSet& k, const CheckOptions& opts) {
  const HarnackMiddle hm = harnack_middle(x, opts.delta);
  const std::size_t n = x.dim();
  const StepFunction fx = mu(x);
  const StepFunction fa = mu(hm.a);
  Reports out;
  for (std::size_t j = 0; j < n; ++j) {
    const double m = midpoint(j, n);
    const double s = eval_right(fx, m);
    out.push_back(make_inequality("pointwise", eval_right(fa, m), (1.0 + s) / (1.0 - s), opts.tol, {{"piece", j + 1}}));
  }
  const double on_k = integrate_log(fa, k).value();
  const double bound_k = integrate(fx, k, log_ratio_up);
  const double bound_all = integrate(fx, IntervalSet::whole(), log_ratio_up);
  const json ctx = {{"K", to_json(k)}};
  out.push_back(make_inequality("integral_K", on_k, bound_k, opts.tol, ctx));
  out.push_back(make_inequality("integral_K_vs_whole", bound_k, bound_all, opts.tol, ctx));
  out.push_back(make_inequality("determinant", std::exp(log_harnack_determinant(x)), std::exp(bound_all), opts.tol));
  return out;
}

InequalityReport check_harnack_lower(const ComplexMatrix& x, const IntervalSet& k, const CheckOptions& opts) {
  const HarnackMiddle hm = harnack_middle(x, opts.delta);
  const StepFunction fx = mu(x);
  const double t = std::min(1.0, k.measure());
  const double bound = 2.0 * integrate(fx, IntervalSet::prefix(t), [](double v) { return -std::log1p(v); }) +
                       integrate(fx, k.reflected(), [](double v) { return std::log1p(-v * v); });
  const double actual = integrate_log(mu(hm.a), k).value();
  return make_inequality("lower_bound", bound, actual, opts.tol, {{"K", to_json(k)}, {"m_K", t}});
}

Reports check_harnack_corollary(const ComplexMatrix& x, const std::vector<double>& ts, const CheckOptions& opts) {
  const HarnackMiddle hm = harnack_middle(x, opts.delta);
  const StepFunction fx = mu(x);
  const StepFunction fa = mu(hm.a);
  Reports out;
  for (double t : ts) {
    if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::kOutOfDomain, "t must lie in (0, 1]");
    const double bound = integrate(fx, IntervalSet::prefix(t), log_ratio_down);
    const double actual = integrate_log(fa, IntervalSet::suffix(t)).value();
    out.push_back(make_inequality("integral_t", bound, actual, opts.tol, {{"t", t}}));
  }
  const double whole = integrate(fx, IntervalSet::whole(), log_ratio_down);
  out.push_back(make_inequality("determinant", std::exp(whole), std::exp(log_harnack_determinant(x)), opts.tol));
  return out;
}

Reports check_weighted(const std::vector<ComplexMatrix>& xs, const std::vector<double>& ws, const ComplexMatrix& u,
                       const CheckOptions& opts) {
  if (xs.empty() || xs.size() != ws.size()) {
    throw Error(ErrorCode::kWeightsInvalid, "need one positive weight per matrix");
  }
  double total = 0.0;
  for (double w : ws) {
    if (!(w > 0.0)) throw Error(ErrorCode::kWeightsInvalid, "weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::kWeightsInvalid, "weights must sum to 1");
  const std::size_t n = u.dim();
  for (const auto& x : xs) {
    require_same_dims(x, u);
    require_positive(x);
    require_strict_contraction(x, opts.delta);
  }
  require_unitary(u);

  ComplexMatrix w(n);
  std::vector<StepFunction> mus;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w += ws[i] * xs[i];
    mus.push_back(mu(xs[i]));
  }
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const double log_mid = log_fk_det(id - w * w).value() - 2.0 * log_fk_det(id - u * w).value();
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    lower += ws[i] * integrate(mus[i], IntervalSet::whole(), log_ratio_down);
    upper += ws[i] * integrate(mus[i], IntervalSet::whole(), log_ratio_up);
  }
  const json ctx = {{"weights", ws}};
  Reports out;
  out.push_back(make_inequality("lower", std::exp(lower), std::exp(log_mid), opts.tol, ctx));
  out.push_back(make_inequality("upper", std::exp(log_mid), std::exp(upper), opts.tol, ctx));
  for (std::size_t j = 0; j < n; ++j) {
    const double m = midpoint(j, n);
    double avg = 0.0;
    double log_rhs = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double v = eval_right(mus[i], m);
      avg += ws[i] * v;
      log_rhs += ws[i] * log_ratio_up(v);
    }
    out.push_back(make_inequality("lewent", (1.0 + avg) / (1.0 - avg), std::exp(log_rhs), opts.tol, {{"piece", j + 1}}));
  }
  return out;
}

Reports check_cayley(const ComplexMatrix& x, const ComplexMatrix& y, const IntervalSet& k, const CheckOptions& opts) {
  require_same_dims(x, y);
  require_strict_contraction(x, opts.delta);
  require_strict_contraction(y, opts.delta);
  const ComplexMatrix cx = cayley(x);
  const ComplexMatrix cy = cayley(y);
  const ComplexMatrix diff = cx - cy;
  const ComplexMatrix factored =
      (2.0 * kI) * (inverse(add_identity(y, kI)) * (x - y) * inverse(add_identity(x, kI)));

  Reports out;
  out.push_back(make_identity("difference_factorization", frobenius_norm(diff - factored),
                              std::max(frobenius_norm(diff), frobenius_norm(factored)),
                              Tolerance{opts.tol.atol, 1e-9}));

  const StepFunction fx = mu(x);
  const StepFunction fy = mu(y);
  const StepFunction fc = mu(cx);
  const StepFunction fd = mu(diff);
  const StepFunction fxy = mu(x - y);
  auto log1p_neg = [](double v) { return std::log1p(-v); };
  auto log1p_pos = [](double v) { return std::log1p(v); };

  auto emit = [&](const IntervalSet& set, const std::string& suffix) {
    const double t = std::min(1.0, set.measure());
    const IntervalSet head = IntervalSet::prefix(t);
    const json ctx = {{"K", to_json(set)}, {"m_K", t}};
    const double lower = integrate(fx, set.reflected(), log1p_neg) - integrate(fx, head, log1p_pos);
    const double middle = integrate_log(fc, set).value();
    const double upper = integrate(fx, set, log1p_pos) - integrate(fx, head, log1p_neg);
    out.push_back(make_inequality("transform_lower" + suffix, lower, middle, opts.tol, ctx));
    out.push_back(make_inequality("transform_upper" + suffix, middle, upper, opts.tol, ctx));
    const double diff_lhs = integrate_log(fd, set).value();
    const double diff_rhs = integrate(fxy, set, [](double v) { return safe_log(2.0 * v); }) -
                            integrate(fx, head, log1p_neg) - integrate(fy, head, log1p_neg);
    out.push_back(make_inequality("difference" + suffix, diff_lhs, diff_rhs, opts.tol, ctx));
  };
  emit(k, "");
  emit(IntervalSet::whole(), "_whole");
  return out;
}

IntervalSet dyadic_interval_set(std::size_t n, const std::vector<std::size_t>& index_set) {
  std::set<std::size_t> sorted(index_set.begin(), index_set.end());
  std::vector<std::pair<double, double>> ivs;
  for (std::size_t k : sorted) {
    if (k < 1 || k > n) throw Error(ErrorCode::kOutOfRange, "index " + std::to_string(k) + " outside 1..n");
    ivs.emplace_back(static_cast<double>(k - 1) / static_cast<double>(n), static_cast<double>(k) / static_cast<double>(n));
  }
  return IntervalSet(std::move(ivs));
}

Reports check_tung_matrix(const ComplexMatrix& z, const ComplexMatrix& u, const std::vector<std::size_t>& index_set,
                          const CheckOptions& opts) {
  require_same_dims(z, u);
  require_strict_contraction(z, opts.delta);
  require_unitary(u);
  const std::size_t n = z.dim();
  const std::set<std::size_t> subset(index_set.begin(), index_set.end());
  if (subset.empty() || subset.size() != index_set.size()) {
    throw Error(ErrorCode::kOutOfRange, "index set must be non-empty without repeats");
  }
  const IntervalSet pieces = dyadic_interval_set(n, index_set);

  const ComplexMatrix a = u * z;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const MiddleParts middle = middle_parts(a);
  const auto r = svd(z).sigma;
  const auto lam = herm_eig(real_part(middle.direct)).eigenvalues;
  const double dn = static_cast<double>(n);

  double lo = 0.0;
  double hi = 0.0;
  double eig_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    lo += log_ratio_down(r[k]);
    hi += log_ratio_up(r[k]);
    eig_sum += safe_log(lam[k]);
  }
  const double det_ratio = dn * (log_fk_det(id - adjoint(z) * z).value() - 2.0 * log_fk_det(id - a).value());

  double top_sum = 0.0;
  double top_bound = 0.0;
  double bottom_sum = 0.0;
  double bottom_bound = 0.0;
  for (std::size_t k : subset) {
    top_sum += safe_log(lam[k - 1]);
    top_bound += log_ratio_up(r[k - 1]);
    bottom_sum += safe_log(lam[n - k]);
    bottom_bound += std::log1p(-r[k - 1] * r[k - 1]);
  }
  for (std::size_t i = 0; i < subset.size(); ++i) bottom_bound -= 2.0 * std::log1p(r[i]);

  json subset_json = json::array();
  for (std::size_t k : subset) subset_json.push_back(k);
  const json ctx = {{"index_set", subset_json}, {"scale", "log"}};

  Reports out;
  out.push_back(make_inequality("det_lower", lo, det_ratio, opts.tol, ctx));
  out.push_back(make_inequality("det_upper", det_ratio, hi, opts.tol, ctx));
  out.push_back(make_inequality("eigen_product_lower", lo, eig_sum, opts.tol, ctx));
  out.push_back(make_inequality("eigen_product_upper", eig_sum, hi, opts.tol, ctx));
  out.push_back(make_inequality("subset_top", top_sum, top_bound, opts.tol, ctx));
  out.push_back(make_inequality("subset_bottom", bottom_bound, bottom_sum, opts.tol, ctx));

  // The subset bounds are n times the integral forms on the matching pieces:
  // indices k for the top bound, mirrored indices n - k + 1 for the bottom one.
  CheckOptions bridge_opts = opts;
  bridge_opts.delta = opts.delta - 1e-12;
  const Reports upper = check_harnack_upper(a, pieces, bridge_opts);
  const auto on_k = std::find_if(upper.begin(), upper.end(), [](const auto& rep) { return rep.name == "integral_K"; });
  std::vector<std::size_t> mirrored;
  for (std::size_t k : subset) mirrored.push_back(n - k + 1);
  const InequalityReport lower = check_harnack_lower(a, dyadic_interval_set(n, mirrored), bridge_opts);

  const Tolerance bridge_tol{1e-9, 1e-9};
  out.push_back(make_identity("bridge_top_lhs", std::abs(dn * on_k->lhs - top_sum), std::abs(top_sum), bridge_tol, ctx));
  out.push_back(make_identity("bridge_top_rhs", std::abs(dn * on_k->rhs - top_bound), std::abs(top_bound), bridge_tol, ctx));
  out.push_back(make_identity("bridge_bottom_lhs", std::abs(dn * lower.rhs - bottom_sum), std::abs(bottom_sum), bridge_tol, ctx));
  out.push_back(make_identity("bridge_bottom_rhs", std::abs(dn * lower.lhs - bottom_bound), std::abs(bottom_bound), bridge_tol, ctx));
  return out;
}

}  // namespace logmaj
