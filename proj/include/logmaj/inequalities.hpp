#pragma once

// Checkers for the singular-value, determinant and log-submajorisation
// inequalities of Harnack type. Each returns InequalityReports carrying the
// signed slack rhs - lhs, so tight cases can be located even when they pass.
//
// Integrals of the form ∫_0^t g(mu_{1-s}) ds are taken exactly through the
// change of variables s -> 1 - s on the interval set, never by sampling.

#include <cstddef>
#include <vector>

#include "logmaj/matrix.hpp"
#include "logmaj/report.hpp"
#include "logmaj/step_function.hpp"

namespace logmaj {

inline constexpr double kDefaultDelta = 1e-3;

struct CheckOptions {
  Tolerance tol{};
  /// Strict contractions must satisfy ||x|| <= 1 - delta.
  double delta = kDefaultDelta;
};

using Reports = std::vector<InequalityReport>;

/// A = (I - x^*)^{-1}(I - x^*x)(I - x)^{-1} and S = (I - x^*x)^{1/2}(I - x)^{-1},
/// with A = S^*S.
struct HarnackMiddle {
  ComplexMatrix a;
  ComplexMatrix s;
  /// Largest pairwise Frobenius distance between the three constructions of A.
  double construction_gap = 0.0;
};

/// Throws NotStrictContraction when ||x|| > 1 - delta.
void require_strict_contraction(const ComplexMatrix& x, double delta);

/// Builds A directly, as 2Re((I - x)^{-1}) - I and as Re((I + x)(I - x)^{-1});
/// throws IdentityMismatch when they disagree by more than 1e-9 ||A||_F.
HarnackMiddle harnack_middle(const ComplexMatrix& x, double delta = kDefaultDelta);

/// Agreement of the three constructions of A and A = S^*S, as identity reports.
Reports check_harnack_middle(const ComplexMatrix& x, const CheckOptions& opts = {});

/// -mu^l_{1-s}(x) <= lambda_s(Re x) <= mu_s(x), and the same for Im x, on every
/// uniform piece.
Reports check_re_im_bounds(const ComplexMatrix& x, const CheckOptions& opts = {});

/// For Hermitian x: lambda_s(i Re y - i y) <= mu_s(y - alpha x) and
/// lambda_s(y - i Im y) <= mu_s(y - i alpha x).
Reports check_cor_alpha(const ComplexMatrix& x, const ComplexMatrix& y, double alpha,
                        const CheckOptions& opts = {});

/// mu(2 Re x) ≺≺_log mu(t^2 x^*x + t^{-2} I) and the determinant comparison,
/// for each t in ts.
Reports check_remark33(const ComplexMatrix& x, const std::vector<double>& ts, const CheckOptions& opts = {});

/// Gap |tau(|x - I|) - tau(|x - u|)| governing part (2) of check_prop35.
double prop35_side_gap(const ComplexMatrix& x, const ComplexMatrix& u);

/// For x >= 0 with ||x|| > 1 and unitary u:
///   (1) mu(x - Re u) ≺≺_log mu(x + I) and Delta(x - Re u) <= Delta(x + I);
///   (2) Delta(x - u) <= Delta(x - I), evaluated only when the side gap is at
///       most side_tol * (1 + tau|x - I|), otherwise reported as skipped.
/// Throws NotPositive / NormNotAboveOne.
Reports check_prop35(const ComplexMatrix& x, const ComplexMatrix& u, const CheckOptions& opts = {},
                     double side_tol = 1e-9);

/// mu(x^{-1}) = invert_flip(mu(x)) for positive invertible x.
InequalityReport check_lemma36(const ComplexMatrix& x, const CheckOptions& opts = {});

/// Items (1)-(4) for any x; with_item5 adds mu_t(I - x) = 1 - mu^l_{1-t}(x)
/// and its left variant, which require 0 <= x <= I (else ContractionRequired).
Reports check_lemma37(const ComplexMatrix& x, const CheckOptions& opts = {}, bool with_item5 = false);

/// With t = m(K):
///   ∫_K log mu(x) + ∫_0^t log mu_{1-s}(y) <= ∫_K log mu(xy)
///                                      <= ∫_K log mu(x) + ∫_0^t log mu(y).
Reports check_borel_lemma(const ComplexMatrix& x, const ComplexMatrix& y, const IntervalSet& k,
                          const CheckOptions& opts = {});

/// mu_j(A) <= (1 + s_j)/(1 - s_j) per piece, the integrated form over K and
/// [0,1], and the determinant form.
Reports check_harnack_upper(const ComplexMatrix& x, const IntervalSet& k, const CheckOptions& opts = {});

/// ∫_K log mu(A) >= 2∫_0^{m(K)} log 1/(1 + mu) + ∫_K log(1 - mu_{1-s}^2).
InequalityReport check_harnack_lower(const ComplexMatrix& x, const IntervalSet& k,
                                     const CheckOptions& opts = {});

/// ∫_0^t log mu_{1-s}(A) >= ∫_0^t log (1 - mu)/(1 + mu) for each t, plus the
/// determinant form at t = 1.
Reports check_harnack_corollary(const ComplexMatrix& x, const std::vector<double>& ts,
                                const CheckOptions& opts = {});

/// Weighted two-sided determinant bound for W = sum w_i x_i, and Lewent's
/// inequality on each uniform piece.
Reports check_weighted(const std::vector<ComplexMatrix>& xs, const std::vector<double>& ws,
                       const ComplexMatrix& u, const CheckOptions& opts = {});

/// Two-sided bound on ∫_K log mu(C(x)), the bound on ∫_K log mu(C(x) - C(y)),
/// both again for K = [0,1], and the factorization of C(x) - C(y).
Reports check_cayley(const ComplexMatrix& x, const ComplexMatrix& y, const IntervalSet& k,
                     const CheckOptions& opts = {});

/// Matrix forms with A = UZ and r = singular values of Z, in log scale:
/// the two-sided determinant bound, its eigenvalue-product form, the
/// index-subset bounds on prod λ_k and prod λ_{n-k+1}, and bridge reports
/// tying the subset bounds to check_harnack_upper / check_harnack_lower on
/// the matching union of uniform pieces. index_set holds 1-based indices.
Reports check_tung_matrix(const ComplexMatrix& z, const ComplexMatrix& u, const std::vector<std::size_t>& index_set,
                          const CheckOptions& opts = {});

/// Union of the uniform pieces [(k-1)/n, k/n) for the 1-based indices.
IntervalSet dyadic_interval_set(std::size_t n, const std::vector<std::size_t>& index_set);

}  // namespace logmaj
