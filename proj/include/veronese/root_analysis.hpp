#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "veronese/numeric_roots.hpp"
#include "veronese/rational_series.hpp"

namespace veronese {

enum class BetaClass { RealNegative, RealNonnegative, Complex };

/// Root data of one transformed numerator at one order r. The betas are the
/// reciprocals of the roots of the numerator, padded with zeros up to the
/// series dimension d (so prod (1 - beta_i t) reconstructs the numerator
/// scaled to constant term 1), sorted by (re, im). Certified fields come
/// from exact Sturm counts, never from the numeric values.
struct RootProfile {
    int order = 1;
    Polynomial numerator;
    int padded_degree = 0;  // number of betas: max(d, deg numerator)
    std::vector<std::complex<double>> betas;
    std::vector<BetaClass> classes;  // |Im| < sqrt(tol) decides realness, per beta
    int real_count = 0;       // real roots of `numerator`, with multiplicity (certified)
    bool all_real = false;    // every beta real, padding included (certified)
    int negative_count = 0;   // strictly negative betas, with multiplicity (certified)
    bool converged = true;

    /// Limit-tracking index convention: beta(d-1) is the minimum, beta(d) the
    /// maximum, beta(1)..beta(d-2) the remaining values in ascending order.
    /// Meaningful when all betas are real; 1-based, d = padded_degree.
    std::complex<double> beta(int i) const;
};

/// Profile of h^<r> for f = h/(1-t)^d. Requires d >= 1 and a nonzero
/// numerator constant term. Throws NoConvergence if the root finder fails.
RootProfile beta_profile(const RationalSeries& f, int r, double tol = 1e-12);

/// v_0 <= ... <= v_k >= ... >= v_end for some k (weak), checked exactly.
bool is_unimodal(const std::vector<Rational>& v);
/// v_i^2 >= v_{i-1} v_{i+1} for all interior i, checked exactly.
bool is_log_concave(const std::vector<Rational>& v);

/// What gets root-profiled per order: the transformed numerator h^<r>
/// (limit 0) or the f-polynomial derived from it in the t^i(1-t)^{d-i}
/// basis (limit -1).
enum class SweepTarget { HNumerator, FPolynomial };

struct SweepReport {
    RationalSeries input;
    std::vector<int> orders;
    SweepTarget target = SweepTarget::HNumerator;
    double tolerance = 1e-12;
    /// Whether the expanded coefficients satisfy a_n >= 0 for all large n:
    /// for d >= 1 this is exactly
    /// h(1) > 0 (the numerator of a canonical series cannot vanish at 1).
    /// Violations are flagged here, never refused.
    bool nonnegative_tail = true;
    std::vector<RootProfile> profiles;
    /// Least probed r such that every probed r' >= r has all betas real with
    /// at least d-1 strictly negative (certified); nullopt if never attained.
    std::optional<int> threshold;
    /// Per consecutive probed pair: max_{i <= d-2} |beta(i) change|; empty
    /// when d <= 2 (no middle betas exist), nullopt entries where a profile
    /// is complex or unconverged.
    std::vector<std::optional<double>> middle_cauchy;
    /// Per consecutive probed pair: change of the minimum beta (signed).
    std::vector<std::optional<double>> min_beta_delta;
    /// Per probed order: |beta(d) - L| with L the target limit.
    std::vector<std::optional<double>> target_gap;

    double target_limit() const { return target == SweepTarget::FPolynomial ? -1.0 : 0.0; }
};

/// Runs beta profiles over strictly increasing orders (each >= 1) and
/// aggregates the large-order convergence diagnostics. Root-finder
/// failures are recorded per order (converged = false), not fatal.
SweepReport sweep(const RationalSeries& f, const std::vector<int>& orders,
                  SweepTarget target = SweepTarget::HNumerator, double tol = 1e-12);

}  // namespace veronese
