#include "veronese/root_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "veronese/simplicial.hpp"
#include "veronese/sturm.hpp"
#include "veronese/veronese.hpp"

namespace veronese {

std::complex<double> RootProfile::beta(int i) const {
    const int d = padded_degree;
    if (i < 1 || i > d) throw std::out_of_range("RootProfile::beta");
    if (i == d) return betas[static_cast<size_t>(d - 1)];
    if (i == d - 1) return betas[0];
    return betas[static_cast<size_t>(i)];
}

namespace {

RootProfile make_profile(Polynomial numerator, int series_dim, int order, double tol) {
    if (numerator.is_zero() || numerator.coeff(0) == 0)
        throw std::invalid_argument("root profile: numerator needs a nonzero constant term");
    RootProfile prof;
    prof.order = order;
    const int deg = *numerator.degree();
    prof.padded_degree = std::max(series_dim, deg);
    prof.real_count = deg >= 1 ? real_root_multiplicity(numerator) : 0;
    prof.negative_count = deg >= 1 ? negative_real_root_multiplicity(numerator) : 0;
    prof.all_real = deg >= 1 ? is_real_rooted(numerator) : true;

    if (deg >= 1) {
        try {
            prof.betas = numeric_roots(reversed(numerator, deg), tol);
        } catch (const NoConvergence&) {
            prof.converged = false;
        }
    }
    if (prof.converged) {
        prof.betas.resize(static_cast<size_t>(prof.padded_degree), {0.0, 0.0});
        std::sort(prof.betas.begin(), prof.betas.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        const double real_cut = std::sqrt(tol);
        prof.classes.reserve(prof.betas.size());
        for (const auto& z : prof.betas) {
            if (std::abs(z.imag()) >= real_cut)
                prof.classes.push_back(BetaClass::Complex);
            else
                prof.classes.push_back(z.real() < 0 ? BetaClass::RealNegative
                                                    : BetaClass::RealNonnegative);
        }
    } else {
        prof.betas.clear();
    }
    prof.numerator = std::move(numerator);
    return prof;
}

}  // namespace

RootProfile beta_profile(const RationalSeries& f, int r, double tol) {
    if (f.denom_power() < 1)
        throw std::invalid_argument("beta_profile: series must have denominator power >= 1");
    if (f.numerator().is_zero() || f.numerator().coeff(0) == 0)
        throw std::invalid_argument("beta_profile: numerator constant term must be nonzero");
    RootProfile prof =
        make_profile(veronese_numerator(f.numerator(), f.denom_power(), r), f.denom_power(), r, tol);
    if (!prof.converged)
        throw NoConvergence("beta_profile: root finder did not converge at order " +
                            std::to_string(r));
    return prof;
}

bool is_unimodal(const std::vector<Rational>& v) {
    size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return i + 1 >= v.size();
}

bool is_log_concave(const std::vector<Rational>& v) {
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] * v[i] < v[i - 1] * v[i + 1]) return false;
    return true;
}

SweepReport sweep(const RationalSeries& f, const std::vector<int>& orders, SweepTarget target,
                  double tol) {
    for (size_t k = 0; k < orders.size(); ++k) {
        if (orders[k] < 1) throw std::invalid_argument("sweep: orders must be >= 1");
        if (k > 0 && orders[k] <= orders[k - 1])
            throw std::invalid_argument("sweep: orders must be strictly increasing");
    }
    if (f.numerator().is_zero() || f.numerator().coeff(0) == 0)
        throw std::invalid_argument("sweep: numerator constant term must be nonzero");
    const int d = f.denom_power();
    if (d < 1) throw std::invalid_argument("sweep: series must have denominator power >= 1");

    SweepReport report;
    report.input = f;
    report.orders = orders;
    report.target = target;
    report.tolerance = tol;
    report.nonnegative_tail = sgn(f.numerator()(1)) > 0;

    for (int r : orders) {
        Polynomial numer = veronese_numerator(f.numerator(), d, r);
        if (target == SweepTarget::FPolynomial) numer = f_polynomial_from_h(numer, d);
        report.profiles.push_back(make_profile(std::move(numer), d, r, tol));
    }

    const auto usable = [&](const RootProfile& p) {
        return p.converged && p.all_real && p.padded_degree == d;
    };

    // R-hat: least probed order from which every later profile stays all-real
    // with at least d-1 strictly negative betas.
    for (size_t k = orders.size(); k-- > 0;) {
        const RootProfile& p = report.profiles[k];
        const bool ok = p.converged && p.all_real && p.negative_count + 1 >= p.padded_degree;
        if (!ok) break;
        report.threshold = orders[k];
    }

    const double limit = report.target_limit();
    for (const auto& p : report.profiles) {
        if (usable(p))
            report.target_gap.push_back(std::abs(p.beta(d).real() - limit));
        else
            report.target_gap.push_back(std::nullopt);
    }
    for (size_t k = 0; k + 1 < report.profiles.size(); ++k) {
        const RootProfile& a = report.profiles[k];
        const RootProfile& b = report.profiles[k + 1];
        const bool ok = usable(a) && usable(b);
        if (d >= 3) {
            if (ok) {
                double worst = 0.0;
                for (int i = 1; i <= d - 2; ++i)
                    worst = std::max(worst, std::abs(b.beta(i).real() - a.beta(i).real()));
                report.middle_cauchy.push_back(worst);
            } else {
                report.middle_cauchy.push_back(std::nullopt);
            }
        }
        if (ok && d >= 2)
            report.min_beta_delta.push_back(b.beta(d - 1).real() - a.beta(d - 1).real());
        else
            report.min_beta_delta.push_back(std::nullopt);
    }
    return report;
}

}  // namespace veronese
