#include "veronese/numeric_roots.hpp"

#include <algorithm>
#include <cmath>

namespace veronese {

namespace {

constexpr int kMaxSweeps = 1000;

struct Eval {
    std::complex<double> value;
    std::complex<double> derivative;
    double weighted_norm;  // sum |c_i| |z|^i
};

Eval evaluate(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> v = 0.0, dv = 0.0;
    double s = 0.0;
    const double az = std::abs(z);
    for (size_t i = c.size(); i-- > 0;) {
        dv = dv * z + v;
        v = v * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {v, dv, s};
}

/// Initial guesses on circles whose radii come from the upper convex hull of
/// the points (i, log|c_i|): each hull edge of horizontal span k contributes
/// k guesses at the edge's slope radius.
std::vector<std::complex<double>> initial_guesses(const std::vector<double>& c) {
    const size_t n = c.size() - 1;
    std::vector<std::pair<double, double>> pts;  // (i, log|c_i|)
    for (size_t i = 0; i <= n; ++i)
        if (c[i] != 0.0) pts.emplace_back(static_cast<double>(i), std::log(std::abs(c[i])));
    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const double cross = (b.first - a.first) * (pt.second - a.second) -
                                 (b.second - a.second) * (pt.first - a.first);
            if (cross >= 0) hull.pop_back();  // b lies on or below the segment a..pt
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (size_t e = 1; e < hull.size(); ++e) {
        const int span = static_cast<int>(hull[e].first - hull[e - 1].first);
        const double radius = std::exp((hull[e - 1].second - hull[e].second) / span);
        for (int j = 0; j < span; ++j) {
            const double angle = 2.0 * M_PI * static_cast<double>(z.size()) / static_cast<double>(n) + 0.4;
            z.push_back(std::polar(radius, angle));
        }
    }
    return z;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const Polynomial& p, double tol) {
    if (p.is_zero() || *p.degree() < 1)
        throw std::invalid_argument("numeric_roots: polynomial degree must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("numeric_roots: tol must be positive");

    // Split off exact roots at zero.
    int zero_roots = 0;
    while (p.coeff(zero_roots) == 0) ++zero_roots;
    const int deg = *p.degree() - zero_roots;
    std::vector<std::complex<double>> roots(static_cast<size_t>(zero_roots), 0.0);
    if (deg >= 1) {
        std::vector<double> c(static_cast<size_t>(deg) + 1);
        double scale = 0.0;
        for (int i = 0; i <= deg; ++i) {
            c[static_cast<size_t>(i)] = to_double(p.coeff(i + zero_roots));
            scale = std::max(scale, std::abs(c[static_cast<size_t>(i)]));
        }
        for (double& x : c) x /= scale;

        auto z = initial_guesses(c);
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
            converged = true;
            for (size_t k = 0; k < z.size(); ++k) {
                const Eval ev = evaluate(c, z[k]);
                if (std::abs(ev.value) <= tol * ev.weighted_norm) continue;
                converged = false;
                if (ev.derivative == 0.0) {
                    z[k] += std::complex<double>(1e-3, 1e-3) * (1.0 + std::abs(z[k]));
                    continue;
                }
                const std::complex<double> newton = ev.value / ev.derivative;
                std::complex<double> repulsion = 0.0;
                for (size_t j = 0; j < z.size(); ++j) {
                    if (j == k) continue;
                    const std::complex<double> diff = z[k] - z[j];
                    if (diff == 0.0) continue;
                    repulsion += 1.0 / diff;
                }
                const std::complex<double> denom = 1.0 - newton * repulsion;
                if (denom == 0.0) {
                    z[k] += std::complex<double>(1e-3, -1e-3) * (1.0 + std::abs(z[k]));
                    continue;
                }
                z[k] -= newton / denom;
            }
        }
        if (!converged)
            throw NoConvergence("numeric_roots: Aberth iteration did not reach the residual target");
        roots.insert(roots.end(), z.begin(), z.end());
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace veronese
