#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

struct ZeroPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

/// Number of distinct real roots of p (whole real line), via an exact Sturm
/// chain on the square-free part. Throws ZeroPolynomial when p = 0.
int sturm_real_roots(const Polynomial& p);

/// Distinct real roots in the half-open interval (lo, hi]. Requires lo < hi
/// and that neither endpoint is a root of p (throws std::invalid_argument).
int sturm_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Yun decomposition p = lc * prod f_k^k with the f_k monic, square-free and
/// pairwise coprime; only factors of positive degree are returned.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

/// Total number of real roots counted with multiplicity.
int real_root_multiplicity(const Polynomial& p);

/// Real roots in (-inf, 0), counted with multiplicity.
int negative_real_root_multiplicity(const Polynomial& p);

/// True iff every complex root of p is real (multiplicity total = deg p).
/// Nonzero constants are vacuously real-rooted.
bool is_real_rooted(const Polynomial& p);

}  // namespace veronese
