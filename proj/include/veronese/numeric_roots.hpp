#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All complex roots of p by Aberth-Ehrlich simultaneous iteration in double
/// precision, initial guesses from the Newton polygon of the coefficient
/// moduli. Deterministic. A root z is accepted when
///   |p(z)| <= tol * sum_i |c_i| |z|^i,
/// i.e. tol bounds the relative backward error at z. Requires deg p >= 1 and
/// tol > 0; throws NoConvergence after 1000 sweeps.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p, double tol = 1e-12);

}  // namespace veronese
