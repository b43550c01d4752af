#pragma once

#include <stdexcept>

#include "veronese/int_matrix.hpp"
#include "veronese/rational_series.hpp"

namespace veronese {

struct DimensionZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// The coefficientwise numerator transform:
/// h_i^<r> = sum_{j=0}^{s} C(r-1, d, i*r - j) h_j for 0 <= i <= max(s, d),
/// trailing zeros trimmed. Total in h; r >= 1, d >= 0.
Polynomial veronese_numerator(const Polynomial& h, int d, int r);

/// f^<r> in canonical form: the series of the subsequence a_0, a_r, a_2r, ...
RationalSeries veronese_series(const RationalSeries& f, int r);

/// One transform application with its inputs, for reporting. The output pair
/// keeps the input's denominator power (no (1-t) cancellation applied).
struct VeroneseResult {
    RationalSeries input;
    int order = 1;
    Polynomial output_numerator;
    int output_denom_power = 0;
};

VeroneseResult veronese_apply(const RationalSeries& f, int r);

/// Degree reduction: writes f = p(t) + h1(t)/(1-t)^d with deg h1 <= d-1 and
/// returns p, the reduced series f1 = (p(0)(1-t)^d + h1)/(1-t)^d, and the
/// threshold max(1, s-d+1) beyond which f and f1 have equal Veronese images.
struct CutDegreeResult {
    Polynomial polynomial_part;
    RationalSeries reduced;
    int threshold = 1;
};

CutDegreeResult cut_degree(const RationalSeries& f);

/// The (d+1)x(d+1) operator matrix with entries C(r-1, d, i*r - j).
IntMatrix transform_matrix(int d, int r);

/// Checks C_{d,r} * L_d = L_d * diag(1, 1, r, ..., r^{d-1}) exactly
/// (column i of L_d is an eigenvector for eigenvalue r^{i-1}, i >= 1).
bool verify_factorization(int d, int r);

/// Checks sum_{j=0}^{d} C(r-1, d+1, i*r - j) A(d,j) = r^d A(d,i) for every
/// i = 0..d, including the i = 1 specialization summing to r^d.
bool check_euler_identity(int d, int r);

}  // namespace veronese
