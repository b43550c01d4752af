#pragma once

#include <stdexcept>
#include <vector>

#include "veronese/rational_series.hpp"

namespace veronese {

struct LengthMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// Face counts (f_{-1}, f_0, ..., f_{d-1}); index k holds f_{k-1} and
/// f_{-1} = 1 stands for the empty face.
using FVector = std::vector<Integer>;

/// A simplicial complex on ground set {1..n}, stored by its facets. The
/// constructor normalizes: facets are sorted, deduplicated, and faces
/// contained in another facet are dropped, so the stored family is an
/// antichain. Instances are immutable.
class SimplicialComplex {
public:
    SimplicialComplex(int ground_size, std::vector<std::vector<int>> facets);

    int ground_size() const { return ground_size_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    /// dim = max facet size - 1; the empty complex has dimension -1.
    int dimension() const;
    /// All nonempty faces (downward closure), lexicographically sorted.
    std::vector<std::vector<int>> faces() const;

private:
    int ground_size_;
    std::vector<std::vector<int>> facets_;
};

FVector f_vector(const SimplicialComplex& complex);

/// h(t) = sum_i f_{i-1} t^i (1-t)^{d-i} with d = len(f)-1, expanded exactly.
Polynomial h_from_f(const FVector& f);

/// Inverse basis change: f_{i-1} = sum_j binom(d-j, i-j) h_j. Throws
/// LengthMismatch when deg h > d and std::domain_error when the result is
/// not integral.
FVector f_from_h(const Polynomial& h, int d);

/// Same change of basis over the rationals, as the polynomial
/// sum_i f_{i-1} t^i (no integrality requirement).
Polynomial f_polynomial_from_h(const Polynomial& h, int d);

/// h_from_f(f_vector(complex)) over (1-t)^d with d = dim + 1.
RationalSeries hilbert_series(const SimplicialComplex& complex);

/// A lattice point of the dilated simplex: n nonnegative coordinates
/// summing to r.
using GridPoint = std::vector<int>;

struct Subdivision {
    SimplicialComplex complex;            // vertices relabeled 1..N
    std::vector<GridPoint> coordinates;   // coordinates[v-1] = grid point of label v
};

/// The r-th edgewise subdivision. Faces are the subsets A of the grid whose
/// union of supports is a face of the input and whose pairwise differences
/// map into {0,1}^n under the partial-sum map, one direction or the other.
/// Facets are found
/// per input facet as the maximal cliques of the pairwise compatibility
/// graph, then deduplicated and pruned across facets. Vertex labels follow
/// the lexicographic order of their grid coordinates.
Subdivision edgewise_subdivision_detailed(const SimplicialComplex& complex, int r);
SimplicialComplex edgewise_subdivision(const SimplicialComplex& complex, int r);

/// a_{i,l}^{(r)} = sum over compositions i = j_1 + ... + j_l (parts >= 1) of
/// binom(r-1, j_1 - 1) binom(r, j_2) ... binom(r, j_l); a_{0,0} = 1 and
/// a_{i,l} = 0 for i < l.
Integer a_coeff(long i, long ell, long r);

/// The closed-form f-vector transform of the r-th edgewise subdivision:
/// f_{i-1}' = sum_{l=i}^{d} a_{l,i}^{(r)} f_{l-1}, with f_{-1}' = 1.
FVector f_vector_transform(const FVector& f, int r);

/// Checks h(subdivision) = veronese_numerator(h, d, r) exactly, both sides
/// computed independently (d = dim + 1).
bool veronese_h_consistency(const SimplicialComplex& complex, int r);

}  // namespace veronese
