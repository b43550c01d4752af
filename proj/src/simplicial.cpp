#include "veronese/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "veronese/veronese.hpp"

namespace veronese {

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<std::vector<int>> facets)
    : ground_size_(ground_size) {
    if (ground_size < 0) throw std::invalid_argument("SimplicialComplex: negative ground set");
    std::set<std::vector<int>> cleaned;
    for (auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("SimplicialComplex: empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.front() < 1 || f.back() > ground_size)
            throw std::invalid_argument("SimplicialComplex: vertex outside 1..n");
        cleaned.insert(std::move(f));
    }
    for (const auto& f : cleaned) {
        const bool contained = std::any_of(cleaned.begin(), cleaned.end(), [&](const auto& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!contained) facets_.push_back(f);
    }
}

int SimplicialComplex::dimension() const {
    int dim = -1;
    for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

std::vector<std::vector<int>> SimplicialComplex::faces() const {
    std::set<std::vector<int>> all;
    for (const auto& f : facets_) {
        const size_t k = f.size();
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < k; ++b)
                if (mask & (1ul << b)) face.push_back(f[b]);
            all.insert(std::move(face));
        }
    }
    return {all.begin(), all.end()};
}

FVector f_vector(const SimplicialComplex& complex) {
    FVector f(static_cast<size_t>(complex.dimension()) + 2);
    f[0] = 1;
    for (const auto& face : complex.faces()) f[face.size()] += 1;
    return f;
}

Polynomial h_from_f(const FVector& f) {
    if (f.empty()) throw LengthMismatch("h_from_f: empty f-vector");
    const int d = static_cast<int>(f.size()) - 1;
    Polynomial h;
    for (int i = 0; i <= d; ++i) {
        std::vector<Rational> mono(static_cast<size_t>(i) + 1);
        mono[static_cast<size_t>(i)] = Rational(f[static_cast<size_t>(i)]);
        h = h + Polynomial(std::move(mono)) * one_minus_t_power(d - i);
    }
    return h;
}

Polynomial f_polynomial_from_h(const Polynomial& h, int d) {
    if (!h.is_zero() && *h.degree() > d)
        throw LengthMismatch("f_polynomial_from_h: deg h exceeds d");
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j)
            c[static_cast<size_t>(i)] += Rational(binomial(d - j, i - j)) * h.coeff(j);
    return Polynomial(std::move(c));
}

FVector f_from_h(const Polynomial& h, int d) {
    const Polynomial fp = f_polynomial_from_h(h, d);
    FVector f(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const Rational c = fp.coeff(i);
        if (c.get_den() != 1) throw std::domain_error("f_from_h: non-integral face count");
        f[static_cast<size_t>(i)] = c.get_num();
    }
    return f;
}

RationalSeries hilbert_series(const SimplicialComplex& complex) {
    return RationalSeries(h_from_f(f_vector(complex)), complex.dimension() + 1);
}

namespace {

/// The pairwise condition: some direction of u - v has every partial sum
/// within {0,1}.
bool esd2_compatible(const GridPoint& u, const GridPoint& v) {
    long s = 0;
    bool up = true, down = true;
    for (size_t i = 0; i < u.size(); ++i) {
        s += u[i] - v[i];
        if (s < 0 || s > 1) up = false;
        if (s < -1 || s > 0) down = false;
        if (!up && !down) return false;
    }
    return true;
}

void compositions_on(const std::vector<int>& support, size_t pos, int remaining, GridPoint& point,
                     std::vector<GridPoint>& out) {
    if (pos + 1 == support.size()) {
        point[static_cast<size_t>(support[pos] - 1)] = remaining;
        out.push_back(point);
        point[static_cast<size_t>(support[pos] - 1)] = 0;
        return;
    }
    for (int a = 0; a <= remaining; ++a) {
        point[static_cast<size_t>(support[pos] - 1)] = a;
        compositions_on(support, pos + 1, remaining - a, point, out);
    }
    point[static_cast<size_t>(support[pos] - 1)] = 0;
}

/// Grid points of the r-dilated simplex supported inside `support` (1-based
/// vertex labels), as full n-length coordinate vectors.
std::vector<GridPoint> grid_points_on(const std::vector<int>& support, int n, int r) {
    std::vector<GridPoint> out;
    GridPoint point(static_cast<size_t>(n), 0);
    compositions_on(support, 0, r, point, out);
    return out;
}

void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& cliques) {
    if (p.empty() && x.empty()) {
        cliques.push_back(r);
        return;
    }
    // pivot: vertex of P (union) X with the most neighbors in P
    int pivot = -1;
    size_t best = 0;
    for (const auto* side : {&p, &x})
        for (int u : *side) {
            size_t cnt = 0;
            for (int v : p) cnt += adj[static_cast<size_t>(u)][static_cast<size_t>(v)] ? 1 : 0;
            if (pivot < 0 || cnt > best) {
                pivot = u;
                best = cnt;
            }
        }
    std::vector<int> candidates;
    for (int v : p)
        if (!adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) np.push_back(u);
        for (int u : x)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(np), std::move(nx), cliques);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

Subdivision edgewise_subdivision_detailed(const SimplicialComplex& complex, int r) {
    if (r < 1) throw std::invalid_argument("edgewise_subdivision: order must be >= 1");
    const int n = complex.ground_size();

    std::set<std::vector<GridPoint>> candidates;
    for (const auto& facet : complex.facets()) {
        const auto pts = grid_points_on(facet, n, r);
        const size_t m = pts.size();
        std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                adj[i][j] = adj[j][i] = esd2_compatible(pts[i], pts[j]) ? 1 : 0;
        std::vector<int> all(m);
        for (size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
        std::vector<std::vector<int>> cliques;
        std::vector<int> current;
        bron_kerbosch(adj, current, all, {}, cliques);
        for (const auto& clique : cliques) {
            std::vector<GridPoint> face;
            face.reserve(clique.size());
            for (int idx : clique) face.push_back(pts[static_cast<size_t>(idx)]);
            std::sort(face.begin(), face.end());
            candidates.insert(std::move(face));
        }
    }

    // Cross-facet pruning: keep only set-maximal candidates.
    std::vector<std::vector<GridPoint>> maximal;
    for (const auto& c : candidates) {
        const bool contained = std::any_of(candidates.begin(), candidates.end(), [&](const auto& g) {
            return g.size() > c.size() && std::includes(g.begin(), g.end(), c.begin(), c.end());
        });
        if (!contained) maximal.push_back(c);
    }

    std::set<GridPoint> vertex_set;
    for (const auto& c : maximal) vertex_set.insert(c.begin(), c.end());
    std::vector<GridPoint> coordinates(vertex_set.begin(), vertex_set.end());
    std::map<GridPoint, int> label;
    for (size_t i = 0; i < coordinates.size(); ++i) label[coordinates[i]] = static_cast<int>(i) + 1;

    std::vector<std::vector<int>> facets;
    facets.reserve(maximal.size());
    for (const auto& c : maximal) {
        std::vector<int> f;
        f.reserve(c.size());
        for (const auto& pt : c) f.push_back(label[pt]);
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return Subdivision{SimplicialComplex(static_cast<int>(coordinates.size()), std::move(facets)),
                       std::move(coordinates)};
}

SimplicialComplex edgewise_subdivision(const SimplicialComplex& complex, int r) {
    return edgewise_subdivision_detailed(complex, r).complex;
}

Integer a_coeff(long i, long ell, long r) {
    if (r < 1) throw std::invalid_argument("a_coeff: r must be >= 1");
    if (i < 0 || ell < 0) return 0;
    if (ell == 0) return i == 0 ? 1 : 0;
    if (i < ell) return 0;
    // truncated convolution over the parts j >= 1
    std::vector<Integer> acc(static_cast<size_t>(i) + 1);
    for (long j = 1; j <= i; ++j) acc[static_cast<size_t>(j)] = binomial(r - 1, j - 1);
    for (long part = 2; part <= ell; ++part) {
        std::vector<Integer> next(acc.size());
        for (long m = 1; m <= i; ++m)
            for (long j = 1; j <= m; ++j)
                next[static_cast<size_t>(m)] += acc[static_cast<size_t>(m - j)] * binomial(r, j);
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(i)];
}

FVector f_vector_transform(const FVector& f, int r) {
    if (r < 1) throw std::invalid_argument("f_vector_transform: order must be >= 1");
    if (f.empty() || f[0] != 1)
        throw std::domain_error("f_vector_transform: f-vector must start with f_{-1} = 1");
    const int d = static_cast<int>(f.size()) - 1;
    FVector out(f.size());
    out[0] = 1;
    for (int i = 1; i <= d; ++i) {
        Integer acc = 0;
        for (int ell = i; ell <= d; ++ell) acc += a_coeff(ell, i, r) * f[static_cast<size_t>(ell)];
        out[static_cast<size_t>(i)] = std::move(acc);
    }
    return out;
}

bool veronese_h_consistency(const SimplicialComplex& complex, int r) {
    const int d = complex.dimension() + 1;
    const Polynomial lhs = h_from_f(f_vector(edgewise_subdivision(complex, r)));
    const Polynomial rhs = veronese_numerator(h_from_f(f_vector(complex)), d, r);
    return lhs == rhs;
}

}  // namespace veronese
