#include "veronese/sturm.hpp"

namespace veronese {

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero() || p.leading() == 1) return p;
    return p * (Rational(1) / p.leading());
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = Polynomial::divmod(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

Polynomial square_free_part(const Polynomial& p) {
    const Polynomial g = poly_gcd(p, p.derivative());
    if (g.is_zero() || *g.degree() == 0) return monic(p);
    return monic(Polynomial::divmod(p, g).first);
}

std::vector<Polynomial> sturm_chain(const Polynomial& w) {
    std::vector<Polynomial> chain{w, w.derivative()};
    while (!chain.back().is_zero()) {
        auto rem = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-rem);
    }
    chain.pop_back();  // drop the trailing zero
    return chain;
}

struct Bound {
    enum Kind { NegInf, Point, PosInf } kind;
    Rational x;
};

int sign_at(const Polynomial& p, const Bound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case Bound::NegInf: {
            const int lead = sgn(p.leading());
            return (*p.degree() % 2 == 0) ? lead : -lead;
        }
        case Bound::PosInf:
            return sgn(p.leading());
        case Bound::Point:
            return sgn(p(b.x));
    }
    return 0;
}

int variations(const std::vector<Polynomial>& chain, const Bound& b) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int distinct_roots_between(const Polynomial& squarefree, const Bound& lo, const Bound& hi) {
    if (squarefree.is_zero() || *squarefree.degree() == 0) return 0;
    const auto chain = sturm_chain(squarefree);
    return variations(chain, lo) - variations(chain, hi);
}

}  // namespace

int sturm_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_real_roots: zero polynomial");
    const Polynomial w = square_free_part(p);
    return distinct_roots_between(w, {Bound::NegInf, 0}, {Bound::PosInf, 0});
}

int sturm_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_real_roots: need lo < hi");
    if (p(lo) == 0 || p(hi) == 0)
        throw std::invalid_argument("sturm_real_roots: interval endpoint is a root");
    const Polynomial w = square_free_part(p);
    return distinct_roots_between(w, {Bound::Point, lo}, {Bound::Point, hi});
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("square_free_decomposition: zero polynomial");
    std::vector<std::pair<Polynomial, int>> factors;
    if (*p.degree() == 0) return factors;
    const Polynomial f = monic(p);
    const Polynomial a0 = poly_gcd(f, f.derivative());
    if (*a0.degree() == 0) {
        factors.emplace_back(f, 1);
        return factors;
    }
    Polynomial b = Polynomial::divmod(f, a0).first;
    Polynomial c = Polynomial::divmod(f.derivative(), a0).first;
    Polynomial d = c - b.derivative();
    for (int k = 1; !b.is_zero() && *b.degree() > 0; ++k) {
        const Polynomial ak = poly_gcd(b, d);
        if (*ak.degree() > 0) factors.emplace_back(ak, k);
        b = Polynomial::divmod(b, ak).first;
        c = Polynomial::divmod(d, ak).first;
        d = c - b.derivative();
    }
    return factors;
}

int real_root_multiplicity(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("real_root_multiplicity: zero polynomial");
    int total = 0;
    for (const auto& [factor, mult] : square_free_decomposition(p))
        total += mult * sturm_real_roots(factor);
    return total;
}

int negative_real_root_multiplicity(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("negative_real_root_multiplicity: zero polynomial");
    int total = 0;
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        // strip the possible root at 0 so that the right endpoint is not a root
        Polynomial f = factor;
        while (!f.is_zero() && f.coeff(0) == 0) {
            std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
            f = Polynomial(std::move(shifted));
        }
        if (f.is_zero() || *f.degree() == 0) continue;
        total += mult * distinct_roots_between(f, {Bound::NegInf, 0}, {Bound::Point, 0});
    }
    return total;
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("is_real_rooted: zero polynomial");
    return real_root_multiplicity(p) == *p.degree();
}

}  // namespace veronese
