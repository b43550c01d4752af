#include "veronese/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace veronese {

namespace {

std::string trimmed(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Integer& x) { return x.get_str(); }

double to_double(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace veronese
