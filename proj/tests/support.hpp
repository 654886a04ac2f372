#pragma once

// Deterministic random generators and canonical-form checks shared by the
// test binaries. Every suite seeds its own engine so failures reproduce.

#include "tristrip/polynomial.hpp"
#include "tristrip/strip.hpp"

#include <random>
#include <string>

namespace tristrip::testing {

inline Rational random_rational(std::mt19937& rng, long num_bound = 99, long den_bound = 12) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

// Uniform random decimal string of roughly `digits` digits, as a rational.
inline Rational random_big_rational(std::mt19937& rng, int digits) {
    std::uniform_int_distribution<int> digit('0', '9');
    std::uniform_int_distribution<int> coin(0, 1);
    std::string num = coin(rng) ? "-" : "";
    std::string den;
    for (int i = 0; i < digits; ++i) {
        num += static_cast<char>(digit(rng));
        den += static_cast<char>(digit(rng));
    }
    den += '7';  // keep the denominator nonzero
    return Rational(Integer(num, 10), Integer(den, 10));
}

inline BiPoly random_bipoly(std::mt19937& rng, unsigned max_degree, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_degree);
    BiPoly p;
    const unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
        const unsigned i = expo(rng);
        std::uniform_int_distribution<unsigned> rest(0, max_degree - i);
        p += BiPoly::monomial(random_rational(rng), i, rest(rng));
    }
    return p;
}

inline UniPoly random_unipoly(std::mt19937& rng, Var v, unsigned max_degree, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_degree);
    UniPoly p(v);
    const unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t)
        p += UniPoly::monomial(v, random_rational(rng), expo(rng));
    return p;
}

inline Strip random_strip(std::mt19937& rng, long bound = 4) {
    for (;;) {
        const Rational a = random_rational(rng, bound, 4);
        const Rational b = random_rational(rng, bound, 4);
        if (a < b) return Strip(a, b);
        if (b < a) return Strip(b, a);
    }
}

inline bool coeff_canonical(const Rational& c) {
    if (c.denominator() <= 0) return false;
    Integer g;
    const Integer num = c.numerator();
    const Integer den = c.denominator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return c.is_zero() ? den == 1 : g == 1;
}

inline bool canonical(const BiPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c.is_zero() || !coeff_canonical(c)) return false;
    return true;
}

inline bool canonical(const UniPoly& p) {
    for (const auto& [d, c] : p.terms())
        if (c.is_zero() || !coeff_canonical(c)) return false;
    return true;
}

}  // namespace tristrip::testing
