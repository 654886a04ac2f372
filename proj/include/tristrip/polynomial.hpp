#pragma once

#include "tristrip/rational.hpp"

#include <initializer_list>
#include <map>
#include <utility>

namespace tristrip {

enum class Var { X, Y };

class BiPoly;

// Univariate polynomial over exact rationals. Carries a tag naming its
// variable; arithmetic between polynomials in different variables throws.
// Canonical form: no stored coefficient is zero.
class UniPoly {
public:
    using TermMap = std::map<unsigned, Rational>;

    explicit UniPoly(Var variable) : variable_(variable) {}
    UniPoly(Var variable, std::initializer_list<std::pair<unsigned, Rational>> terms);

    static UniPoly monomial(Var variable, const Rational& coeff, unsigned degree);

    Var variable() const { return variable_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coeff(unsigned degree) const;

    BiPoly to_bipoly() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly p, const Rational& c) { p *= c; return p; }
    friend UniPoly operator*(const Rational& c, UniPoly p) { p *= c; return p; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    friend UniPoly derivative(const UniPoly& p, unsigned order);
    // Antiderivative with zero constant of integration.
    friend UniPoly antiderivative(const UniPoly& p);
    friend Rational evaluate(const UniPoly& p, const Rational& at);
    // p(-t): substitute the negated variable.
    friend UniPoly reflect(const UniPoly& p);
    friend UniPoly substitute_y(const BiPoly& p, const Rational& y0);

private:
    void add_term(unsigned degree, const Rational& coeff);

    Var variable_;
    TermMap terms_;
};

// Exponent pair of a bivariate monomial x^i y^j.
struct Exponents {
    unsigned x = 0;
    unsigned y = 0;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// Sparse bivariate polynomial in x and y over exact rationals.
// Canonical form: no stored coefficient is zero; equality is map equality.
class BiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    BiPoly() = default;
    explicit BiPoly(const Rational& constant);

    static BiPoly monomial(const Rational& coeff, unsigned x_exp, unsigned y_exp);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree(Var v) const;
    Rational coeff(unsigned x_exp, unsigned y_exp) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly p, const Rational& c) { p *= c; return p; }
    friend BiPoly operator*(const Rational& c, BiPoly p) { p *= c; return p; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    friend BiPoly diff(const BiPoly& p, Var v, unsigned order);
    friend Rational evaluate(const BiPoly& p, const Rational& x0, const Rational& y0);
    // Restriction to the horizontal line y = y0, as a polynomial in x.
    friend UniPoly substitute_y(const BiPoly& p, const Rational& y0);

private:
    void add_term(Exponents e, const Rational& coeff);

    TermMap terms_;
};

// y * d2p/dx2 + d2p/dy2, the degenerate-elliptic operator everything here
// revolves around.
BiPoly tricomi_apply(const BiPoly& p);

}  // namespace tristrip
