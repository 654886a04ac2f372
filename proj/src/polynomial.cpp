#include "tristrip/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tristrip {

namespace {

void require_same_variable(const UniPoly& a, const UniPoly& b) {
    if (a.variable() != b.variable())
        throw std::invalid_argument("univariate polynomials are in different variables");
}

// c * d * (d-1) * ... * (d-order+1), the coefficient produced by
// differentiating c*t^d `order` times.
Rational falling_factor(const Rational& c, unsigned d, unsigned order) {
    Integer f = 1;
    for (unsigned t = 0; t < order; ++t) f *= d - t;
    return c * Rational(f);
}

}  // namespace

UniPoly::UniPoly(Var variable, std::initializer_list<std::pair<unsigned, Rational>> terms)
    : variable_(variable) {
    for (const auto& [deg, c] : terms) add_term(deg, c);
}

UniPoly UniPoly::monomial(Var variable, const Rational& coeff, unsigned degree) {
    UniPoly p(variable);
    p.add_term(degree, coeff);
    return p;
}

void UniPoly::add_term(unsigned degree, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(degree, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int UniPoly::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

Rational UniPoly::coeff(unsigned degree) const {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? Rational() : it->second;
}

BiPoly UniPoly::to_bipoly() const {
    BiPoly out;
    for (const auto& [deg, c] : terms_)
        out += BiPoly::monomial(c, variable_ == Var::X ? deg : 0,
                                variable_ == Var::Y ? deg : 0);
    return out;
}

UniPoly UniPoly::operator-() const {
    UniPoly out(variable_);
    for (const auto& [deg, c] : terms_) out.terms_.emplace(deg, -c);
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same_variable(*this, o);
    for (const auto& [deg, c] : o.terms_) add_term(deg, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    require_same_variable(*this, o);
    for (const auto& [deg, c] : o.terms_) add_term(deg, -c);
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [deg, coeff] : terms_) coeff *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_variable(a, b);
    UniPoly out(a.variable());
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
    return out;
}

UniPoly derivative(const UniPoly& p, unsigned order) {
    UniPoly out(p.variable());
    for (const auto& [deg, c] : p.terms_) {
        if (deg < order) continue;
        out.add_term(deg - order, falling_factor(c, deg, order));
    }
    return out;
}

UniPoly antiderivative(const UniPoly& p) {
    UniPoly out(p.variable());
    for (const auto& [deg, c] : p.terms_)
        out.terms_.emplace(deg + 1, c / Rational(static_cast<long>(deg) + 1));
    return out;
}

Rational evaluate(const UniPoly& p, const Rational& at) {
    Rational sum;
    for (const auto& [deg, c] : p.terms_) sum += c * pow(at, deg);
    return sum;
}

UniPoly reflect(const UniPoly& p) {
    UniPoly out(p.variable());
    for (const auto& [deg, c] : p.terms_)
        out.terms_.emplace(deg, deg % 2 ? -c : c);
    return out;
}

BiPoly::BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

BiPoly BiPoly::monomial(const Rational& coeff, unsigned x_exp, unsigned y_exp) {
    BiPoly p;
    p.add_term({x_exp, y_exp}, coeff);
    return p;
}

void BiPoly::add_term(Exponents e, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best, static_cast<int>(e.x + e.y));
    return best;
}

int BiPoly::degree(Var v) const {
    int best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best, static_cast<int>(v == Var::X ? e.x : e.y));
    return best;
}

Rational BiPoly::coeff(unsigned x_exp, unsigned y_exp) const {
    const auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? Rational() : it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return out;
}

BiPoly diff(const BiPoly& p, Var v, unsigned order) {
    BiPoly out;
    for (const auto& [e, c] : p.terms_) {
        const unsigned deg = v == Var::X ? e.x : e.y;
        if (deg < order) continue;
        const Exponents shifted = v == Var::X ? Exponents{deg - order, e.y}
                                              : Exponents{e.x, deg - order};
        out.add_term(shifted, falling_factor(c, deg, order));
    }
    return out;
}

Rational evaluate(const BiPoly& p, const Rational& x0, const Rational& y0) {
    Rational sum;
    for (const auto& [e, c] : p.terms_) sum += c * pow(x0, e.x) * pow(y0, e.y);
    return sum;
}

UniPoly substitute_y(const BiPoly& p, const Rational& y0) {
    UniPoly out(Var::X);
    for (const auto& [e, c] : p.terms_) out.add_term(e.x, c * pow(y0, e.y));
    return out;
}

BiPoly tricomi_apply(const BiPoly& p) {
    return BiPoly::monomial(1, 0, 1) * diff(p, Var::X, 2) + diff(p, Var::Y, 2);
}

}  // namespace tristrip
