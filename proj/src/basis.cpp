#include "tristrip/basis.hpp"

#include <stdexcept>

namespace tristrip {

namespace {

// The unique affine polynomial in y taking value_lower at strip.lower() and
// value_upper at strip.upper().
UniPoly affine_through(const Strip& strip, const Rational& value_lower,
                       const Rational& value_upper) {
    const Rational slope = (value_upper - value_lower) / strip.width();
    const Rational intercept = value_lower - slope * strip.lower();
    return UniPoly(Var::Y, {{1, slope}, {0, intercept}});
}

}  // namespace

const UniPoly& BasisFamily::poly(std::size_t m) const {
    if (m >= polys_.size()) throw std::out_of_range("basis family index not built");
    return polys_[m];
}

void BasisFamily::extend(std::size_t max_index) {
    if (polys_.empty()) {
        const Rational at_lower = side_ == Side::Lower ? 1 : 0;
        const Rational at_upper = side_ == Side::Upper ? 1 : 0;
        polys_.push_back(affine_through(strip_, at_lower, at_upper));
    }
    while (polys_.size() <= max_index) {
        const auto m = static_cast<long>(polys_.size());
        // p'' = -(2m)(2m-1) y p_{prev}; integrate twice, then add the affine
        // correction that zeroes both boundary values.
        const UniPoly rhs = UniPoly::monomial(Var::Y, Rational(-2 * m * (2 * m - 1)), 1) *
                            polys_.back();
        const UniPoly integral = antiderivative(antiderivative(rhs));
        const UniPoly correction = affine_through(strip_,
                                                  -evaluate(integral, strip_.lower()),
                                                  -evaluate(integral, strip_.upper()));
        polys_.push_back(integral + correction);
    }
}

BasisFamily build_family(const Strip& strip, Side side, std::size_t max_index) {
    BasisFamily family(strip, side);
    family.extend(max_index);
    return family;
}

BiPoly harmonic_lift(BasisFamily& family, unsigned n) {
    family.extend(n / 2);
    BiPoly sum;
    for (unsigned m = 0; 2 * m <= n; ++m) {
        const Rational weight{binomial(n, 2 * m)};
        for (const auto& [deg, c] : family.poly(m).terms())
            sum += BiPoly::monomial(weight * c, n - 2 * m, deg);
    }
    return sum;
}

BiPoly harmonic_lift(const Strip& strip, Side side, unsigned n) {
    BasisFamily family(strip, side);
    return harmonic_lift(family, n);
}

BasisFamily reflect_family(const BasisFamily& family) {
    if (!family.strip().is_symmetric())
        throw std::invalid_argument("reflection requires a strip symmetric about y = 0");
    std::vector<UniPoly> reflected;
    reflected.reserve(family.size());
    for (std::size_t m = 0; m < family.size(); ++m) {
        UniPoly q = reflect(family.poly(m));
        if (m % 2 == 1) q = -q;
        reflected.push_back(std::move(q));
    }
    return BasisFamily(family.strip(), opposite(family.side()), std::move(reflected));
}

}  // namespace tristrip
