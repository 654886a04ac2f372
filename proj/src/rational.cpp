#include "tristrip/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tristrip {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) {
    Rational out;
    mpq_abs(out.value_.get_mpq_t(), r.value_.get_mpq_t());
    return out;
}

std::optional<Rational> Rational::from_string(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) return std::nullopt;
    }
    std::string_view magnitude = num;
    bool negative = false;
    if (!magnitude.empty() && (magnitude.front() == '+' || magnitude.front() == '-')) {
        negative = magnitude.front() == '-';
        magnitude.remove_prefix(1);
    }
    if (!all_digits(magnitude)) return std::nullopt;

    // Base 10 always: gmp's base autodetection would read "07" as octal.
    Integer n{std::string(magnitude), 10};
    if (negative) n = -n;
    const Integer d = den.empty() ? Integer(1) : Integer{std::string(den), 10};
    if (sgn(d) == 0) return std::nullopt;
    return Rational(n, d);
}

Rational pow(const Rational& base, unsigned exp) {
    const Integer bn = base.numerator();
    const Integer bd = base.denominator();
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), bn.get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), bd.get_mpz_t(), exp);
    return Rational(n, d);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace tristrip
