#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tristrip {

using Integer = mpz_class;

// Arbitrary-precision rational scalar, always kept canonical:
// gcd(|numerator|, denominator) = 1, denominator > 0, zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "p" or "p/q" with an optional sign on p; q unsigned digits.
    static std::optional<Rational> from_string(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational abs(const Rational& r);

private:
    mpq_class value_;
};

Rational pow(const Rational& base, unsigned exp);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace tristrip
