#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cyclaudit/errors.hpp"

namespace cyclaudit {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept reduced with denominator >= 1.
/// Zero is 0/1. Serializes as "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(Integer(n)) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}         // NOLINT
    Rational(std::int64_t num, std::int64_t den) : Rational(Integer(num), Integer(den)) {}
    Rational(Integer num, Integer den);

    static Rational parse(std::string_view text);  // throws InvalidRationalText

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const;        // throws ZeroDenominator on zero
    Rational pow(long e) const;      // negative e inverts; throws ZeroDenominator on 0^-e
    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }
    std::string str() const;

private:
    boost::multiprecision::cpp_rational v_;
};

Integer factorial(unsigned n);
Integer binomial_integer(unsigned n, unsigned k);

/// Falling-factorial binomial u(u-1)...(u-k+1)/k!; matches the classical
/// binomial at nonnegative integer u >= k, total for arbitrary rational u.
Rational generalized_binomial(const Rational& u, unsigned k);

}  // namespace cyclaudit
