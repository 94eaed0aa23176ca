#include <doctest.h>

#include <random>

#include "cyclaudit/rational.hpp"

using namespace cyclaudit;

namespace {
Rational rand_rational(std::mt19937_64& rng) {
    const std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t den = static_cast<std::int64_t>(rng() % 50) + 1;
    return Rational(num, den);
}
}  // namespace

TEST_CASE("rationals stay reduced with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == Integer(2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational r = rand_rational(rng);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                         r.denominator()) == 1);
        CHECK(r.denominator() >= 1);
    }
}

TEST_CASE("rational arithmetic and serialization") {
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1) / Rational(-7, 5)) == Rational(-5, 7));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidRationalText);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidRationalText);
    CHECK_THROWS_AS(Rational::parse("x"), InvalidRationalText);
    CHECK_THROWS_AS(Rational::parse(""), InvalidRationalText);
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
    CHECK_THROWS_AS(Rational(3) / Rational(0), ZeroDenominator);
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroDenominator);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("generalized binomial") {
    CHECK(generalized_binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
    CHECK(generalized_binomial(Rational(3, 2), 2) == Rational(3, 8));
    CHECK(generalized_binomial(Rational(-1), 3) == Rational(-1));
    // matches the integer binomial for all m, k <= 12
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned k = 0; k <= 12; ++k)
            CHECK(generalized_binomial(Rational(static_cast<std::int64_t>(m)), k) ==
                  Rational(binomial_integer(m, k)));
}

TEST_CASE("pow and factorial") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial_integer(38, 19) == Integer("35345263800"));
}
