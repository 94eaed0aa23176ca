#include <doctest.h>

#include <random>

#include "cyclaudit/multipoly.hpp"

using namespace cyclaudit;

namespace {

const VarList kXY{"x", "y"};

MultiPoly rand_poly(std::mt19937_64& rng, const VarList& vars, unsigned max_deg = 4,
                    int max_terms = 6) {
    MultiPoly p = MultiPoly::zero(vars);
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = static_cast<unsigned>(rng() % (max_deg + 1));
        const std::int64_t num = static_cast<std::int64_t>(rng() % 21) - 10;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 6) + 1;
        p += MultiPoly::from_terms(vars, {{e, Rational(num, den)}});
    }
    return p;
}

}  // namespace

TEST_CASE("construction and canonical form") {
    const MultiPoly x = MultiPoly::variable(kXY, "x");
    const MultiPoly y = MultiPoly::variable(kXY, "y");
    const MultiPoly p = x * x - x + MultiPoly::constant(kXY, Rational(1, 6));
    CHECK(p.str() == "x^2 - x + 1/6");
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in("x") == 2);
    CHECK(p.degree_in("y") == 0);
    CHECK((x - x).is_zero());
    CHECK((x - x).str() == "0");
    CHECK((x * y).str() == "x*y");
    CHECK((x + y).str() == "x + y");            // graded-lex tie broken toward x
    CHECK((y * y + x).str() == "y^2 + x");      // degree first
    CHECK_THROWS_AS(MultiPoly::variable(kXY, "z"), UnknownVariable);
}

TEST_CASE("variable lists must match") {
    const MultiPoly x = MultiPoly::variable({"x"}, "x");
    const MultiPoly x2 = MultiPoly::variable(kXY, "x");
    CHECK_THROWS_AS(x + x2, VariableMismatch);
    CHECK_NOTHROW(x.lifted(kXY) + x2);
    CHECK(x.lifted(kXY) == x2);
    CHECK(x2.without_vars({"y"}) == x);
    CHECK_THROWS_AS((x2 * MultiPoly::variable(kXY, "y")).without_vars({"y"}), VariableMismatch);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        const MultiPoly a = rand_poly(rng, kXY), b = rand_poly(rng, kXY), c = rand_poly(rng, kXY);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(202);
    const VarList target{"u", "v"};
    for (int i = 0; i < 300; ++i) {
        const MultiPoly p = rand_poly(rng, kXY, 3, 4), q = rand_poly(rng, kXY, 3, 4);
        const std::map<std::string, MultiPoly> bind{
            {"x", rand_poly(rng, target, 2, 3)},
            {"y", rand_poly(rng, target, 2, 3)},
        };
        CHECK((p + q).substitute(bind, target) ==
              p.substitute(bind, target) + q.substitute(bind, target));
        CHECK((p * q).substitute(bind, target) ==
              p.substitute(bind, target) * q.substitute(bind, target));
    }
}

TEST_CASE("spec substitution examples") {
    const VarList xv{"x"};
    const MultiPoly x = MultiPoly::variable(xv, "x");
    const MultiPoly b2 = x * x - x + MultiPoly::constant(xv, Rational(1, 6));
    CHECK(b2.substitute_value("x", Rational(1)).constant_value() == Rational(1, 6));

    const VarList yz{"y", "z"};
    const MultiPoly img = x.substitute(
        {{"x", MultiPoly::variable(yz, "y") + MultiPoly::variable(yz, "z")}}, yz);
    CHECK(img == MultiPoly::variable(yz, "y") + MultiPoly::variable(yz, "z"));

    const VarList rs{"r", "s"};
    const MultiPoly rs_prod = MultiPoly::variable(rs, "r") * MultiPoly::variable(rs, "s");
    CHECK(rs_prod.substitute({{"r", MultiPoly::zero(rs)}}, rs).is_zero());
}

TEST_CASE("derivative and evaluation") {
    const MultiPoly x = MultiPoly::variable(kXY, "x");
    const MultiPoly y = MultiPoly::variable(kXY, "y");
    const MultiPoly p = x.pow(3) * y + x.scaled(Rational(2));
    CHECK(p.derivative("x") == x.pow(2) * y.scaled(Rational(3)) +
                                   MultiPoly::constant(kXY, Rational(2)));
    CHECK(p.evaluate({{"x", Rational(2)}, {"y", Rational(1, 2)}}) == Rational(8));
}

TEST_CASE("gcd and exact division") {
    const VarList xv{"x"};
    const MultiPoly x = MultiPoly::variable(xv, "x");
    const MultiPoly one = MultiPoly::constant(xv, Rational(1));
    // (x-1)(x+1) vs (x-1)(x+2)
    const MultiPoly a = (x - one) * (x + one);
    const MultiPoly b = (x - one) * (x + one + one);
    CHECK(poly_gcd(a, b) == x - one);
    CHECK(divide_exact(a, x - one) == x + one);
    CHECK_THROWS_AS(divide_exact(a, x + one + one), Error);

    // multivariate: (x+y) common factor
    const MultiPoly X = MultiPoly::variable(kXY, "x");
    const MultiPoly Y = MultiPoly::variable(kXY, "y");
    const MultiPoly g = X + Y;
    const MultiPoly p = g * (X - Y);
    const MultiPoly q = g * (X * Y + MultiPoly::constant(kXY, Rational(3)));
    const MultiPoly d = poly_gcd(p, q);
    CHECK(d == g.scaled(g.leading_coefficient().inverse()));
    CHECK(divide_exact(p, d) * d == p);

    std::mt19937_64 rng(303);
    for (int i = 0; i < 60; ++i) {
        const MultiPoly f = rand_poly(rng, kXY, 3, 3);
        const MultiPoly h = rand_poly(rng, kXY, 2, 3);
        if (f.is_zero() || h.is_zero()) continue;
        const MultiPoly gg = poly_gcd(f * h, h);
        // gcd divides both and is divisible by (monic) h up to the f*h gcd
        CHECK(divide_exact(f * h, gg) * gg == f * h);
        CHECK(divide_exact(h, poly_gcd(gg, h)) * poly_gcd(gg, h) == h);
    }
}

TEST_CASE("generalized binomial over a polynomial ring") {
    const VarList sv{"s"};
    const MultiPoly s = MultiPoly::variable(sv, "s");
    const MultiPoly expect =
        (s * s - s).scaled(Rational(1, 2));  // (s^2 - s)/2
    CHECK(generalized_binomial(s, 2) == expect);
    CHECK(generalized_binomial(s, 0) == MultiPoly::constant(sv, Rational(1)));
    // degree-k and integer specialization
    for (unsigned k = 0; k <= 6; ++k) {
        const MultiPoly b = generalized_binomial(s, k);
        CHECK(b.total_degree() == k);
        for (std::int64_t m = 0; m <= 8; ++m)
            CHECK(b.evaluate({{"s", Rational(m)}}) ==
                  generalized_binomial(Rational(m), k));
    }
}

TEST_CASE("content and primitive part") {
    const VarList xv{"x"};
    const MultiPoly x = MultiPoly::variable(xv, "x");
    const MultiPoly p = x.scaled(Rational(4, 6)) + MultiPoly::constant(xv, Rational(2, 3));
    const auto [c, pp] = p.content_primitive();
    CHECK(c * pp.leading_coefficient() == p.leading_coefficient());
    CHECK(pp.leading_coefficient().sign() > 0);
    CHECK(pp == x + MultiPoly::constant(xv, Rational(1)));
}
