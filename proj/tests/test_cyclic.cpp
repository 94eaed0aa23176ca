#include <doctest.h>

#include <random>

#include "cyclaudit/cyclic.hpp"
#include "cyclaudit/parser.hpp"

using namespace cyclaudit;

namespace {

AppellPolynomialTable table_of(const char* name, int n_max) {
    return family_polynomials(builtin_family(name, static_cast<std::size_t>(n_max) + 2), n_max);
}

}  // namespace

TEST_CASE("bracket: hand-expanded examples") {
    const auto bern = table_of("bernoulli", 3);
    BracketParams p;
    p.n = 1;
    CHECK(bracket(bern, p) == parse_poly("t*x - s*y + 1/2*s - 1/2*t", {"s", "t", "x", "y"}));
    p.n = 0;
    CHECK(bracket(bern, p) == parse_poly("1", {"s", "t", "x", "y"}));
    p.n = 2;
    // (t^2-t)/2 B2(x) - st(x-1/2)(y-1/2) + (s^2-s)/2 B2(y), the three-term display
    const VarList ring{"s", "t", "x", "y"};
    const MultiPoly s = MultiPoly::variable(ring, "s");
    const MultiPoly t = MultiPoly::variable(ring, "t");
    const MultiPoly b2x = parse_poly("x^2 - x + 1/6", ring);
    const MultiPoly b2y = parse_poly("y^2 - y + 1/6", ring);
    const MultiPoly expect = (t * t - t).scaled(Rational(1, 2)) * b2x -
                             s * t * parse_poly("x - 1/2", ring) * parse_poly("y - 1/2", ring) +
                             (s * s - s).scaled(Rational(1, 2)) * b2y;
    CHECK(bracket(bern, p) == expect);
}

TEST_CASE("bracket bounds") {
    const auto bern = table_of("bernoulli", 3);
    BracketParams p;
    p.n = 9;
    CHECK_THROWS_AS(bracket(bern, p), TableTooShort);
    p.n = 17;
    CHECK_THROWS_AS(bracket(bern, p), ConfigError);  // above the configured ceiling
}

TEST_CASE("symbolic bracket agrees with pure rational evaluation") {
    std::mt19937_64 rng(808);
    for (const char* name : {"bernoulli", "euler", "centered_hermite"}) {
        const auto table = table_of(name, 5);
        for (int n = 0; n <= 5; ++n) {
            BracketParams p;
            p.n = n;
            const MultiPoly sym = bracket(table, p);
            for (int trial = 0; trial < 10; ++trial) {
                auto draw = [&rng] {
                    return Rational(static_cast<std::int64_t>(rng() % 13) - 6,
                                    1 + static_cast<std::int64_t>(rng() % 5));
                };
                const Rational s = draw(), t = draw(), x = draw(), y = draw();
                CHECK(sym.evaluate({{"s", s}, {"t", t}, {"x", x}, {"y", y}}) ==
                      bracket_eval(table, n, s, t, x, y));
            }
        }
    }
}

TEST_CASE("transpose symmetry holds for every builtin family") {
    for (const char* name : {"bernoulli", "euler", "centered_monomial", "centered_hermite"}) {
        const auto table = table_of(name, 8);
        for (int n = 0; n <= 8; ++n) {
            BracketParams lhs;
            lhs.n = n;
            BracketParams rhs;
            rhs.n = n;
            rhs.s = BracketArg::symbol("t");
            rhs.t = BracketArg::symbol("s");
            rhs.x = BracketArg::symbol("y");
            rhs.y = BracketArg::symbol("x");
            MultiPoly right = bracket(table, rhs);
            const MultiPoly left = bracket(table, lhs);
            right = right.lifted(left.vars());
            if (n % 2) right = -right;
            CHECK(left == right);
        }
    }
}

TEST_CASE("cyclic defect: Bernoulli vanishes, others expose the over-claim") {
    const auto bern = table_of("bernoulli", 8);
    for (int n = 0; n <= 8; ++n) CHECK(cyclic_defect(bern, n).is_zero());

    const auto cm = table_of("centered_monomial", 4);
    const MultiPoly d2 = cyclic_defect(cm, 2);
    // -rs(2-r-s)/8, hand-derived
    CHECK(d2 == parse_poly("1/8*r^2*s + 1/8*r*s^2 - 1/4*r*s", kCyclicVars));
    CHECK_FALSE(d2.is_zero());

    const auto eul = table_of("euler", 4);
    CHECK(cyclic_defect(eul, 2) == parse_poly("-1/4*r^2*s - 1/4*r*s^2 + 1/2*r*s", kCyclicVars));
}

TEST_CASE("cyclic defect agrees with definition-level evaluation") {
    std::mt19937_64 rng(909);
    for (const char* name : {"euler", "centered_monomial"}) {
        const auto table = table_of(name, 4);
        for (int n = 0; n <= 4; ++n) {
            const MultiPoly sym = cyclic_defect(table, n);
            for (int trial = 0; trial < 8; ++trial) {
                auto draw = [&rng] {
                    return Rational(static_cast<std::int64_t>(rng() % 13) - 6,
                                    1 + static_cast<std::int64_t>(rng() % 5));
                };
                const Rational r = draw(), s = draw(), x = draw(), y = draw();
                CHECK(sym.evaluate({{"r", r}, {"s", s}, {"x", x}, {"y", y}}) ==
                      cyclic_defect_eval(table, n, r, s, x, y));
            }
        }
    }
}

TEST_CASE("degree bound on the defect") {
    for (const char* name : {"euler", "centered_monomial", "centered_hermite"}) {
        const auto table = table_of(name, 5);
        for (int n = 1; n <= 5; ++n) {
            const MultiPoly d = cyclic_defect(table, n);
            unsigned deg_rs = 0, deg_xy = 0;
            for (const auto& [e, c] : d.terms()) {
                deg_rs = std::max(deg_rs, e[0] + e[1]);
                deg_xy = std::max(deg_xy, e[2] + e[3]);
            }
            CHECK(deg_xy <= static_cast<unsigned>(n));
            // one extra power of r or s comes from the outer multipliers
            CHECK(deg_rs <= static_cast<unsigned>(n) + 1);
        }
    }
}

TEST_CASE("sampled defects are deterministic and match the exact polynomial") {
    const auto cm = table_of("centered_monomial", 3);
    const auto a = cyclic_defect_sampled(cm, 2, 42, 5);
    const auto b = cyclic_defect_sampled(cm, 2, 42, 5);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].residual == b[i].residual);
    }
    // spec point checks
    CHECK(cyclic_defect_eval(cm, 2, Rational(1), Rational(1), Rational(0), Rational(0)) ==
          Rational(0));
    CHECK(cyclic_defect_eval(cm, 2, Rational(1), Rational(1, 2), Rational(0), Rational(0)) ==
          Rational(-1, 32));
    const auto bern = table_of("bernoulli", 6);
    for (const auto& rep : cyclic_defect_sampled(bern, 6, 42, 5)) CHECK(rep.is_zero);
    CHECK_THROWS_AS(cyclic_defect_sampled(bern, 2, 1, 0), ConfigError);
}

TEST_CASE("per-k binomial expression of the proof") {
    // n=0, k=0: r+s+t with t = -r-s collapses to zero
    CHECK(binomial_cyclic_defect(0, 0).is_zero());
    // n=1, k=0: rs + (r+s)(1-r-s), nonzero as a polynomial
    CHECK(binomial_cyclic_defect(1, 0) ==
          parse_poly("-r^2 - r*s - s^2 + r + s", {"r", "s"}));
    // n=2, k=1 at (r,s) = (1, 1/2) evaluates to 3/4
    CHECK(binomial_cyclic_defect(2, 1).evaluate({{"r", Rational(1)}, {"s", Rational(1, 2)}}) ==
          Rational(3, 4));
    CHECK_THROWS_AS(binomial_cyclic_defect(2, 3), ConfigError);
}
