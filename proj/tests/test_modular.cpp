#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "cyclaudit/modular.hpp"

using namespace cyclaudit;

namespace {

PolyQ rand_polyq(std::mt19937_64& rng, int w) {
    PolyQ p = PolyQ::zero(w);
    for (auto& c : p.coef)
        c = Rational(static_cast<std::int64_t>(rng() % 19) - 9,
                     1 + static_cast<std::int64_t>(rng() % 6));
    return p;
}

GL2Mat rand_unimodular(std::mt19937_64& rng) {
    // random products of S and T^{+-1} stay in GL2(Z) with det +-1
    GL2Mat g{1, 0, 0, 1};
    const GL2Mat t_inv{1, -1, 0, 1};
    for (int i = 0; i < 6; ++i) {
        switch (rng() % 3) {
            case 0: g = g * kMatS; break;
            case 1: g = g * kMatT; break;
            default: g = g * t_inv; break;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("slash action basics") {
    std::mt19937_64 rng(111);
    for (int w : {2, 4, 10}) {
        const PolyQ p = rand_polyq(rng, w);
        // identity acts trivially; -I acts trivially on even weight
        CHECK(slash(p, GL2Mat{1, 0, 0, 1}).coef == p.coef);
        CHECK(slash(p, GL2Mat{-1, 0, 0, -1}).coef == p.coef);
    }
    // z^w | S = 1 for even w
    for (int w : {2, 4, 6}) {
        PolyQ zw = PolyQ::zero(w);
        zw.coef[static_cast<std::size_t>(w)] = Rational(1);
        const PolyQ img = slash(zw, kMatS);
        CHECK(img.coef[0] == Rational(1));
        for (int j = 1; j <= w; ++j) CHECK(img.coef[static_cast<std::size_t>(j)] == Rational(0));
    }
    // (z^2 - 1) | S = 1 - z^2
    const PolyQ p = polyq_from_text("z^2 - 1", 2);
    const PolyQ ps = slash(p, kMatS);
    CHECK(polyq_str(ps) == "-z^2 + 1");
    CHECK_THROWS_AS(slash(p, GL2Mat{2, 0, 0, 1}), NonUnimodular);
}

TEST_CASE("right-action law on random inputs") {
    std::mt19937_64 rng(222);
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 2 + 2 * static_cast<int>(rng() % 5);
        const PolyQ p = rand_polyq(rng, w);
        const GL2Mat g1 = rand_unimodular(rng), g2 = rand_unimodular(rng);
        const PolyQ lhs = slash(slash(p, g1), g2);
        const PolyQ rhs = slash(p, g1 * g2);
        CHECK(lhs.coef == rhs.coef);
    }
}

TEST_CASE("group relations of the fixed conventions") {
    // the paper's relation (ST)^3 = -I, and U^3 = -I for our order-3 lift
    const GL2Mat st = kMatS * kMatT;
    const GL2Mat st3 = st * st * st;
    CHECK(st3.a == -1);
    CHECK(st3.b == 0);
    CHECK(st3.c == 0);
    CHECK(st3.d == -1);
    const GL2Mat u3 = kMatU * kMatU * kMatU;
    CHECK(u3.a == -1);
    CHECK(u3.b == 0);
    CHECK(u3.c == 0);
    CHECK(u3.d == -1);
    // convention bridge: U^2 = -(TS), so on even weight the 1+U+U^2 relation
    // matches the textbook 1+TS+(TS)^2 one
    const GL2Mat u2 = kMatU * kMatU;
    const GL2Mat ts = kMatT * kMatS;
    CHECK(u2.a == -ts.a);
    CHECK(u2.b == -ts.b);
    CHECK(u2.c == -ts.c);
    CHECK(u2.d == -ts.d);
}

TEST_CASE("three-term maps: frozen hand expansions") {
    const PolyQ zsq = polyq_from_text("z^2 - 1", 2);
    CHECK(polyq_str(three_term_paper(zsq, 4)) == "4*z - 2");
    CHECK(three_term_standard(zsq, 4).is_zero());
    const PolyQ one = polyq_from_text("1", 2);
    CHECK(polyq_str(three_term_paper(one, 4)) == "2*z^2 - 4*z + 3");
    CHECK(polyq_str(three_term_standard(one, 4)) == "2*z^2 - 2*z + 2");
    const PolyQ line = polyq_from_text("z^2 - 4*z + 1", 2);
    CHECK(three_term_paper(line, 4).is_zero());
    // z^10 - 1 solves the standard relation at k=12
    CHECK(three_term_standard(polyq_from_text("z^10 - 1", 10), 12).is_zero());
    CHECK_THROWS_AS(three_term_paper(zsq, 6), WeightMismatch);
}

TEST_CASE("s-relation: frozen hand expansions") {
    CHECK(s_relation(polyq_from_text("z^2 - 1", 2)).is_zero());
    CHECK(polyq_str(s_relation(polyq_from_text("z^2 + 1", 2))) == "2*z^2 + 2");
    CHECK(s_relation(polyq_from_text("z", 2)).is_zero());
}

TEST_CASE("period space dimensions and membership") {
    CHECK(period_space(4).basis.size() == 1);
    CHECK(period_space(6).basis.size() == 1);
    CHECK(period_space(12).basis.size() == 3);
    CHECK(period_space(24).basis.size() == 5);
    for (int k = 4; k <= 30; k += 2)
        CHECK(static_cast<int>(period_space(k).basis.size()) == 2 * cuspform_dim(k) + 1);
    // k=4 basis spans z^2 - 1
    const PeriodSpace s4 = period_space(4);
    RatMatrix basis{{s4.basis[0].coef}};
    CHECK(in_row_space(basis, {Rational(-1), Rational(0), Rational(1)}));
    // z^w - 1 lies in period_space(w+2) for even w in [2, 20]
    for (int w = 2; w <= 20; w += 2) {
        const PeriodSpace sp = period_space(w + 2);
        RatMatrix rows;
        for (const auto& b : sp.basis) rows.push_back(b.coef);
        std::vector<Rational> v(static_cast<std::size_t>(w) + 1, Rational(0));
        v[0] = Rational(-1);
        v[static_cast<std::size_t>(w)] = Rational(1);
        CHECK(in_row_space(rows, v));
    }
    CHECK_THROWS_AS(period_space(3), UnsupportedWeight);
    CHECK_THROWS_AS(period_space(2), UnsupportedWeight);
    CHECK_THROWS_AS(period_space(42), UnsupportedWeight);
}

TEST_CASE("literal three-term relation admits no joint solution at k=4") {
    // the literal-only nullspace is the line through z^2-4z+1; adding the
    // S-relation kills it
    RatMatrix lit(3, std::vector<Rational>(3, Rational(0)));
    for (std::size_t j = 0; j < 3; ++j) {
        PolyQ e = PolyQ::zero(2);
        e.coef[j] = Rational(1);
        const PolyQ img = three_term_paper(e, 4);
        for (std::size_t i = 0; i < 3; ++i) lit[i][j] = img.coef[i];
    }
    const RatMatrix lit_null = nullspace(lit, 3);
    REQUIRE(lit_null.size() == 1);
    CHECK(in_row_space(lit_null, {Rational(1), Rational(-4), Rational(1)}));
    RatMatrix joint = lit;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rational> row(3, Rational(0));
        for (std::size_t j = 0; j < 3; ++j) {
            PolyQ e = PolyQ::zero(2);
            e.coef[j] = Rational(1);
            row[j] = s_relation(e).coef[i];
        }
        joint.push_back(std::move(row));
    }
    CHECK(nullspace(joint, 3).empty());
}

TEST_CASE("cusp form dimension formula") {
    CHECK(cuspform_dim(4) == 0);
    CHECK(cuspform_dim(10) == 0);
    CHECK(cuspform_dim(12) == 1);
    CHECK(cuspform_dim(14) == 0);
    CHECK(cuspform_dim(26) == 1);
    CHECK(cuspform_dim(24) == 2);
    CHECK(cuspform_dim(36) == 3);
}

TEST_CASE("q-expansions") {
    const QExpansion e4 = eisenstein_qexp(4, 3);
    CHECK(e4.a[0] == Rational(1));
    CHECK(e4.a[1] == Rational(240));
    CHECK(e4.a[2] == Rational(2160));
    CHECK(e4.a[3] == Rational(6720));
    CHECK(eisenstein_qexp(6, 1).a[1] == Rational(-504));
    const QExpansion d = delta_qexp(12);
    CHECK(d.a[0] == Rational(0));
    CHECK(d.a[1] == Rational(1));
    CHECK(d.a[2] == Rational(-24));
    CHECK(d.a[3] == Rational(252));
    CHECK(d.a[4] == Rational(-1472));
    CHECK(d.a[10] == Rational(-115920));
    // tau is multiplicative: tau(6) = tau(2) tau(3)
    CHECK(d.a[6] == d.a[2] * d.a[3]);
}

TEST_CASE("numeric modularity of Delta and E4") {
    const QExpansion d = delta_qexp(40);
    const std::complex<double> samples[] = {{0.0, 1.0}, {0.0, 2.0}};
    CHECK(modularity_check_numeric(d, samples, 1e-10) < 1e-10);
    const QExpansion e4 = eisenstein_qexp(4, 60);
    const std::complex<double> s2[] = {{0.3, 1.1}};
    CHECK(modularity_check_numeric(e4, s2, 1e-8) < 1e-8);
    // starved truncation must refuse
    const QExpansion tiny = delta_qexp(3);
    CHECK_THROWS_AS(modularity_check_numeric(tiny, samples, 1e-10), InsufficientTruncation);
}

TEST_CASE("completed L-values") {
    const QExpansion d = delta_qexp(41);
    CHECK_THROWS_AS(completed_L(eisenstein_qexp(4, 41), 4, 1, 20), NotCuspidal);
    CHECK_THROWS_AS(completed_L(d, 12, 0, 20), ConfigError);
    CHECK_THROWS_AS(completed_L(d, 12, 1, 5), ConfigError);
    for (int m = 1; m <= 11; ++m) {
        const double a = completed_L(d, 12, m, 20);
        const double b = completed_L(d, 12, m, 40);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
        CHECK(completed_L(d, 12, 12 - m, 40) == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("Lambda agrees with an adaptive-quadrature oracle") {
    // oracle: adaptive Simpson on int_1^T Delta(it)(t^{m-1} + t^{11-m}) dt
    const QExpansion d = delta_qexp(80);
    auto delta_it = [&](double t) {
        double sum = 0.0;
        for (std::size_t n = 1; n < d.a.size(); ++n)
            sum += d.a[n].to_double() * std::exp(-2.0 * std::numbers::pi * n * t);
        return sum;
    };
    for (int m : {1, 3, 6}) {
        auto f = [&](double t) {
            return delta_it(t) * (std::pow(t, m - 1) + std::pow(t, 11 - m));
        };
        // simple adaptive Simpson
        std::function<double(double, double, double, double, double, double, int)> simp =
            [&](double a, double b, double fa, double fb, double fm, double whole, int depth) {
                const double m1 = (a + b) / 2;
                const double lm = (a + m1) / 2, rm = (m1 + b) / 2;
                const double flm = f(lm), frm = f(rm);
                const double left = (m1 - a) / 6 * (fa + 4 * flm + fm);
                const double right = (b - m1) / 6 * (fm + 4 * frm + fb);
                if (depth > 24 || std::abs(left + right - whole) < 1e-14)
                    return left + right + (left + right - whole) / 15;
                return simp(a, m1, fa, fm, flm, left, depth + 1) +
                       simp(m1, b, fm, fb, frm, right, depth + 1);
            };
        const double a = 1.0, b = 10.0;
        const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
        const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
        const double oracle = simp(a, b, fa, fb, fm, whole, 0);
        const double lambda = completed_L(d, 12, m, 40);
        CHECK(std::abs(lambda - oracle) < 1e-8 * std::abs(lambda));
    }
}

TEST_CASE("numeric period polynomial of Delta") {
    const QExpansion d = delta_qexp(41);
    const PolyC r = period_polynomial_numeric(d, 12, 40);
    const double scale = max_norm(r);
    CHECK(max_norm(three_term_standard_c(r, 12)) / scale < 1e-8);
    CHECK(max_norm(s_relation_c(r)) / scale < 1e-8);
    // even coefficients are purely imaginary, odd ones real
    for (int j = 0; j <= 10; ++j) {
        if (j % 2 == 0)
            CHECK(std::abs(r.coef[static_cast<std::size_t>(j)].real()) < 1e-12 * scale);
        else
            CHECK(std::abs(r.coef[static_cast<std::size_t>(j)].imag()) < 1e-12 * scale);
    }
}

TEST_CASE("rational reconstruction") {
    CHECK(*rational_reconstruct(0.5, 1000, 1e-9) == Rational(1, 2));
    CHECK(*rational_reconstruct(-36.0 / 691.0, 1'000'000, 1e-9) == Rational(-36, 691));
    CHECK(*rational_reconstruct(2.0 / 3.0, 1000, 1e-9) == Rational(2, 3));
    CHECK(!rational_reconstruct(std::sqrt(2.0), 1000, 1e-12).has_value());
}
