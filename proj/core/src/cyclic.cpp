#include "cyclaudit/cyclic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cyclaudit {

namespace {

void require_degrees(const AppellPolynomialTable& table, int n) {
    if (n < 0 || n > table.max_degree)
        throw TableTooShort("table for '" + table.family.name + "' covers degrees 0.." +
                            std::to_string(table.max_degree) + ", need " + std::to_string(n));
}

MultiPoly arg_poly(const BracketArg& a, const VarList& ring) {
    if (a.is_symbol) return MultiPoly::variable(ring, a.name);
    return MultiPoly::constant(ring, a.value);
}

}  // namespace

MultiPoly bracket_expr(const AppellPolynomialTable& table, int n, const MultiPoly& s_arg,
                       const MultiPoly& t_arg, const MultiPoly& x_arg, const MultiPoly& y_arg) {
    require_degrees(table, n);
    const VarList& ring = s_arg.vars();
    MultiPoly sum = MultiPoly::zero(ring);
    for (int k = 0; k <= n; ++k) {
        const MultiPoly fx = table.polys[static_cast<std::size_t>(n - k)]
                                 .substitute({{"x", x_arg}}, ring);
        const MultiPoly fy = table.polys[static_cast<std::size_t>(k)]
                                 .substitute({{"x", y_arg}}, ring);
        MultiPoly term = generalized_binomial(s_arg, static_cast<unsigned>(k)) *
                         generalized_binomial(t_arg, static_cast<unsigned>(n - k)) * fx * fy;
        if (k % 2) term = -term;
        sum += term;
    }
    return sum;
}

MultiPoly bracket(const AppellPolynomialTable& table, const BracketParams& params) {
    if (params.n < 0 || params.n > params.max_n)
        throw ConfigError("bracket: n = " + std::to_string(params.n) +
                          " outside configured maximum " + std::to_string(params.max_n));
    // ring = the symbolic slots, canonical names r,s,t,x,y first, extras after
    VarList ring;
    for (const BracketArg* a : {&params.s, &params.t, &params.x, &params.y})
        if (a->is_symbol && std::find(ring.begin(), ring.end(), a->name) == ring.end())
            ring.push_back(a->name);
    auto rank = [](const std::string& v) {
        const VarList canon{"r", "s", "t", "x", "y"};
        const auto it = std::find(canon.begin(), canon.end(), v);
        const long idx = static_cast<long>(it - canon.begin());
        return std::pair<long, std::string>(idx, v);
    };
    std::sort(ring.begin(), ring.end(),
              [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
    if (ring.empty()) ring.push_back("x");  // constant bracket still needs a ring to live in
    return bracket_expr(table, params.n, arg_poly(params.s, ring), arg_poly(params.t, ring),
                        arg_poly(params.x, ring), arg_poly(params.y, ring));
}

Rational bracket_eval(const AppellPolynomialTable& table, int n, const Rational& s,
                      const Rational& t, const Rational& x, const Rational& y) {
    require_degrees(table, n);
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        const Rational fx = table.polys[static_cast<std::size_t>(n - k)].evaluate({{"x", x}});
        const Rational fy = table.polys[static_cast<std::size_t>(k)].evaluate({{"x", y}});
        Rational term = generalized_binomial(s, static_cast<unsigned>(k)) *
                        generalized_binomial(t, static_cast<unsigned>(n - k)) * fx * fy;
        if (k % 2) term = -term;
        sum += term;
    }
    return sum;
}

MultiPoly cyclic_defect(const AppellPolynomialTable& table, int n) {
    require_degrees(table, n);
    const VarList& ring = kCyclicVars;
    const MultiPoly r = MultiPoly::variable(ring, "r");
    const MultiPoly s = MultiPoly::variable(ring, "s");
    const MultiPoly x = MultiPoly::variable(ring, "x");
    const MultiPoly y = MultiPoly::variable(ring, "y");
    const MultiPoly t = MultiPoly::constant(ring, Rational(n)) - r - s;
    const MultiPoly z = MultiPoly::constant(ring, Rational(1)) - x - y;
    return r * bracket_expr(table, n, s, t, x, y) +
           s * bracket_expr(table, n, t, r, y, z) +
           t * bracket_expr(table, n, r, s, z, x);
}

Rational cyclic_defect_eval(const AppellPolynomialTable& table, int n, const Rational& r,
                            const Rational& s, const Rational& x, const Rational& y) {
    const Rational t = Rational(n) - r - s;
    const Rational z = Rational(1) - x - y;
    return r * bracket_eval(table, n, s, t, x, y) + s * bracket_eval(table, n, t, r, y, z) +
           t * bracket_eval(table, n, r, s, z, x);
}

std::vector<DefectReport> cyclic_defect_sampled(const AppellPolynomialTable& table, int n,
                                                std::uint64_t seed, int count) {
    if (count < 1) throw ConfigError("cyclic_defect_sampled: count must be >= 1");
    require_degrees(table, n);
    std::mt19937_64 rng(seed);
    // hand-rolled draws: small rationals, reproducible across standard libraries
    auto draw = [&rng] {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
        return Rational(num, den);
    };
    std::vector<DefectReport> out;
    for (int i = 0; i < count; ++i) {
        const Rational r = draw(), s = draw(), x = draw(), y = draw();
        const Rational value = cyclic_defect_eval(table, n, r, s, x, y);
        DefectReport rep;
        rep.check = "cyclic-defect-sample";
        std::ostringstream params;
        params << "family=" << table.family.name << " n=" << n << " point=(" << r.str() << ","
               << s.str() << "," << x.str() << "," << y.str() << ") seed=" << seed << " i=" << i;
        rep.params = params.str();
        rep.is_zero = value.is_zero();
        rep.residual = value.str();
        out.push_back(std::move(rep));
    }
    return out;
}

MultiPoly binomial_cyclic_defect(int n, int k) {
    if (k < 0 || k > n) throw ConfigError("binomial_cyclic_defect: need 0 <= k <= n");
    const VarList ring{"r", "s"};
    const MultiPoly r = MultiPoly::variable(ring, "r");
    const MultiPoly s = MultiPoly::variable(ring, "s");
    const MultiPoly t = MultiPoly::constant(ring, Rational(n)) - r - s;
    const unsigned uk = static_cast<unsigned>(k), unk = static_cast<unsigned>(n - k);
    return r * generalized_binomial(s, uk) * generalized_binomial(t, unk) +
           s * generalized_binomial(t, uk) * generalized_binomial(r, unk) +
           t * generalized_binomial(r, uk) * generalized_binomial(s, unk);
}

}  // namespace cyclaudit
