#include "cyclaudit/qengine.hpp"

#include <random>
#include <sstream>

#include "cyclaudit/appell.hpp"

namespace cyclaudit {

namespace {

RationalFunction q_power(const VarList& vars, long e) {
    return RationalFunction::variable(vars, "q").pow(e);
}

const char* kind_name(QFamilyKind k) {
    return k == QFamilyKind::q_bernoulli ? "q-bernoulli" : "q-euler";
}

void require_degrees(const QFamilyTable& table, int n) {
    if (n < 0 || n > table.max_degree)
        throw TableTooShort(std::string("q table for ") + kind_name(table.kind) +
                            " covers degrees 0.." + std::to_string(table.max_degree) +
                            ", need " + std::to_string(n));
}

// sum_i coeffs[i](q) * arg^i over arg's variable list
RationalFunction qpoly_at(const QPoly& p, const RationalFunction& arg) {
    const VarList& vars = arg.vars();
    RationalFunction sum = RationalFunction::zero(vars);
    RationalFunction power = RationalFunction::one(vars);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i > 0) power *= arg;
        if (!p.coeffs[i].is_zero()) sum += p.coeffs[i].lifted(vars) * power;
    }
    return sum;
}

}  // namespace

RationalFunction q_pochhammer(int n) {
    RationalFunction prod = RationalFunction::one(kQVar);
    for (int i = 1; i <= n; ++i)
        prod *= RationalFunction::one(kQVar) - q_power(kQVar, i);
    return prod;
}

RationalFunction q_integer(int m) {
    // (1 - q^m)/(1 - q); reduces to the q-integer polynomial
    return (RationalFunction::one(kQVar) - q_power(kQVar, m)) /
           (RationalFunction::one(kQVar) - q_power(kQVar, 1));
}

TruncatedSeries<RationalFunction> q_exponential(std::size_t order) {
    if (order < 1) throw ConfigError("q_exponential: order must be >= 1");
    std::vector<RationalFunction> c;
    c.reserve(order);
    RationalFunction poch = RationalFunction::one(kQVar);
    c.push_back(poch);
    for (std::size_t n = 1; n < order; ++n) {
        poch *= RationalFunction::one(kQVar) - q_power(kQVar, static_cast<long>(n));
        c.push_back(poch.inverse());
    }
    return TruncatedSeries<RationalFunction>(std::move(c));
}

RationalFunction gaussian_binomial(int m, int k) {
    if (k < 0) throw ConfigError("gaussian_binomial: k must be >= 0");
    RationalFunction prod = RationalFunction::one(kQVar);
    for (int i = 1; i <= k; ++i) {
        prod *= (RationalFunction::one(kQVar) - q_power(kQVar, m - k + i)) /
                (RationalFunction::one(kQVar) - q_power(kQVar, i));
    }
    return prod;
}

RationalFunction gaussian_binomial_symbolic(const RationalFunction& upper, int k) {
    if (k < 0) throw ConfigError("gaussian_binomial_symbolic: k must be >= 0");
    const VarList& vars = upper.vars();
    RationalFunction prod = RationalFunction::one(vars);
    for (int i = 1; i <= k; ++i) {
        prod *= (RationalFunction::one(vars) - upper * q_power(vars, i - k)) /
                (RationalFunction::one(vars) - q_power(vars, i));
    }
    return prod;
}

QFamilyTable q_family_polynomials(QFamilyKind kind, int n_max) {
    if (n_max < 0) throw ConfigError("q_family_polynomials: n_max must be >= 0");
    const std::size_t order = static_cast<std::size_t>(n_max) + 1;
    const VarList qx{"q", "x"};

    // E_q(wx): coefficient of w^n is x^n/(q;q)_n over {q,x}
    const TruncatedSeries<RationalFunction> eq = q_exponential(order);
    std::vector<RationalFunction> ex;
    ex.reserve(order);
    const RationalFunction x = RationalFunction::variable(qx, "x");
    RationalFunction xpow = RationalFunction::one(qx);
    for (std::size_t n = 0; n < order; ++n) {
        if (n > 0) xpow *= x;
        ex.push_back(eq[n].lifted(qx) * xpow);
    }
    const TruncatedSeries<RationalFunction> eq_wx(std::move(ex));

    TruncatedSeries<RationalFunction> prefactor = [&] {
        if (kind == QFamilyKind::q_bernoulli) {
            // w/(E_q(w)-1) = 1 / sum_{n>=1} w^{n-1}/(q;q)_n
            std::vector<RationalFunction> d;
            d.reserve(order);
            for (std::size_t n = 1; n <= order; ++n)
                d.push_back(n < order ? eq[n].lifted(qx)
                                      : q_pochhammer(static_cast<int>(n)).inverse().lifted(qx));
            return TruncatedSeries<RationalFunction>(std::move(d)).invert();
        }
        // 2/(E_q(w)+1)
        std::vector<RationalFunction> d;
        d.reserve(order);
        for (std::size_t n = 0; n < order; ++n) d.push_back(eq[n].lifted(qx));
        d[0] += RationalFunction::one(qx);
        return TruncatedSeries<RationalFunction>(std::move(d))
            .invert()
            .scaled(RationalFunction::constant(qx, Rational(2)));
    }();

    const TruncatedSeries<RationalFunction> gen = prefactor * eq_wx;

    QFamilyTable table;
    table.kind = kind;
    table.max_degree = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const RationalFunction entry =
            gen[static_cast<std::size_t>(n)] * q_pochhammer(n).lifted(qx);
        // entries lie in Q(q)[x]: after reduction the denominator is q-only
        if (entry.denominator().degree_in("x") != 0)
            throw Error("q_family_polynomials: entry not polynomial in x");
        QPoly poly;
        const auto num_by_x = entry.numerator().coefficients_in("x");
        const MultiPoly den_q = entry.denominator().without_vars({"x"});
        for (const MultiPoly& c : num_by_x)
            poly.coeffs.push_back(
                RationalFunction::from_quotient(c.without_vars({"x"}), den_q));
        while (poly.coeffs.size() < static_cast<std::size_t>(n) + 1)
            poly.coeffs.push_back(RationalFunction::zero(kQVar));
        table.polys.push_back(std::move(poly));
    }
    return table;
}

std::vector<DefectReport> q_to_one_check(const QFamilyTable& table) {
    std::vector<DefectReport> out;
    const RationalFunction one_minus_q =
        RationalFunction::one(kQVar) - RationalFunction::variable(kQVar, "q");
    for (int n = 0; n <= table.max_degree; ++n) {
        DefectReport rep;
        rep.check = "q-to-one";
        rep.params = std::string("kind=") + kind_name(table.kind) + " n=" + std::to_string(n);
        const QPoly& p = table.polys[static_cast<std::size_t>(n)];
        MultiPoly limit = MultiPoly::zero(kAppellVars);
        const MultiPoly x = MultiPoly::variable(kAppellVars, "x");
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            RationalFunction c = p.coeffs[i];
            if (table.kind == QFamilyKind::q_bernoulli) c = c / one_minus_q;
            const RationalFunction lim = limit_at_one(c, "q");  // PoleAtOne on normalization bugs
            limit += x.pow(static_cast<unsigned>(i)).scaled(lim.as_rational());
        }
        const MultiPoly classical = table.kind == QFamilyKind::q_bernoulli
                                        ? bernoulli_polynomial(static_cast<unsigned>(n))
                                        : euler_polynomial(static_cast<unsigned>(n));
        const MultiPoly residual = limit - classical;
        rep.is_zero = residual.is_zero();
        rep.residual = residual.str();
        out.push_back(std::move(rep));
    }
    return out;
}

VarList q_cyclic_vars(bool symbolic) {
    if (symbolic) return {"q", "rho", "sigma", "x", "y"};
    return {"q", "x", "y"};
}

RationalFunction q_bracket(const QFamilyTable& table, int n, const QSlot& s_slot,
                           const QSlot& t_slot, const RationalFunction& x_arg,
                           const RationalFunction& y_arg) {
    require_degrees(table, n);
    const VarList& vars = x_arg.vars();
    auto gauss = [&](const QSlot& slot, int k) {
        if (slot.is_symbolic) return gaussian_binomial_symbolic(slot.expr, k);
        return gaussian_binomial(slot.m, k).lifted(vars);
    };
    RationalFunction sum = RationalFunction::zero(vars);
    for (int k = 0; k <= n; ++k) {
        const RationalFunction fx = qpoly_at(table.polys[static_cast<std::size_t>(n - k)], x_arg);
        const RationalFunction fy = qpoly_at(table.polys[static_cast<std::size_t>(k)], y_arg);
        RationalFunction term = q_power(vars, static_cast<long>(k) * (k - 1) / 2) *
                                gauss(s_slot, k) * gauss(t_slot, n - k) * fx * fy;
        if (k % 2) term = -term;
        sum += term;
    }
    return sum;
}

RationalFunction q_cyclic_defect_value(const QFamilyTable& table, const QCyclicParams& params) {
    require_degrees(table, params.n);
    const VarList vars = q_cyclic_vars(params.symbolic);
    const RationalFunction x = RationalFunction::variable(vars, "x");
    const RationalFunction y = RationalFunction::variable(vars, "y");
    const RationalFunction z = RationalFunction::one(vars) - x - y;

    if (!params.symbolic) {
        if (params.r < 0 || params.s < 0 || params.t < 0 || params.r + params.s + params.t != params.n)
            throw ConfigError("q cyclic integer mode needs nonnegative r+s+t = n");
        auto qi = [&](int m) { return q_integer(m).lifted(vars); };
        return qi(params.r) * q_bracket(table, params.n, QSlot::integer(params.s),
                                        QSlot::integer(params.t), x, y) +
               qi(params.s) * q_bracket(table, params.n, QSlot::integer(params.t),
                                        QSlot::integer(params.r), y, z) +
               qi(params.t) * q_bracket(table, params.n, QSlot::integer(params.r),
                                        QSlot::integer(params.s), z, x);
    }

    const RationalFunction rho = RationalFunction::variable(vars, "rho");
    const RationalFunction sigma = RationalFunction::variable(vars, "sigma");
    const RationalFunction tau = q_power(vars, params.n) / (rho * sigma);  // always derived
    const RationalFunction one = RationalFunction::one(vars);
    const RationalFunction denom = one - q_power(vars, 1);
    auto q_int_sym = [&](const RationalFunction& p) { return (one - p) / denom; };
    return q_int_sym(rho) * q_bracket(table, params.n, QSlot::expression(sigma),
                                      QSlot::expression(tau), x, y) +
           q_int_sym(sigma) * q_bracket(table, params.n, QSlot::expression(tau),
                                        QSlot::expression(rho), y, z) +
           q_int_sym(tau) * q_bracket(table, params.n, QSlot::expression(rho),
                                      QSlot::expression(sigma), z, x);
}

DefectReport q_cyclic_defect(const QFamilyTable& table, const QCyclicParams& params) {
    DefectReport rep;
    rep.check = "q-cyclic-defect";
    std::ostringstream os;
    os << "kind=" << kind_name(table.kind) << " n=" << params.n;
    if (params.symbolic)
        os << " mode=symbolic";
    else
        os << " mode=integer triple=(" << params.r << "," << params.s << "," << params.t << ")";
    rep.params = os.str();
    const RationalFunction residual = q_cyclic_defect_value(table, params);
    rep.is_zero = residual.is_zero();
    rep.residual = residual.str();
    return rep;
}

RationalFunction q_binomial_cyclic_defect(int n, int k, const QCyclicParams& params) {
    if (k < 0 || k > n) throw ConfigError("q_binomial_cyclic_defect: need 0 <= k <= n");
    const VarList vars = q_cyclic_vars(params.symbolic);
    if (!params.symbolic) {
        if (params.r < 0 || params.s < 0 || params.t < 0 || params.r + params.s + params.t != n)
            throw ConfigError("q binomial integer mode needs nonnegative r+s+t = n");
        auto qi = [&](int m) { return q_integer(m).lifted(vars); };
        auto g = [&](int m, int j) { return gaussian_binomial(m, j).lifted(vars); };
        return qi(params.r) * g(params.s, k) * g(params.t, n - k) +
               qi(params.s) * g(params.t, k) * g(params.r, n - k) +
               qi(params.t) * g(params.r, k) * g(params.s, n - k);
    }
    const RationalFunction rho = RationalFunction::variable(vars, "rho");
    const RationalFunction sigma = RationalFunction::variable(vars, "sigma");
    const RationalFunction tau = q_power(vars, n) / (rho * sigma);
    const RationalFunction one = RationalFunction::one(vars);
    const RationalFunction denom = one - q_power(vars, 1);
    auto qi = [&](const RationalFunction& p) { return (one - p) / denom; };
    auto g = [&](const RationalFunction& u, int j) { return gaussian_binomial_symbolic(u, j); };
    return qi(rho) * g(sigma, k) * g(tau, n - k) + qi(sigma) * g(tau, k) * g(rho, n - k) +
           qi(tau) * g(rho, k) * g(sigma, n - k);
}

std::vector<DefectReport> q_cyclic_defect_sampled(const QFamilyTable& table, int n,
                                                  std::uint64_t seed, int count) {
    if (count < 1) throw ConfigError("q_cyclic_defect_sampled: count must be >= 1");
    require_degrees(table, n);
    const QCyclicParams params{n, true, 0, 0, 0};
    const RationalFunction defect = q_cyclic_defect_value(table, params);
    std::mt19937_64 rng(seed);
    auto draw = [&rng] {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
        return Rational(num, den);
    };
    std::vector<DefectReport> out;
    for (int i = 0; i < count; ++i) {
        Rational q = draw();
        while (q.is_zero() || q == Rational(1) || q == Rational(-1)) q = draw();
        Rational rho = draw(), sigma = draw(), x = draw(), y = draw();
        while (rho.is_zero()) rho = draw();
        while (sigma.is_zero()) sigma = draw();
        DefectReport rep;
        rep.check = "q-cyclic-defect-sample";
        std::ostringstream os;
        os << "kind=" << kind_name(table.kind) << " n=" << n << " mode=symbolic point=(q="
           << q.str() << ",rho=" << rho.str() << ",sigma=" << sigma.str() << ",x=" << x.str()
           << ",y=" << y.str() << ") seed=" << seed << " i=" << i;
        rep.params = os.str();
        try {
            const Rational value = defect.evaluate(
                {{"q", q}, {"rho", rho}, {"sigma", sigma}, {"x", x}, {"y", y}});
            rep.is_zero = value.is_zero();
            rep.residual = value.str();
        } catch (const ZeroDenominator&) {
            rep.is_zero = false;
            rep.residual = "sample point hit a pole; resample with another seed";
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace cyclaudit
