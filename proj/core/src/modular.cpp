#include "cyclaudit/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclaudit/appell.hpp"
#include "cyclaudit/parser.hpp"

namespace cyclaudit {

namespace {

template <class C>
C coef_from_int(long long v);

template <>
Rational coef_from_int<Rational>(long long v) { return Rational(v); }

template <>
std::complex<double> coef_from_int<std::complex<double>>(long long v) {
    return {static_cast<double>(v), 0.0};
}

// coefficients of (uX + vY)^n in X^p Y^{n-p}, p = 0..n
template <class C>
std::vector<C> binomial_pow(long long u, long long v, int n) {
    std::vector<C> out(static_cast<std::size_t>(n) + 1);
    const C cu = coef_from_int<C>(u), cv = coef_from_int<C>(v);
    std::vector<C> upow(static_cast<std::size_t>(n) + 1, C(1));
    std::vector<C> vpow(static_cast<std::size_t>(n) + 1, C(1));
    for (int i = 1; i <= n; ++i) {
        upow[static_cast<std::size_t>(i)] = upow[static_cast<std::size_t>(i - 1)] * cu;
        vpow[static_cast<std::size_t>(i)] = vpow[static_cast<std::size_t>(i - 1)] * cv;
    }
    for (int p = 0; p <= n; ++p) {
        const Rational binom(binomial_integer(static_cast<unsigned>(n), static_cast<unsigned>(p)));
        C b;
        if constexpr (std::is_same_v<C, Rational>)
            b = binom;
        else
            b = C(binom.to_double(), 0.0);
        out[static_cast<std::size_t>(p)] =
            b * upow[static_cast<std::size_t>(p)] * vpow[static_cast<std::size_t>(n - p)];
    }
    return out;
}

}  // namespace

template <class C>
WPoly<C> slash(const WPoly<C>& p, const GL2Mat& g) {
    if (g.det() != 1 && g.det() != -1)
        throw NonUnimodular("slash: matrix determinant must be +1 or -1");
    const int w = p.weight;
    WPoly<C> out = WPoly<C>::zero(w);
    for (int i = 0; i <= w; ++i) {
        const C& ci = p.coef[static_cast<std::size_t>(i)];
        if (ci == C(0)) continue;
        // (aX+bY)^i (cX+dY)^{w-i}, collected in X^j Y^{w-j}
        const std::vector<C> top = binomial_pow<C>(g.a, g.b, i);
        const std::vector<C> bot = binomial_pow<C>(g.c, g.d, w - i);
        for (int pdeg = 0; pdeg <= i; ++pdeg)
            for (int rdeg = 0; rdeg <= w - i; ++rdeg)
                out.coef[static_cast<std::size_t>(pdeg + rdeg)] =
                    out.coef[static_cast<std::size_t>(pdeg + rdeg)] +
                    ci * top[static_cast<std::size_t>(pdeg)] * bot[static_cast<std::size_t>(rdeg)];
    }
    return out;
}

template WPoly<Rational> slash<Rational>(const WPoly<Rational>&, const GL2Mat&);
template WPoly<std::complex<double>> slash<std::complex<double>>(const WPoly<std::complex<double>>&,
                                                                 const GL2Mat&);

namespace {

void require_weight(int p_weight, int k, const char* who) {
    if (k - 2 != p_weight)
        throw WeightMismatch(std::string(who) + ": polynomial weight " + std::to_string(p_weight) +
                             " does not match k-2 = " + std::to_string(k - 2));
}

}  // namespace

PolyQ three_term_paper(const PolyQ& p, int k) {
    require_weight(p.weight, k, "three_term_paper");
    // z/(z-1) with cocycle (z-1)^{k-2}, and 1/(1-z) with cocycle (1-z)^{k-2}
    const GL2Mat g2{1, 0, 1, -1};
    const GL2Mat g3{0, 1, -1, 1};
    return p + slash(p, g2) + slash(p, g3);
}

PolyQ three_term_standard(const PolyQ& p, int k) {
    require_weight(p.weight, k, "three_term_standard");
    return p + slash(p, kMatU) + slash(p, kMatU * kMatU);
}

PolyC three_term_standard_c(const PolyC& p, int k) {
    require_weight(p.weight, k, "three_term_standard");
    return p + slash(p, kMatU) + slash(p, kMatU * kMatU);
}

PolyQ s_relation(const PolyQ& p) {
    if (p.weight % 2 != 0) throw WeightMismatch("s_relation: weight must be even");
    return p + slash(p, kMatS);
}

PolyC s_relation_c(const PolyC& p) {
    if (p.weight % 2 != 0) throw WeightMismatch("s_relation: weight must be even");
    return p + slash(p, kMatS);
}

namespace {

// columns = monomials z^j, rows = coefficients of the mapped basis polynomial
RatMatrix relation_rows(int w, const std::vector<GL2Mat>& mats) {
    const std::size_t n = static_cast<std::size_t>(w) + 1;
    RatMatrix rows(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        PolyQ e = PolyQ::zero(w);
        e.coef[j] = Rational(1);
        PolyQ image = e;  // identity part
        for (const GL2Mat& g : mats) image = image + slash(e, g);
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = image.coef[i];
    }
    return rows;
}

void check_even_weight(int k, int max_weight) {
    if (k % 2 != 0 || k < 4 || k > max_weight)
        throw UnsupportedWeight("weight must be even with 4 <= k <= " +
                                std::to_string(max_weight) + ", got " + std::to_string(k));
}

PeriodSpace space_from_rows(int k, RatMatrix stacked) {
    const int w = k - 2;
    PeriodSpace space;
    space.weight = k;
    for (const auto& v : nullspace(stacked, static_cast<std::size_t>(w) + 1)) {
        PolyQ p = PolyQ::zero(w);
        p.coef = v;
        // contract: every basis vector satisfies both relations exactly
        if (!s_relation(p).is_zero() || !three_term_standard(p, k).is_zero())
            throw Error("period_space: basis vector fails a defining relation");
        space.basis.push_back(std::move(p));
    }
    return space;
}

}  // namespace

PeriodSpace period_space(int k, int max_weight) {
    check_even_weight(k, max_weight);
    const int w = k - 2;
    RatMatrix rows = relation_rows(w, {kMatS});
    const RatMatrix u_rows = relation_rows(w, {kMatU, kMatU * kMatU});
    rows.insert(rows.end(), u_rows.begin(), u_rows.end());
    return space_from_rows(k, std::move(rows));
}

PeriodSpace period_space_even(int k, int max_weight) {
    check_even_weight(k, max_weight);
    const int w = k - 2;
    RatMatrix rows = relation_rows(w, {kMatS});
    const RatMatrix u_rows = relation_rows(w, {kMatU, kMatU * kMatU});
    rows.insert(rows.end(), u_rows.begin(), u_rows.end());
    for (int j = 1; j <= w; j += 2) {  // kill odd coefficients
        std::vector<Rational> sel(static_cast<std::size_t>(w) + 1, Rational(0));
        sel[static_cast<std::size_t>(j)] = Rational(1);
        rows.push_back(std::move(sel));
    }
    return space_from_rows(k, std::move(rows));
}

int cuspform_dim(int k) {
    if (k < 4 || k % 2 != 0) throw UnsupportedWeight("cuspform_dim: k must be even and >= 4");
    const int q = k / 12;
    return (k % 12 == 2) ? q - 1 : q;
}

QExpansion eisenstein_qexp(int k, int N) {
    if (k < 4 || k % 2 != 0) throw UnsupportedWeight("eisenstein_qexp: k must be even and >= 4");
    if (N < 1) throw ConfigError("eisenstein_qexp: N must be >= 1");
    const Rational factor = Rational(-2 * static_cast<std::int64_t>(k)) /
                            bernoulli_number(static_cast<unsigned>(k));
    QExpansion f;
    f.weight = k;
    f.a.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    f.a[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        Integer sigma = 0;  // sigma_{k-1}(n)
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            Integer p = 1;
            for (int e = 0; e < k - 1; ++e) p *= d;
            sigma += p;
        }
        f.a[static_cast<std::size_t>(n)] = factor * Rational(sigma);
    }
    return f;
}

QExpansion delta_qexp(int N) {
    if (N < 1) throw ConfigError("delta_qexp: N must be >= 1");
    // eta^24 without the leading q: prod_{n<=N} (1-q^n)^24 truncated at q^N
    std::vector<Integer> p(static_cast<std::size_t>(N) + 1, Integer(0));
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int i = N; i >= n; --i)
                p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - n)];
        }
    }
    QExpansion f;
    f.weight = 12;
    f.a.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int i = 1; i <= N; ++i) f.a[static_cast<std::size_t>(i)] = Rational(p[static_cast<std::size_t>(i - 1)]);
    return f;
}

std::complex<double> qexp_eval(const QExpansion& f, std::complex<double> tau) {
    const std::complex<double> q = std::exp(std::complex<double>(0, 2 * std::numbers::pi) * tau);
    std::complex<double> sum = 0, qn = 1;
    for (std::size_t n = 0; n < f.a.size(); ++n) {
        if (n > 0) qn *= q;
        sum += f.a[n].to_double() * qn;
    }
    return sum;
}

double modularity_check_numeric(const QExpansion& f, std::span<const std::complex<double>> samples,
                                double target) {
    const int k = f.weight;
    const std::size_t N = f.a.size() - 1;
    double gmax = 0.0;
    for (const std::complex<double> tau : samples) {
        for (const std::complex<double> t : {tau, -1.0 / tau}) {
            const double y = t.imag();
            if (y < 0.5) throw ConfigError("modularity check: need Im tau >= 0.5 on both sides");
            // tail bound: |a_n| <= c n^k with c from the computed coefficients,
            // summed against the geometric decay e^{-2 pi n y}
            double c = 1.0;
            for (std::size_t n = 1; n <= N; ++n)
                c = std::max(c, std::abs(f.a[n].to_double()) /
                                     std::pow(static_cast<double>(n), k));
            const double xq = std::exp(-2 * std::numbers::pi * y);
            const double ratio = xq * std::pow((static_cast<double>(N) + 2) /
                                                   (static_cast<double>(N) + 1),
                                               k);
            if (ratio >= 1.0)
                throw InsufficientTruncation("modularity check: tail does not contract");
            const double tail = c * std::pow(static_cast<double>(N) + 1, k) *
                                std::pow(xq, static_cast<double>(N) + 1) / (1.0 - ratio);
            if (tail > target)
                throw InsufficientTruncation("modularity check: tail bound " +
                                             format_double(tail) + " exceeds target " +
                                             format_double(target));
        }
        const std::complex<double> lhs = qexp_eval(f, -1.0 / tau);
        const std::complex<double> rhs = std::pow(tau, k) * qexp_eval(f, tau);
        gmax = std::max(gmax, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return gmax;
}

namespace {

// Gamma(j, x)/x^j = (j-1)! e^{-x} sum_{i<j} x^i/i! / x^j for integer j >= 1
double upper_gamma_over_pow(int j, double x) {
    double sum = 0.0, term = 1.0;  // term = x^i/i!
    for (int i = 0; i < j; ++i) {
        if (i > 0) term *= x / i;
        sum += term;
    }
    double fact = 1.0;
    for (int i = 2; i < j; ++i) fact *= i;
    return fact * std::exp(-x) * sum / std::pow(x, j);
}

}  // namespace

double completed_L(const QExpansion& f, int k, int m, int N) {
    if (!f.a.empty() && !f.a[0].is_zero())
        throw NotCuspidal("completed_L: a_0 != 0, the period integral diverges");
    if (m < 1 || m > k - 1) throw ConfigError("completed_L: need 1 <= m <= k-1");
    if (N < 10) throw ConfigError("completed_L: need N >= 10");
    if (k % 2 != 0) throw UnsupportedWeight("completed_L: weight must be even");
    if (static_cast<std::size_t>(N) >= f.a.size())
        throw InsufficientTruncation("completed_L: expansion shorter than requested N");
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    double sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        const double an = f.a[static_cast<std::size_t>(n)].to_double();
        if (an == 0.0) continue;
        const double x = 2 * std::numbers::pi * n;
        sum += an * (upper_gamma_over_pow(m, x) + sign * upper_gamma_over_pow(k - m, x));
    }
    return sum;
}

PolyC period_polynomial_numeric(const QExpansion& f, int k, int N) {
    const int w = k - 2;
    std::vector<double> lambda(static_cast<std::size_t>(w) + 1);
    for (int m = 0; m <= w; ++m)
        lambda[static_cast<std::size_t>(m)] = completed_L(f, k, m + 1, N);
    PolyC r = PolyC::zero(w);
    const std::complex<double> iu(0, 1);
    for (int m = 0; m <= w; ++m) {
        const int j = w - m;  // z-degree contributed by this term
        const std::complex<double> phase =
            iu * std::pow(iu, m) * ((j % 2 == 0) ? 1.0 : -1.0);
        const double binom =
            Rational(binomial_integer(static_cast<unsigned>(w), static_cast<unsigned>(m)))
                .to_double();
        r.coef[static_cast<std::size_t>(j)] += phase * binom * lambda[static_cast<std::size_t>(m)];
    }
    return r;
}

std::optional<Rational> rational_reconstruct(double x, long long max_den, double tol) {
    // continued-fraction convergents h/k of x
    long long h_prev = 1, k_prev = 0;
    long long h = static_cast<long long>(std::floor(x)), k = 1;
    double v = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            if (k >= max_den) return std::nullopt;
            return Rational(h, k);
        }
        if (v < 1e-18) break;
        v = 1.0 / v;
        const double ad = std::floor(v);
        if (ad > 9.0e17) break;
        const long long a = static_cast<long long>(ad);
        v -= ad;
        const long long hn = a * h + h_prev, kn = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = hn;
        k = kn;
        if (k > max_den) break;
    }
    return std::nullopt;
}

double max_norm(const PolyC& p) {
    double m = 0.0;
    for (const auto& c : p.coef) m = std::max(m, std::abs(c));
    return m;
}

std::string polyq_str(const PolyQ& p) {
    const VarList zv{"z"};
    MultiPoly m = MultiPoly::zero(zv);
    const MultiPoly z = MultiPoly::variable(zv, "z");
    for (std::size_t j = 0; j < p.coef.size(); ++j)
        if (!p.coef[j].is_zero()) m += z.pow(static_cast<unsigned>(j)).scaled(p.coef[j]);
    return m.str();
}

std::string polyc_str(const PolyC& p) {
    std::string out = "[";
    for (std::size_t j = 0; j < p.coef.size(); ++j) {
        if (j) out += ", ";
        out += format_complex(p.coef[j]);
    }
    return out + "]";
}

PolyQ polyq_from_text(std::string_view text, int weight) {
    const MultiPoly m = parse_poly(text, {"z"});
    PolyQ p = PolyQ::zero(weight);
    for (const auto& [e, c] : m.terms()) {
        if (e[0] > static_cast<unsigned>(weight))
            throw WeightMismatch("polynomial degree " + std::to_string(e[0]) +
                                 " exceeds weight " + std::to_string(weight));
        p.coef[e[0]] = c;
    }
    return p;
}

}  // namespace cyclaudit
