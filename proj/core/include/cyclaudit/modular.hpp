#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "cyclaudit/linalg.hpp"
#include "cyclaudit/report.hpp"

namespace cyclaudit {

/// Integer 2x2 matrix acting on weight-w polynomial spaces; uses require
/// det = +-1.
struct GL2Mat {
    long long a = 1, b = 0, c = 0, d = 1;
    long long det() const { return a * d - b * c; }
    friend GL2Mat operator*(const GL2Mat& m, const GL2Mat& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

// fixed conventions: S: z -> -1/z, T: z -> z+1, U = ST: z -> 1/(1-z), U^3 = -I
inline constexpr GL2Mat kMatS{0, -1, 1, 0};
inline constexpr GL2Mat kMatT{1, 1, 0, 1};
inline constexpr GL2Mat kMatU{0, 1, -1, 1};

/// Degree <= weight polynomial in z, coefficient of z^j at index j; the
/// coefficient vector always has length weight+1 (zero-padded).
template <class C>
struct WPoly {
    int weight = 0;
    std::vector<C> coef;

    static WPoly zero(int w) { return {w, std::vector<C>(static_cast<std::size_t>(w) + 1, C(0))}; }
    static WPoly from_coeffs(int w, std::vector<C> cs) {
        WPoly p = zero(w);
        if (cs.size() > p.coef.size()) throw WeightMismatch("degree exceeds weight");
        for (std::size_t i = 0; i < cs.size(); ++i) p.coef[i] = cs[i];
        return p;
    }
    friend WPoly operator+(const WPoly& a, const WPoly& b) {
        if (a.weight != b.weight) throw WeightMismatch("adding polynomials of different weights");
        WPoly r = a;
        for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] = r.coef[i] + b.coef[i];
        return r;
    }
    friend WPoly operator-(const WPoly& a, const WPoly& b) {
        if (a.weight != b.weight) throw WeightMismatch("subtracting polynomials of different weights");
        WPoly r = a;
        for (std::size_t i = 0; i < r.coef.size(); ++i) r.coef[i] = r.coef[i] - b.coef[i];
        return r;
    }
    bool is_zero() const {
        for (const C& c : coef)
            if (!(c == C(0))) return false;
        return true;
    }
};

using PolyQ = WPoly<Rational>;
using PolyC = WPoly<std::complex<double>>;

/// Weight-w right action (P|g)(z) = (cz+d)^w P((az+b)/(cz+d)), implemented by
/// homogenization: P~(X,Y) = Y^w P(X/Y), result = P~(aX+bY, cX+dY).
template <class C>
WPoly<C> slash(const WPoly<C>& p, const GL2Mat& g);

/// Paper-literal three-term map of Theorem-3.1 shape:
///   P(z) + (z-1)^{k-2} P(z/(z-1)) + (1-z)^{k-2} P(1/(1-z)).
PolyQ three_term_paper(const PolyQ& p, int k);

/// Standard realization P|(1 + U + U^2) with U: z -> 1/(1-z).
PolyQ three_term_standard(const PolyQ& p, int k);
PolyC three_term_standard_c(const PolyC& p, int k);

/// Companion relation P + P|S.
PolyQ s_relation(const PolyQ& p);
PolyC s_relation_c(const PolyC& p);

/// Exact joint nullspace {P : P|(1+S) = 0 and P|(1+U+U^2) = 0} on the
/// degree <= k-2 coefficient space; every basis vector satisfies both
/// relations exactly. k even, 4 <= k <= max_weight.
struct PeriodSpace {
    int weight = 0;
    std::vector<PolyQ> basis;
};
PeriodSpace period_space(int k, int max_weight = 40);

/// Even-coefficient subspace of the period space (basis canonical).
PeriodSpace period_space_even(int k, int max_weight = 40);

/// dim S_k(SL2(Z)) by the classical dimension formula; an independent
/// cross-check for period-space dimensions.
int cuspform_dim(int k);

/// q-expansion a_0..a_N of a level-1 form of the given weight.
struct QExpansion {
    int weight = 0;
    std::vector<Rational> a;
};

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, B_k exact.
QExpansion eisenstein_qexp(int k, int N);

/// Delta = q prod (1-q^n)^24; integer coefficients tau(n) through q^N.
QExpansion delta_qexp(int N);

/// f(tau) = sum a_n e^{2 pi i n tau} truncated at the expansion length.
std::complex<double> qexp_eval(const QExpansion& f, std::complex<double> tau);

/// Max over samples of |f(-1/tau) - tau^k f(tau)| / |tau^k f(tau)|. Requires
/// Im tau >= 0.5 and a truncation whose tail bound beats `target`
/// (InsufficientTruncation otherwise).
double modularity_check_numeric(const QExpansion& f, std::span<const std::complex<double>> samples,
                                double target);

/// Completed L-value Lambda(m) = int_0^inf f(it) t^{m-1} dt for a cusp form,
/// by the incomplete-gamma series with N terms:
///   sum_n a_n [Gamma(m,2 pi n)/(2 pi n)^m + (-1)^{k/2} Gamma(k-m,2 pi n)/(2 pi n)^{k-m}].
double completed_L(const QExpansion& f, int k, int m, int N);

/// r_f(z) = i sum_m C(w,m) i^m (-z)^{w-m} Lambda(m+1), complex coefficients.
PolyC period_polynomial_numeric(const QExpansion& f, int k, int N);

/// Continued-fraction rational reconstruction: best p/q with q < max_den and
/// |x - p/q| <= tol, if any.
std::optional<Rational> rational_reconstruct(double x, long long max_den, double tol);

double max_norm(const PolyC& p);

// canonical text rendering / parsing bridges for the z-polynomials
std::string polyq_str(const PolyQ& p);
std::string polyc_str(const PolyC& p);
PolyQ polyq_from_text(std::string_view text, int weight);  // WeightMismatch on overflow

}  // namespace cyclaudit
