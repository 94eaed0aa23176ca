#pragma once

#include <cstdint>
#include <vector>

#include "cyclaudit/report.hpp"
#include "cyclaudit/series.hpp"

namespace cyclaudit {

enum class QFamilyKind { q_bernoulli, q_euler };

/// Polynomial in x with rational-function-in-q coefficients, coefficient i
/// belonging to x^i; every coefficient canonical over the variable list {q}.
struct QPoly {
    std::vector<RationalFunction> coeffs;
};

struct QFamilyTable {
    QFamilyKind kind = QFamilyKind::q_bernoulli;
    int max_degree = 0;
    std::vector<QPoly> polys;
};

inline const VarList kQVar{"q"};

/// (q;q)_n = prod_{i=1..n} (1 - q^i) as a polynomial over {q}.
RationalFunction q_pochhammer(int n);

/// [m]_q = (1 - q^m)/(1 - q), the q-integer polynomial.
RationalFunction q_integer(int m);

/// E_q(w) = sum w^n/(q;q)_n to the given order; coefficients over {q}.
/// The paper leaves E_q undefined; this is the standard "small" q-exponential
/// and is the convention used throughout the engine.
TruncatedSeries<RationalFunction> q_exponential(std::size_t order);

/// Gaussian binomial for integer upper index: prod (1-q^{m-k+i})/(1-q^i),
/// i = 1..k. Reduces to a polynomial in q for m >= 0 and vanishes for
/// 0 <= m < k.
RationalFunction gaussian_binomial(int m, int k);

/// Symbolic upper index: q^m replaced by the expression `upper`, giving
/// prod (1 - upper * q^{i-k})/(1 - q^i). `upper` must live over a variable
/// list containing q.
RationalFunction gaussian_binomial_symbolic(const RationalFunction& upper, int k);

/// q-Bernoulli / q-Euler polynomials from the generating functions
/// w/(E_q(w)-1) E_q(wx) and 2/(E_q(w)+1) E_q(wx): entry n is the coefficient
/// of w^n multiplied by (q;q)_n, an element of Q(q)[x].
QFamilyTable q_family_polynomials(QFamilyKind kind, int n_max);

/// q -> 1 degeneration, exact: B_n^{(q)}(x)/(1-q) -> B_n(x) and
/// E_n^{(q)}(x) -> E_n(x). One report per degree.
std::vector<DefectReport> q_to_one_check(const QFamilyTable& table);

/// Cyclic-check parameters. Integer mode fixes a nonnegative triple with
/// r+s+t = n. Symbolic mode introduces indeterminates rho = q^r, sigma = q^s
/// with tau = q^n/(rho sigma) always derived. x and y stay symbolic with
/// z = 1-x-y eliminated.
struct QCyclicParams {
    int n = 0;
    bool symbolic = true;
    int r = 0, s = 0, t = 0;
};

/// One bracket slot: an integer upper index or a symbolic q-power expression.
struct QSlot {
    static QSlot integer(int m) { return {false, m, {}}; }
    static QSlot expression(RationalFunction e) { return {true, 0, std::move(e)}; }
    bool is_symbolic = false;
    int m = 0;
    RationalFunction expr;
};

/// Variable list used by q-cyclic computations for the given mode.
VarList q_cyclic_vars(bool symbolic);

/// [s, t; x, y]_n^{(q)} = sum_k (-1)^k q^{C(k,2)} gauss(s,k) gauss(t,n-k)
/// F_{n-k}(x_arg) F_k(y_arg), exact over Q(q[,rho,sigma])[x,y].
RationalFunction q_bracket(const QFamilyTable& table, int n, const QSlot& s_slot,
                           const QSlot& t_slot, const RationalFunction& x_arg,
                           const RationalFunction& y_arg);

/// The cyclic sum [r]_q [s,t;x,y] + [s]_q [t,r;y,z] + [t]_q [r,s;z,x]; the
/// paper's claim of vanishing is the expectation, the computation the verdict.
RationalFunction q_cyclic_defect_value(const QFamilyTable& table, const QCyclicParams& params);
DefectReport q_cyclic_defect(const QFamilyTable& table, const QCyclicParams& params);

/// The proof's per-k expression [r]_q gauss(s,k) gauss(t,n-k) + cyclic,
/// computed in the chosen mode.
RationalFunction q_binomial_cyclic_defect(int n, int k, const QCyclicParams& params);

/// Schwartz-Zippel style spot checks of the symbolic defect at seeded random
/// rational points (q, rho, sigma, x, y) with q outside {0, +1, -1}.
std::vector<DefectReport> q_cyclic_defect_sampled(const QFamilyTable& table, int n,
                                                  std::uint64_t seed, int count);

}  // namespace cyclaudit
