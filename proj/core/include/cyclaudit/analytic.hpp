#pragma once

#include "cyclaudit/report.hpp"

namespace cyclaudit {

/// Tuning for the Euler-Maclaurin evaluation of the Hurwitz zeta: shift N
/// (number of directly summed terms; -1 selects automatically from s) and
/// correction depth J.
struct HurwitzTuning {
    int shift_N = -1;
    int depth_J = 15;
    bool force_euler_maclaurin = false;  // skip the closed form at integer s <= 0
};

/// Hurwitz zeta zeta(s, x) for real s != 1, x > 0. Nonpositive integer s uses
/// the exact closed form zeta(1-n, x) = -B_n(x)/n; otherwise Euler-Maclaurin:
///   sum_{n<N} (n+x)^{-s} + (N+x)^{1-s}/(s-1) + (N+x)^{-s}/2
///   + sum_{j=1..J} B_{2j}/(2j)! (s)_{2j-1} (N+x)^{-s-2j+1}
/// with exact Bernoulli numbers. error_estimate bounds the truncation error
/// (first omitted correction, doubled), plus an eps-scale floor.
EvalResult hurwitz_zeta(double s, double x, HurwitzTuning tuning = {});

/// B(s; x) = -s zeta(1-s, x) on (0,1]; B(0; x) = 1 (removable singularity);
/// the band 0 < |s| < 1e-3 is rejected (NearPole).
EvalResult analytic_bernoulli_B(double s, double x);

/// Li_s(e^{2 pi i x}) by direct summation with the tail bound M^{1-s}/(s-1);
/// s >= 1.25, 0 < x < 1. Throws AccuracyUnreachable (carrying the achievable
/// bound) when the required M exceeds max_terms.
EvalResult polylog_unit_circle(double s, double x, double target = 1e-6,
                               long long max_terms = 20'000'000);

/// A(s; x) = -(Gamma(s+1)/(2 pi)^s) 2 Im(e^{-i pi s/2} Li_s(e^{2 pi i x})).
/// `target` is the rigorous absolute bound requested from the polylog; the
/// oscillating sum typically lands orders of magnitude inside it.
EvalResult analytic_bernoulli_A(double s, double x, double target = 1e-8);

/// Gamma(s+1) for s > -1 to >= 12 significant digits (shifted Stirling).
double gamma_plus_one(double s);

/// Central-difference ladder probe: |(f(s;x+h)-f(s;x-h))/(2h) - s f(s-1;x)|
/// for f in {A, B}.
DefectReport appell_ladder_numeric(char fn, double s, double x, double h = 1e-5);

/// Hurwitz-formula cross-check for s >= 2: the relative discrepancy between
/// -s zeta(1-s,x) and -(Gamma(s+1)/(2 pi)^s) 2 Re(e^{-i pi s/2} Li_s(e^{2 pi i x})).
DefectReport hurwitz_formula_check(double s, double x);

/// Measured antisymmetry defect A(s;1-x) + A(s;x); zero within tolerance only
/// where the identity actually holds (even integer s).
DefectReport analytic_antisymmetry_probe(double s, double x, double tol = 1e-10);

/// Exploratory cyclic probe: the Theorem-2.1 cyclic sum with F_m replaced by
/// B(m+delta; .), evaluated numerically at reals (r, s, x, y) with t = n-r-s,
/// z = 1-x-y. At delta = 0 the exact engine forces zero (within 1e-8); other
/// deltas are recorded with no asserted expectation.
DefectReport analytic_cyclic_probe(int n, double delta, double x, double y, double r, double s);

}  // namespace cyclaudit
