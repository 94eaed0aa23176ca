#pragma once

#include <cstdint>
#include <vector>

#include "cyclaudit/appell.hpp"

namespace cyclaudit {

/// Argument slot of a bracket: a rational value or a symbolic variable.
struct BracketArg {
    static BracketArg rational(Rational v) { return {false, std::move(v), {}}; }
    static BracketArg symbol(std::string name) { return {true, Rational(0), std::move(name)}; }

    bool is_symbol = false;
    Rational value;
    std::string name;
};

/// Parameters of the bracket [s, t; x, y]_n. n is bounded by max_n (the
/// configured ceiling; default 16).
struct BracketParams {
    int n = 0;
    BracketArg s = BracketArg::symbol("s");
    BracketArg t = BracketArg::symbol("t");
    BracketArg x = BracketArg::symbol("x");
    BracketArg y = BracketArg::symbol("y");
    int max_n = 16;
};

inline const VarList kCyclicVars{"r", "s", "x", "y"};

/// The alternating double sum with generalized (falling-factorial) binomials:
///   sum_k (-1)^k C(s,k) C(t,n-k) F_{n-k}(x) F_k(y)
/// over the ring spanned by whichever arguments are symbolic.
MultiPoly bracket(const AppellPolynomialTable& table, const BracketParams& params);

/// Same sum with every slot an arbitrary polynomial expression over `ring`.
MultiPoly bracket_expr(const AppellPolynomialTable& table, int n, const MultiPoly& s_arg,
                       const MultiPoly& t_arg, const MultiPoly& x_arg, const MultiPoly& y_arg);

/// Pure rational-arithmetic evaluation of the bracket from the definition
/// (no symbolic expansion); doubles as an independent oracle for the above.
Rational bracket_eval(const AppellPolynomialTable& table, int n, const Rational& s,
                      const Rational& t, const Rational& x, const Rational& y);

/// Exact cyclic sum r[s,t;x,y] + s[t,r;y,z] + t[r,s;z,x] with t = n-r-s and
/// z = 1-x-y eliminated before canonicalization; a polynomial in r, s, x, y
/// that is zero iff the identity holds identically under the constraints.
MultiPoly cyclic_defect(const AppellPolynomialTable& table, int n);

/// Cyclic sum evaluated at one rational point, from the definition.
Rational cyclic_defect_eval(const AppellPolynomialTable& table, int n, const Rational& r,
                            const Rational& s, const Rational& x, const Rational& y);

/// Deterministic spot-checks at `count` seeded random rational points.
std::vector<DefectReport> cyclic_defect_sampled(const AppellPolynomialTable& table, int n,
                                                std::uint64_t seed, int count);

/// The proof's per-k expression r C(s,k) C(t,n-k) + s C(t,k) C(r,n-k)
/// + t C(r,k) C(s,n-k) with t = n-r-s, reported as computed (not assumed zero).
MultiPoly binomial_cyclic_defect(int n, int k);

}  // namespace cyclaudit
