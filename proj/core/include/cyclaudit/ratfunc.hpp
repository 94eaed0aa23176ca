#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cyclaudit/multipoly.hpp"

namespace cyclaudit {

/// Quotient of multivariate polynomials kept in canonical form: numerator and
/// denominator coprime, denominator monic in graded-lex order, zero is 0/1.
/// Equality of values is therefore structural equality.
class RationalFunction {
public:
    RationalFunction() = default;  // 0/1 over the empty variable list

    static RationalFunction zero(VarList vars);
    static RationalFunction one(VarList vars);
    static RationalFunction constant(VarList vars, const Rational& c);
    static RationalFunction variable(VarList vars, std::string_view name);
    static RationalFunction from_poly(MultiPoly p);
    static RationalFunction from_quotient(MultiPoly num, MultiPoly den);  // ZeroDenominator

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    const VarList& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    const MultiPoly& as_poly() const;  // throws Error when denominator != 1
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;  // ZeroDenominator on zero
    RationalFunction pow(long e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction substitute(const std::map<std::string, MultiPoly>& bindings,
                                const VarList& target) const;
    Rational evaluate(const std::map<std::string, Rational>& point) const;  // ZeroDenominator

    RationalFunction lifted(const VarList& superset) const;
    RationalFunction without_vars(const std::vector<std::string>& drop) const;

    std::string str() const;  // "num" or "(num)/(den)"

private:
    RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    static RationalFunction reduced(MultiPoly num, MultiPoly den);

    MultiPoly num_;
    MultiPoly den_ = MultiPoly::constant({}, Rational(1));
};

/// Canonicalization entry point; idempotent. Kept as a named operation so the
/// canonical-form contract is directly testable.
RationalFunction ratfunc_reduce(const RationalFunction& f);

/// Evaluate at var = 1 after full reduction. Throws PoleAtOne when the reduced
/// denominator vanishes there (a genuine pole; removable singularities have
/// already cancelled). The variable stays in the list with degree 0.
RationalFunction limit_at_one(const RationalFunction& f, std::string_view var);

}  // namespace cyclaudit
