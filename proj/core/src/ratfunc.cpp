#include "cyclaudit/ratfunc.hpp"

#include <utility>

namespace cyclaudit {

RationalFunction RationalFunction::zero(VarList vars) {
    return {MultiPoly::zero(vars), MultiPoly::constant(vars, Rational(1))};
}

RationalFunction RationalFunction::one(VarList vars) {
    return constant(std::move(vars), Rational(1));
}

RationalFunction RationalFunction::constant(VarList vars, const Rational& c) {
    return {MultiPoly::constant(vars, c), MultiPoly::constant(vars, Rational(1))};
}

RationalFunction RationalFunction::variable(VarList vars, std::string_view name) {
    MultiPoly one = MultiPoly::constant(vars, Rational(1));
    return {MultiPoly::variable(std::move(vars), name), std::move(one)};
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.vars(), Rational(1));
    return {std::move(p), std::move(one)};
}

RationalFunction RationalFunction::from_quotient(MultiPoly num, MultiPoly den) {
    require_same_vars(num, den);
    return reduced(std::move(num), std::move(den));
}

RationalFunction RationalFunction::reduced(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) return zero(num.vars());
    if (!den.is_constant()) {
        MultiPoly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    const Rational lc = den.leading_coefficient();
    if (!lc.is_one()) {
        num = num.scaled(lc.inverse());
        den = den.scaled(lc.inverse());
    }
    return {std::move(num), std::move(den)};
}

const MultiPoly& RationalFunction::as_poly() const {
    if (!is_polynomial()) throw Error("rational function is not a polynomial: " + str());
    return num_;  // denominator is monic constant, hence exactly 1
}

Rational RationalFunction::as_rational() const {
    if (!is_constant()) throw Error("rational function is not constant: " + str());
    return num_.constant_value();  // denominator reduced to 1
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    require_same_vars(a.num_, b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    MultiPoly g = poly_gcd(a.den_, b.den_);
    MultiPoly db = g.is_constant() ? b.den_ : divide_exact(b.den_, g);
    MultiPoly da = g.is_constant() ? a.den_ : divide_exact(a.den_, g);
    return RationalFunction::reduced(a.num_ * db + b.num_ * da, a.den_ * db);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    require_same_vars(a.num_, b.num_);
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.vars());
    // cross-cancel so the final product is already coprime
    MultiPoly g1 = poly_gcd(a.num_, b.den_);
    MultiPoly g2 = poly_gcd(b.num_, a.den_);
    const MultiPoly an = g1.is_constant() ? a.num_ : divide_exact(a.num_, g1);
    const MultiPoly bd = g1.is_constant() ? b.den_ : divide_exact(b.den_, g1);
    const MultiPoly bn = g2.is_constant() ? b.num_ : divide_exact(b.num_, g2);
    const MultiPoly ad = g2.is_constant() ? a.den_ : divide_exact(a.den_, g2);
    MultiPoly num = an * bn;
    MultiPoly den = ad * bd;
    const Rational lc = den.leading_coefficient();
    if (!lc.is_one()) {
        num = num.scaled(lc.inverse());
        den = den.scaled(lc.inverse());
    }
    return {std::move(num), std::move(den)};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
    return reduced(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction result = one(vars());
    RationalFunction base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

RationalFunction RationalFunction::substitute(const std::map<std::string, MultiPoly>& bindings,
                                              const VarList& target) const {
    return reduced(num_.substitute(bindings, target), den_.substitute(bindings, target));
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
    const Rational d = den_.evaluate(point);
    if (d.is_zero()) throw ZeroDenominator("rational function denominator vanishes at point");
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::lifted(const VarList& superset) const {
    return {num_.lifted(superset), den_.lifted(superset)};
}

RationalFunction RationalFunction::without_vars(const std::vector<std::string>& drop) const {
    return {num_.without_vars(drop), den_.without_vars(drop)};
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction ratfunc_reduce(const RationalFunction& f) {
    return RationalFunction::from_quotient(f.numerator(), f.denominator());
}

RationalFunction limit_at_one(const RationalFunction& f, std::string_view var) {
    const RationalFunction g = ratfunc_reduce(f);
    const MultiPoly den1 = g.denominator().substitute_value(var, Rational(1));
    if (den1.is_zero())
        throw PoleAtOne("pole at " + std::string(var) + " = 1 in " + g.str());
    const MultiPoly num1 = g.numerator().substitute_value(var, Rational(1));
    return RationalFunction::from_quotient(num1, den1);
}

}  // namespace cyclaudit
