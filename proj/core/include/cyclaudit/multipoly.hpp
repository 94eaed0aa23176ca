#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclaudit/rational.hpp"

namespace cyclaudit {

/// Ordered list of variable names; the order fixes the monomial order.
using VarList = std::vector<std::string>;
/// Exponent vector parallel to a VarList.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest term first: higher total degree wins,
/// ties broken lexicographically on the exponent vector.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// explicitly declared, ordered variable list. Canonical form: no zero
/// coefficients, terms ordered graded-lex descending. Arithmetic between
/// polynomials with different variable lists throws VariableMismatch;
/// embeddings are explicit via lifted().
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

    MultiPoly() = default;  // zero polynomial over the empty variable list

    static MultiPoly zero(VarList vars);
    static MultiPoly constant(VarList vars, Rational c);
    static MultiPoly variable(VarList vars, std::string_view name);  // UnknownVariable
    static MultiPoly from_terms(VarList vars, TermMap terms);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // zero for the zero polynomial; requires is_constant()

    unsigned total_degree() const;                   // 0 for the zero polynomial
    unsigned degree_in(std::string_view var) const;  // UnknownVariable
    bool uses_var(std::string_view var) const { return degree_in(var) > 0; }

    const Rational& leading_coefficient() const;  // requires nonzero
    const Exponents& leading_exponents() const;   // requires nonzero

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(std::string_view var) const;

    /// Total evaluation; every variable that occurs must be bound.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Ring homomorphism into Q[target]: bound variables map to the given
    /// polynomials (which must live over `target`), unbound ones must exist
    /// in `target` by name.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings,
                         const VarList& target) const;

    /// Substitute a single variable by a rational, keeping the variable list.
    MultiPoly substitute_value(std::string_view var, const Rational& value) const;

    /// Embed into a superset variable list (every current var must appear).
    MultiPoly lifted(const VarList& superset) const;

    /// Remove variables that do not occur; throws VariableMismatch if one does.
    MultiPoly without_vars(const std::vector<std::string>& drop) const;

    /// Extract the coefficient polynomials of var^0, var^1, ... (var stays in
    /// the list with exponent 0 in each returned coefficient).
    std::vector<MultiPoly> coefficients_in(std::string_view var) const;

    /// Rational content c and primitive part p with *this = c * p, where p has
    /// coprime integer coefficients and positive leading coefficient.
    std::pair<Rational, MultiPoly> content_primitive() const;

    /// Canonical text: graded-lex descending, e.g. "x^2 - x + 1/6".
    std::string str() const;

private:
    std::size_t var_index(std::string_view var) const;  // UnknownVariable
    void add_term(const Exponents& e, const Rational& c);

    VarList vars_;
    TermMap terms_;
};

void require_same_vars(const MultiPoly& a, const MultiPoly& b);

/// Monic gcd over Q[vars] (recursive primitive pseudo-remainder sequence).
/// gcd(0, 0) = 0; otherwise the result has leading coefficient 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Exact division; throws VariableMismatch on var mismatch and Error when the
/// divisor does not divide the dividend.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Falling-factorial binomial with a polynomial argument: degree-k polynomial
/// u(u-1)...(u-k+1)/k!.
MultiPoly generalized_binomial(const MultiPoly& u, unsigned k);

}  // namespace cyclaudit
