#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclaudit/report.hpp"
#include "cyclaudit/series.hpp"

namespace cyclaudit {

/// Declared reflection behaviour F_n(1-x) = eps_n F_n(x). Checked, never
/// assumed: the audit admits families that violate it.
enum class ParityRule { unspecified, alternating, always_plus, always_minus };

/// A named Appell family: prefactor A(w) = sum a_m w^m/m! (stored as the a_m),
/// ladder constant lambda, optional declared parity.
struct AppellFamily {
    std::string name;
    Rational lambda = Rational(1);
    std::vector<Rational> egf_coeffs;  // a_m; zero-padded beyond the list
    ParityRule declared_parity = ParityRule::unspecified;

    Rational egf_coeff(std::size_t m) const {
        return m < egf_coeffs.size() ? egf_coeffs[m] : Rational(0);
    }
};

/// F_0..F_max_degree over the single variable "x"; deg F_n = n with leading
/// coefficient a_0 * lambda^n.
struct AppellPolynomialTable {
    AppellFamily family;
    int max_degree = 0;
    std::vector<MultiPoly> polys;
};

inline const VarList kAppellVars{"x"};

// builtin prefactors, coefficients computed exactly to the requested count
AppellFamily bernoulli_family(std::size_t coeff_count);         // w/(e^w - 1)
AppellFamily euler_family(std::size_t coeff_count);             // 2/(e^w + 1)
AppellFamily centered_monomial_family(std::size_t coeff_count); // e^{-w/2}
AppellFamily centered_hermite_family(std::size_t coeff_count);  // e^{-w/2 - w^2/2}
AppellFamily monomial_family(std::size_t coeff_count);          // A(w) = 1
AppellFamily builtin_family(const std::string& name, std::size_t coeff_count);  // ConfigError
std::vector<std::string> builtin_family_names();

/// Parse an external family descriptor document (JSON text with fields name,
/// lambda, egf_coeffs, optional parity). Throws MalformedDocument,
/// ZeroPrefactorConstant, ZeroLambda.
AppellFamily load_family(const std::string& json_text);

/// F_n(x) = sum_j C(n,j) a_{n-j} (lambda x)^j for n = 0..n_max.
AppellPolynomialTable family_polynomials(const AppellFamily& family, int n_max);

/// Exact per-degree residual d/dx F_n - lambda n F_{n-1}; zero flag when all
/// vanish.
DefectReport check_ladder(const AppellPolynomialTable& table);

/// Per-degree reflection result: epsilon in {+1,-1} when F_n(1-x) = +-F_n(x)
/// exactly, epsilon = 0 ("no parity") otherwise, with both sign residuals.
struct ParityResult {
    int n = 0;
    int epsilon = 0;
    MultiPoly residual_plus;   // F_n(1-x) - F_n(x)
    MultiPoly residual_minus;  // F_n(1-x) + F_n(x)
};
std::vector<ParityResult> check_reflection(const AppellPolynomialTable& table);
DefectReport check_reflection_report(const AppellPolynomialTable& table);

// exact classical constants and polynomials
std::vector<Rational> bernoulli_numbers(std::size_t count);  // B_0..B_{count-1}
Rational bernoulli_number(unsigned m);
MultiPoly bernoulli_polynomial(unsigned n);  // over {"x"}
MultiPoly euler_polynomial(unsigned n);      // over {"x"}

}  // namespace cyclaudit
