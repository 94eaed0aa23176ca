#include "cyclaudit/appell.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <utility>

namespace cyclaudit {

namespace {

std::vector<Rational> egf_coeffs_from_series(const TruncatedSeries<Rational>& a) {
    // A(w) = sum c_m w^m, EGF normalization stores a_m = m! c_m
    std::vector<Rational> out(a.order());
    for (std::size_t m = 0; m < a.order(); ++m)
        out[m] = a[m] * Rational(factorial(static_cast<unsigned>(m)));
    return out;
}

AppellFamily make_family(std::string name, const TruncatedSeries<Rational>& prefactor) {
    AppellFamily f;
    f.name = std::move(name);
    f.lambda = Rational(1);
    f.egf_coeffs = egf_coeffs_from_series(prefactor);
    f.declared_parity = ParityRule::alternating;
    return f;
}

}  // namespace

AppellFamily bernoulli_family(std::size_t coeff_count) {
    // w/(e^w - 1) = 1 / sum_{m>=0} w^m/(m+1)!
    std::vector<Rational> d(coeff_count);
    for (std::size_t m = 0; m < coeff_count; ++m)
        d[m] = Rational(factorial(static_cast<unsigned>(m) + 1)).inverse();
    return make_family("bernoulli", TruncatedSeries<Rational>(std::move(d)).invert());
}

AppellFamily euler_family(std::size_t coeff_count) {
    // 2/(e^w + 1)
    std::vector<Rational> d(coeff_count);
    for (std::size_t m = 0; m < coeff_count; ++m)
        d[m] = Rational(factorial(static_cast<unsigned>(m))).inverse();
    d[0] += Rational(1);
    return make_family("euler", TruncatedSeries<Rational>(std::move(d)).invert().scaled(Rational(2)));
}

AppellFamily centered_monomial_family(std::size_t coeff_count) {
    // e^{-w/2}: coefficients (-1/2)^m / m!
    std::vector<Rational> c(coeff_count);
    for (std::size_t m = 0; m < coeff_count; ++m)
        c[m] = Rational(-1, 2).pow(static_cast<long>(m)) *
               Rational(factorial(static_cast<unsigned>(m))).inverse();
    return make_family("centered_monomial", TruncatedSeries<Rational>(std::move(c)));
}

AppellFamily centered_hermite_family(std::size_t coeff_count) {
    // e^{-w/2 - w^2/2}
    std::vector<Rational> s(coeff_count, Rational(0));
    if (coeff_count > 1) s[1] = Rational(-1, 2);
    if (coeff_count > 2) s[2] = Rational(-1, 2);
    return make_family("centered_hermite", series_exp(TruncatedSeries<Rational>(std::move(s))));
}

AppellFamily monomial_family(std::size_t coeff_count) {
    AppellFamily f;
    f.name = "monomial";
    f.lambda = Rational(1);
    f.egf_coeffs.assign(coeff_count, Rational(0));
    f.egf_coeffs[0] = Rational(1);
    f.declared_parity = ParityRule::unspecified;
    return f;
}

std::vector<std::string> builtin_family_names() {
    return {"bernoulli", "euler", "centered_monomial", "centered_hermite", "monomial"};
}

AppellFamily builtin_family(const std::string& name, std::size_t coeff_count) {
    if (name == "bernoulli") return bernoulli_family(coeff_count);
    if (name == "euler") return euler_family(coeff_count);
    if (name == "centered_monomial") return centered_monomial_family(coeff_count);
    if (name == "centered_hermite") return centered_hermite_family(coeff_count);
    if (name == "monomial") return monomial_family(coeff_count);
    throw ConfigError("unknown builtin family '" + name + "'");
}

AppellFamily load_family(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDocument(std::string("family descriptor is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedDocument("family descriptor must be a JSON object");
    AppellFamily f;
    f.name = doc.value("name", std::string("unnamed"));
    try {
        f.lambda = Rational::parse(doc.value("lambda", std::string("1")));
        if (!doc.contains("egf_coeffs") || !doc["egf_coeffs"].is_array())
            throw MalformedDocument("family descriptor needs an egf_coeffs array");
        for (const auto& item : doc["egf_coeffs"]) {
            if (!item.is_string())
                throw MalformedDocument("egf_coeffs entries must be rational texts");
            f.egf_coeffs.push_back(Rational::parse(item.get<std::string>()));
        }
    } catch (const InvalidRationalText& e) {
        throw MalformedDocument(std::string("bad rational in family descriptor: ") + e.what());
    }
    if (doc.contains("parity")) {
        const std::string p = doc["parity"].get<std::string>();
        if (p == "alternating") f.declared_parity = ParityRule::alternating;
        else if (p == "+1") f.declared_parity = ParityRule::always_plus;
        else if (p == "-1") f.declared_parity = ParityRule::always_minus;
        else throw MalformedDocument("parity must be one of alternating, +1, -1");
    }
    if (f.egf_coeffs.empty() || f.egf_coeffs[0].is_zero())
        throw ZeroPrefactorConstant("family '" + f.name + "' has a_0 = 0");
    if (f.lambda.is_zero()) throw ZeroLambda("family '" + f.name + "' has lambda = 0");
    return f;
}

AppellPolynomialTable family_polynomials(const AppellFamily& family, int n_max) {
    if (family.egf_coeffs.empty() || family.egf_coeffs[0].is_zero())
        throw ZeroPrefactorConstant("family '" + family.name + "' has a_0 = 0");
    if (n_max < 0) throw ConfigError("family_polynomials: n_max must be >= 0");
    AppellPolynomialTable table;
    table.family = family;
    table.max_degree = n_max;
    table.polys.reserve(static_cast<std::size_t>(n_max) + 1);
    const MultiPoly x = MultiPoly::variable(kAppellVars, "x");
    for (int n = 0; n <= n_max; ++n) {
        MultiPoly f = MultiPoly::zero(kAppellVars);
        for (int j = 0; j <= n; ++j) {
            const Rational coef = Rational(binomial_integer(static_cast<unsigned>(n),
                                                            static_cast<unsigned>(j))) *
                                  family.egf_coeff(static_cast<std::size_t>(n - j)) *
                                  family.lambda.pow(j);
            if (coef.is_zero()) continue;
            f += x.pow(static_cast<unsigned>(j)).scaled(coef);
        }
        table.polys.push_back(std::move(f));
    }
    return table;
}

DefectReport check_ladder(const AppellPolynomialTable& table) {
    DefectReport report;
    report.check = "appell-ladder";
    report.params = "family=" + table.family.name + " n<=" + std::to_string(table.max_degree);
    std::ostringstream bad;
    bool all_zero = true;
    for (int n = 1; n <= table.max_degree; ++n) {
        const MultiPoly residual =
            table.polys[static_cast<std::size_t>(n)].derivative("x") -
            table.polys[static_cast<std::size_t>(n - 1)]
                .scaled(table.family.lambda * Rational(n));
        if (!residual.is_zero()) {
            if (!all_zero) bad << "; ";
            bad << "[n=" << n << "] " << residual.str();
            all_zero = false;
        }
    }
    report.is_zero = all_zero;
    report.residual = all_zero ? "0" : bad.str();
    return report;
}

std::vector<ParityResult> check_reflection(const AppellPolynomialTable& table) {
    std::vector<ParityResult> out;
    const MultiPoly one_minus_x =
        MultiPoly::constant(kAppellVars, Rational(1)) - MultiPoly::variable(kAppellVars, "x");
    for (int n = 0; n <= table.max_degree; ++n) {
        const MultiPoly& f = table.polys[static_cast<std::size_t>(n)];
        const MultiPoly reflected = f.substitute({{"x", one_minus_x}}, kAppellVars);
        ParityResult r;
        r.n = n;
        r.residual_plus = reflected - f;
        r.residual_minus = reflected + f;
        if (r.residual_plus.is_zero() && r.residual_minus.is_zero())
            r.epsilon = 1;  // F_n = 0; either sign works
        else if (r.residual_plus.is_zero())
            r.epsilon = 1;
        else if (r.residual_minus.is_zero())
            r.epsilon = -1;
        else
            r.epsilon = 0;
        out.push_back(std::move(r));
    }
    return out;
}

DefectReport check_reflection_report(const AppellPolynomialTable& table) {
    DefectReport report;
    report.check = "appell-reflection";
    report.params = "family=" + table.family.name + " n<=" + std::to_string(table.max_degree);
    std::ostringstream detail;
    bool ok = true;
    for (const ParityResult& r : check_reflection(table)) {
        if (r.epsilon == 0) {
            if (!ok) detail << "; ";
            detail << "[n=" << r.n << "] no parity, +residual " << r.residual_plus.str()
                   << ", -residual " << r.residual_minus.str();
            ok = false;
        }
    }
    report.is_zero = ok;
    report.residual = ok ? "0" : detail.str();
    return report;
}

std::vector<Rational> bernoulli_numbers(std::size_t count) {
    if (count == 0) return {};
    return bernoulli_family(count).egf_coeffs;  // a_m = B_m for w/(e^w-1)
}

Rational bernoulli_number(unsigned m) { return bernoulli_numbers(m + 1)[m]; }

MultiPoly bernoulli_polynomial(unsigned n) {
    return family_polynomials(bernoulli_family(n + 1), static_cast<int>(n))
        .polys[n];
}

MultiPoly euler_polynomial(unsigned n) {
    return family_polynomials(euler_family(n + 1), static_cast<int>(n)).polys[n];
}

}  // namespace cyclaudit
