// cyclaudit: exact and numeric verification of Sun-Pan type cyclic identities,
// q-analogues, period polynomials and analytic Bernoulli functions.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclaudit/analytic.hpp"
#include "cyclaudit/audit.hpp"
#include "cyclaudit/cyclic.hpp"
#include "cyclaudit/modular.hpp"
#include "cyclaudit/parser.hpp"
#include "cyclaudit/qengine.hpp"

namespace {

using namespace cyclaudit;

struct Output {
    bool json = false;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    bool any_defect = false, any_error = false;

    void emit(const DefectReport& rep) {
        any_defect |= !rep.is_zero;
        if (json) {
            nlohmann::ordered_json c;
            c["name"] = rep.check;
            c["params"] = rep.params;
            c["status"] = rep.is_zero ? "verified" : "defect";
            c["residual"] = rep.residual;
            c["elapsed_ms"] = 0.0;
            checks.push_back(std::move(c));
        } else {
            std::cout << "[" << (rep.is_zero ? "verified" : "defect") << "] " << rep.check << " ("
                      << rep.params << ") residual=" << rep.residual << "\n";
        }
    }

    void value(const std::string& name, const std::string& params, const std::string& text,
               std::optional<double> est = std::nullopt) {
        if (json) {
            nlohmann::ordered_json c;
            c["name"] = name;
            c["params"] = params;
            c["status"] = "verified";
            c["residual"] = text;
            if (est) c["error_estimate"] = *est;
            c["elapsed_ms"] = 0.0;
            checks.push_back(std::move(c));
        } else {
            std::cout << name << " (" << params << ") = " << text;
            if (est) std::cout << "  [error <= " << format_double(*est) << "]";
            std::cout << "\n";
        }
    }

    int flush(bool expect_known_unused = false) {
        (void)expect_known_unused;
        if (json) {
            nlohmann::ordered_json j;
            j["version"] = kVersion;
            j["checks"] = checks;
            std::cout << j.dump(2) << "\n";
        }
        if (any_error) return 3;
        return any_defect ? 1 : 0;
    }
};

AppellPolynomialTable table_for(const std::string& family, const std::string& family_file, int n) {
    const std::size_t coeffs = static_cast<std::size_t>(n) + 2;
    if (!family_file.empty()) {
        std::ifstream in(family_file);
        if (!in) throw ConfigError("cannot open family file '" + family_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return family_polynomials(load_family(ss.str()), n);
    }
    return family_polynomials(builtin_family(family, coeffs), n);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"identity audit lab for cyclic vanishing identities"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    // ---- polynomial family tables ----------------------------------------
    int n = 6;
    std::string family = "bernoulli", family_file;
    auto* sub_bern = app.add_subcommand("bernoulli", "print Bernoulli polynomials B_0..B_n");
    sub_bern->add_option("--n", n, "maximum degree");
    auto* sub_euler = app.add_subcommand("euler", "print Euler polynomials E_0..E_n");
    sub_euler->add_option("--n", n, "maximum degree");
    auto* sub_family = app.add_subcommand("family", "load a family descriptor and audit its axioms");
    sub_family->add_option("--file", family_file, "JSON family descriptor")->required();
    sub_family->add_option("--n", n, "maximum degree");

    // ---- classical cyclic engine ------------------------------------------
    auto* sub_cyc = app.add_subcommand("cyclic-check", "cyclic defect of Theorem-2.1 shape");
    std::string mode = "symbolic";
    std::uint64_t seed = 42;
    int samples = 5;
    sub_cyc->add_option("--family", family, "builtin family name");
    sub_cyc->add_option("--file", family_file, "JSON family descriptor (overrides --family)");
    sub_cyc->add_option("--n", n, "degree (single n)");
    sub_cyc->add_option("--mode", mode, "symbolic|sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    sub_cyc->add_option("--seed", seed, "sampling seed");
    sub_cyc->add_option("--samples", samples, "sample count");

    int bin_k = 0;
    auto* sub_bin = app.add_subcommand("binomial-defect", "the proof's per-k binomial expression");
    sub_bin->add_option("--n", n, "n")->required();
    sub_bin->add_option("--k", bin_k, "k")->required();

    // ---- q engine -----------------------------------------------------------
    std::string qkind = "q-bernoulli";
    auto* sub_qp = app.add_subcommand("q-polys", "q-Bernoulli / q-Euler polynomial table");
    sub_qp->add_option("--kind", qkind, "q-bernoulli|q-euler")
        ->check(CLI::IsMember({"q-bernoulli", "q-euler"}));
    sub_qp->add_option("--n", n, "maximum degree");

    auto* sub_qc = app.add_subcommand("q-cyclic-check", "q-cyclic defect of Theorem-2.3 shape");
    std::string triple;
    sub_qc->add_option("--kind", qkind, "q-bernoulli|q-euler")
        ->check(CLI::IsMember({"q-bernoulli", "q-euler"}));
    sub_qc->add_option("--n", n, "degree");
    sub_qc->add_option("--mode", mode, "symbolic|sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    sub_qc->add_option("--triple", triple, "integer mode r,s,t (overrides --mode)");
    sub_qc->add_option("--seed", seed, "sampling seed");
    sub_qc->add_option("--samples", samples, "sample count");

    auto* sub_ql = app.add_subcommand("q-limit", "exact q->1 degeneration checks");
    sub_ql->add_option("--kind", qkind, "q-bernoulli|q-euler")
        ->check(CLI::IsMember({"q-bernoulli", "q-euler"}));
    sub_ql->add_option("--n", n, "maximum degree");

    // ---- modular ------------------------------------------------------------
    int weight = 12;
    std::string poly_text = "z^2 - 1", matrix_text = "0,-1,1,0", variant = "both";
    auto* sub_ps = app.add_subcommand("period-space", "exact period-space basis and dimension");
    sub_ps->add_option("--weight", weight, "even weight k >= 4");
    auto* sub_tt = app.add_subcommand("three-term", "paper-literal and standard three-term maps");
    sub_tt->add_option("--weight", weight, "even weight k");
    sub_tt->add_option("--poly", poly_text, "polynomial in z");
    sub_tt->add_option("--variant", variant, "paper|standard|both")
        ->check(CLI::IsMember({"paper", "standard", "both"}));
    auto* sub_slash = app.add_subcommand("slash", "weight-(k-2) slash action of an integer matrix");
    sub_slash->add_option("--weight", weight, "even weight k");
    sub_slash->add_option("--poly", poly_text, "polynomial in z");
    sub_slash->add_option("--matrix", matrix_text, "a,b,c,d with ad-bc = +-1");

    std::string form = "delta";
    int truncation = 40, lm = 6;
    auto* sub_qexp = app.add_subcommand("qexp", "q-expansion coefficients");
    sub_qexp->add_option("--form", form, "delta|eisenstein")
        ->check(CLI::IsMember({"delta", "eisenstein"}));
    sub_qexp->add_option("--weight", weight, "Eisenstein weight");
    sub_qexp->add_option("--truncation", truncation, "number of coefficients");
    auto* sub_lv = app.add_subcommand("l-value", "completed L-value Lambda(m) for Delta");
    sub_lv->add_option("--m", lm, "1 <= m <= 11");
    sub_lv->add_option("--truncation", truncation, "series truncation N");
    auto* sub_pn = app.add_subcommand("period-numeric", "numeric period polynomial of Delta");
    sub_pn->add_option("--truncation", truncation, "series truncation N");

    // ---- analytic -------------------------------------------------------------
    auto* sub_an = app.add_subcommand("analytic", "Hurwitz zeta / analytic Bernoulli functions");
    std::string fn = "hurwitz";
    double as = 2.0, ax = 0.5, ay = 0.3, ar = 1.0, as2 = 0.5, delta = 0.0, tol = 1e-8;
    sub_an->add_option("--fn", fn,
                       "hurwitz|B|A|polylog|ladder-B|ladder-A|hurwitz-formula|antisymmetry|cyclic-probe")
        ->check(CLI::IsMember({"hurwitz", "B", "A", "polylog", "ladder-B", "ladder-A",
                               "hurwitz-formula", "antisymmetry", "cyclic-probe"}));
    sub_an->add_option("--s", as, "s argument");
    sub_an->add_option("--x", ax, "x argument");
    sub_an->add_option("--y", ay, "y argument (cyclic probe)");
    sub_an->add_option("--r", ar, "r argument (cyclic probe)");
    sub_an->add_option("--s2", as2, "second s argument (cyclic probe slot s)");
    sub_an->add_option("--delta", delta, "index shift (cyclic probe)");
    sub_an->add_option("--n", n, "cyclic probe n");
    sub_an->add_option("--tol", tol, "tolerance echoed in reports");

    // ---- audit ------------------------------------------------------------------
    auto* sub_audit = app.add_subcommand("audit", "run the full identity audit");
    AuditConfig cfg;
    std::string sections = "classical,q,modular,analytic";
    sub_audit->add_option("--sections", sections, "comma list: classical,q,modular,analytic");
    sub_audit->add_option("--n", cfg.n_max, "classical symbolic ceiling (<= 16)");
    sub_audit->add_option("--q-n", cfg.q_symbolic_n_max, "q symbolic/sampled ceiling (<= 4)");
    sub_audit->add_option("--mode", cfg.q_mode, "q mode: symbolic|sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    sub_audit->add_option("--weights", cfg.weight_max, "maximum period-space weight");
    sub_audit->add_option("--seed", cfg.seed, "RNG seed for sampled checks");
    sub_audit->add_option("--samples", cfg.samples, "sample count for sampled checks");
    sub_audit->add_option("--truncation", cfg.truncation, "Delta q-expansion truncation");
    sub_audit->add_option("--tol", cfg.tol, "generic numeric tolerance echo");
    sub_audit->add_flag("--expect-known", cfg.expect_known,
                        "known paper discrepancies do not fail the run");
    sub_audit->add_flag("--timing", cfg.timing, "include measured elapsed_ms in the report");

    for (CLI::App* s : {sub_bern, sub_euler, sub_family, sub_cyc, sub_bin, sub_qp, sub_qc,
                        sub_ql, sub_ps, sub_tt, sub_slash, sub_qexp, sub_lv, sub_pn, sub_an,
                        sub_audit})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors are exit code 2
    }

    Output out;
    out.json = json;

    if (sub_bern->parsed() || sub_euler->parsed()) {
        const bool bern = sub_bern->parsed();
        const auto table = family_polynomials(builtin_family(bern ? "bernoulli" : "euler",
                                                             static_cast<std::size_t>(n) + 2),
                                              n);
        for (int i = 0; i <= n; ++i)
            out.value(bern ? "bernoulli" : "euler", "n=" + std::to_string(i),
                      table.polys[static_cast<std::size_t>(i)].str());
        return out.flush();
    }
    if (sub_family->parsed()) {
        const auto table = table_for("", family_file, n);
        for (int i = 0; i <= n; ++i)
            out.value("family", "name=" + table.family.name + " n=" + std::to_string(i),
                      table.polys[static_cast<std::size_t>(i)].str());
        out.emit(check_ladder(table));
        out.emit(check_reflection_report(table));
        return out.flush();
    }
    if (sub_cyc->parsed()) {
        const auto table = table_for(family, family_file, n);
        if (mode == "symbolic") {
            const MultiPoly d = cyclic_defect(table, n);
            DefectReport rep;
            rep.check = "cyclic-defect";
            rep.params = "family=" + table.family.name + " n=" + std::to_string(n) +
                         " mode=symbolic";
            rep.is_zero = d.is_zero();
            rep.residual = d.str();
            out.emit(rep);
        } else {
            for (const DefectReport& rep : cyclic_defect_sampled(table, n, seed, samples))
                out.emit(rep);
        }
        return out.flush();
    }
    if (sub_bin->parsed()) {
        const MultiPoly d = binomial_cyclic_defect(n, bin_k);
        DefectReport rep;
        rep.check = "binomial-cyclic-defect";
        rep.params = "n=" + std::to_string(n) + " k=" + std::to_string(bin_k);
        rep.is_zero = d.is_zero();
        rep.residual = d.str();
        out.emit(rep);
        return out.flush();
    }
    if (sub_qp->parsed()) {
        const QFamilyKind kind =
            qkind == "q-bernoulli" ? QFamilyKind::q_bernoulli : QFamilyKind::q_euler;
        const QFamilyTable table = q_family_polynomials(kind, n);
        for (int i = 0; i <= n; ++i) {
            std::string text;
            const QPoly& p = table.polys[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
                if (j) text += " + ";
                text += "(" + p.coeffs[j].str() + ")*x^" + std::to_string(j);
            }
            out.value(qkind, "n=" + std::to_string(i), text);
        }
        return out.flush();
    }
    if (sub_qc->parsed()) {
        const QFamilyKind kind =
            qkind == "q-bernoulli" ? QFamilyKind::q_bernoulli : QFamilyKind::q_euler;
        const QFamilyTable table = q_family_polynomials(kind, n);
        if (!triple.empty()) {
            QCyclicParams p;
            p.n = n;
            p.symbolic = false;
            if (std::sscanf(triple.c_str(), "%d,%d,%d", &p.r, &p.s, &p.t) != 3)
                throw ConfigError("--triple expects r,s,t");
            out.emit(q_cyclic_defect(table, p));
        } else if (mode == "symbolic") {
            QCyclicParams p;
            p.n = n;
            p.symbolic = true;
            out.emit(q_cyclic_defect(table, p));
        } else {
            for (const DefectReport& rep : q_cyclic_defect_sampled(table, n, seed, samples))
                out.emit(rep);
        }
        return out.flush();
    }
    if (sub_ql->parsed()) {
        const QFamilyKind kind =
            qkind == "q-bernoulli" ? QFamilyKind::q_bernoulli : QFamilyKind::q_euler;
        for (const DefectReport& rep : q_to_one_check(q_family_polynomials(kind, n)))
            out.emit(rep);
        return out.flush();
    }
    if (sub_ps->parsed()) {
        const PeriodSpace space = period_space(weight);
        out.value("period-space", "k=" + std::to_string(weight),
                  "dim=" + std::to_string(space.basis.size()) +
                      " (2 dim S_k + 1 = " + std::to_string(2 * cuspform_dim(weight) + 1) + ")");
        for (std::size_t i = 0; i < space.basis.size(); ++i)
            out.value("period-space-basis", "k=" + std::to_string(weight) + " i=" + std::to_string(i),
                      polyq_str(space.basis[i]));
        return out.flush();
    }
    if (sub_tt->parsed()) {
        const PolyQ p = polyq_from_text(poly_text, weight - 2);
        if (variant != "standard") {
            const PolyQ r = three_term_paper(p, weight);
            DefectReport rep;
            rep.check = "three-term-paper";
            rep.params = "poly=" + poly_text + " k=" + std::to_string(weight);
            rep.is_zero = r.is_zero();
            rep.residual = polyq_str(r);
            out.emit(rep);
        }
        if (variant != "paper") {
            const PolyQ r = three_term_standard(p, weight);
            DefectReport rep;
            rep.check = "three-term-standard";
            rep.params = "poly=" + poly_text + " k=" + std::to_string(weight);
            rep.is_zero = r.is_zero();
            rep.residual = polyq_str(r);
            out.emit(rep);
        }
        return out.flush();
    }
    if (sub_slash->parsed()) {
        GL2Mat g;
        if (std::sscanf(matrix_text.c_str(), "%lld,%lld,%lld,%lld", &g.a, &g.b, &g.c, &g.d) != 4)
            throw ConfigError("--matrix expects a,b,c,d");
        const PolyQ p = polyq_from_text(poly_text, weight - 2);
        out.value("slash", "poly=" + poly_text + " k=" + std::to_string(weight) +
                               " matrix=" + matrix_text,
                  polyq_str(slash(p, g)));
        return out.flush();
    }
    if (sub_qexp->parsed()) {
        const QExpansion f = form == "delta" ? delta_qexp(truncation)
                                             : eisenstein_qexp(weight, truncation);
        std::string text;
        for (std::size_t i = 0; i < f.a.size(); ++i) {
            if (i) text += ", ";
            text += f.a[i].str();
        }
        out.value("qexp", "form=" + form + (form == "eisenstein"
                                                ? " k=" + std::to_string(weight)
                                                : std::string()) +
                              " N=" + std::to_string(truncation),
                  text);
        return out.flush();
    }
    if (sub_lv->parsed()) {
        const QExpansion d = delta_qexp(truncation + 1);
        const double v = completed_L(d, 12, lm, truncation);
        out.value("l-value", "form=delta m=" + std::to_string(lm) +
                                 " N=" + std::to_string(truncation),
                  format_double(v));
        return out.flush();
    }
    if (sub_pn->parsed()) {
        const QExpansion d = delta_qexp(truncation + 1);
        const PolyC r = period_polynomial_numeric(d, 12, truncation);
        out.value("period-numeric", "form=delta N=" + std::to_string(truncation), polyc_str(r));
        out.value("period-numeric-three-term-residual", "form=delta",
                  format_double(max_norm(three_term_standard_c(r, 12)) / max_norm(r)));
        out.value("period-numeric-s-relation-residual", "form=delta",
                  format_double(max_norm(s_relation_c(r)) / max_norm(r)));
        return out.flush();
    }
    if (sub_an->parsed()) {
        std::ostringstream ps;
        if (fn == "hurwitz") {
            const EvalResult r = hurwitz_zeta(as, ax);
            out.value("hurwitz-zeta", r.parameters, format_double(r.value.real()),
                      r.error_estimate);
        } else if (fn == "B") {
            const EvalResult r = analytic_bernoulli_B(as, ax);
            out.value("analytic-B", r.parameters, format_double(r.value.real()), r.error_estimate);
        } else if (fn == "A") {
            const EvalResult r = analytic_bernoulli_A(as, ax);
            out.value("analytic-A", r.parameters, format_double(r.value.real()), r.error_estimate);
        } else if (fn == "polylog") {
            const EvalResult r = polylog_unit_circle(as, ax);
            out.value("polylog", r.parameters, format_complex(r.value), r.error_estimate);
        } else if (fn == "ladder-B") {
            out.emit(appell_ladder_numeric('B', as, ax));
        } else if (fn == "ladder-A") {
            out.emit(appell_ladder_numeric('A', as, ax));
        } else if (fn == "hurwitz-formula") {
            out.emit(hurwitz_formula_check(as, ax));
        } else if (fn == "antisymmetry") {
            out.emit(analytic_antisymmetry_probe(as, ax, tol));
        } else {
            out.emit(analytic_cyclic_probe(n, delta, ax, ay, ar, as2));
        }
        return out.flush();
    }
    if (sub_audit->parsed()) {
        cfg.sections.clear();
        std::stringstream ss(sections);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.sections.push_back(item);
        const AuditReport report = run_audit(cfg);
        std::cout << emit_report(report, json);
        return exit_code_for(report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergent& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const AccuracyUnreachable& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientTruncation& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}
