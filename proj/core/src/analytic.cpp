#include "cyclaudit/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "cyclaudit/appell.hpp"

namespace cyclaudit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2j}/(2j)! as doubles, from the exact module
const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        const auto bs = bernoulli_numbers(64);
        std::vector<double> t(32);
        for (std::size_t j = 1; j < 32; ++j)
            t[j] = (bs[2 * j] / Rational(factorial(static_cast<unsigned>(2 * j)))).to_double();
        return t;
    }();
    return table;
}

std::string tuning_echo(double s, double x, int N, int J) {
    std::ostringstream os;
    os << "s=" << s << " x=" << x << " N=" << N << " J=" << J;
    return os.str();
}

// Kahan-compensated accumulator
struct Compensated {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

bool is_nonpositive_integer(double s) { return s <= 0.0 && s == std::round(s); }

}  // namespace

EvalResult hurwitz_zeta(double s, double x, HurwitzTuning tuning) {
    if (s == 1.0) throw PoleAtOne("hurwitz_zeta: s = 1 is the pole");
    if (!(x > 0.0)) throw Error("hurwitz_zeta: x must be positive");

    if (is_nonpositive_integer(s) && !tuning.force_euler_maclaurin && s > -64.0) {
        // zeta(1-n, x) = -B_n(x)/n with n = 1-s
        const unsigned n = static_cast<unsigned>(1.0 - s);
        const MultiPoly bn = bernoulli_polynomial(n);
        double v = 0.0;
        for (const auto& [e, c] : bn.terms())  // Horner not needed at these degrees
            v += c.to_double() * std::pow(x, static_cast<double>(e[0]));
        EvalResult r;
        r.value = -v / static_cast<double>(n);
        r.error_estimate = 8 * kEps * std::abs(r.value.real());
        r.parameters = tuning_echo(s, x, 0, 0) + " path=closed-form";
        return r;
    }

    const int J = std::max(2, tuning.depth_J);
    int N = tuning.shift_N;
    if (N < 0) {
        // keep the correction terms decaying: N + x comfortably above
        // (|s| + 2J)/(2 pi); for nonnegative s a fixed shift is plenty
        N = s >= -0.5 ? 35
                      : static_cast<int>(std::ceil((std::abs(s) + 2.0 * J) / (2 * kPi))) + 3;
    }

    Compensated main;
    for (int n = 0; n < N; ++n) main.add(std::pow(n + x, -s));
    const double a = static_cast<double>(N) + x;
    Compensated tail;
    tail.add(std::pow(a, 1.0 - s) / (s - 1.0));
    tail.add(0.5 * std::pow(a, -s));

    const auto& b2j = bernoulli_over_factorial();
    double poch = s;  // (s)_{2j-1} rising factorial, j = 1 gives s
    double last = 0.0, prev = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (int j = 1; j <= J; ++j) {
        if (j > 1) poch *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
        if (static_cast<std::size_t>(j) >= b2j.size())
            throw ConfigError("hurwitz_zeta: correction depth exceeds the Bernoulli table");
        const double term = b2j[static_cast<std::size_t>(j)] * poch * std::pow(a, -s - 2.0 * j + 1.0);
        tail.add(term);
        last = std::abs(term);
        if (j > 2 && last > prev && last > 1e-280) decreasing = false;
        if (last != 0.0) prev = last;
    }
    if (!decreasing)
        throw NonConvergent("hurwitz_zeta: correction terms stopped decreasing; raise N or lower J");

    EvalResult r;
    r.value = main.sum + tail.sum;
    r.error_estimate = 2.0 * last + 8 * kEps * std::abs(r.value.real());
    r.parameters = tuning_echo(s, x, N, J) + " path=euler-maclaurin";
    return r;
}

EvalResult analytic_bernoulli_B(double s, double x) {
    if (!(x > 0.0 && x <= 1.0)) throw Error("analytic_bernoulli_B: x must lie in (0, 1]");
    if (s == 0.0) {
        EvalResult r;
        r.value = 1.0;  // removable singularity of -s zeta(1-s, x)
        r.error_estimate = kEps;
        r.parameters = tuning_echo(s, x, 0, 0) + " path=limit";
        return r;
    }
    if (std::abs(s) < 1e-3)
        throw NearPole("analytic_bernoulli_B: 0 < |s| < 1e-3 is rejected near the s = 0 limit");
    EvalResult z = hurwitz_zeta(1.0 - s, x);
    EvalResult r;
    r.value = -s * z.value.real();
    r.error_estimate = std::abs(s) * z.error_estimate + 8 * kEps * std::abs(r.value.real());
    r.parameters = "B(" + std::to_string(s) + "; " + std::to_string(x) + ") via " + z.parameters;
    return r;
}

EvalResult polylog_unit_circle(double s, double x, double target, long long max_terms) {
    if (!(s >= 1.25)) throw Error("polylog_unit_circle: s must be >= 1.25");
    if (!(x > 0.0 && x < 1.0)) throw Error("polylog_unit_circle: x must lie in (0, 1)");
    if (!(target > 0.0)) throw ConfigError("polylog_unit_circle: target must be positive");
    // tail bound sum_{n>M} n^{-s} <= M^{1-s}/(s-1); compare in double before
    // casting, the required count can dwarf the integer range
    const double needed = std::pow(target * (s - 1.0), 1.0 / (1.0 - s));
    long long M;
    if (!(needed < static_cast<double>(max_terms)))
        M = max_terms + 1;
    else
        M = static_cast<long long>(std::ceil(needed)) + 1;
    if (M < 16) M = 16;
    if (M > max_terms) {
        const double achievable =
            std::pow(static_cast<double>(max_terms), 1.0 - s) / (s - 1.0);
        throw AccuracyUnreachable(
            "polylog_unit_circle: target " + format_double(target) + " needs M=" +
                std::to_string(M) + " > ceiling " + std::to_string(max_terms) +
                "; achievable bound " + format_double(achievable),
            achievable);
    }
    Compensated re, im;
    for (long long n = 1; n <= M; ++n) {
        const double ang = 2.0 * kPi * std::fmod(static_cast<double>(n) * x, 1.0);
        const double w = std::pow(static_cast<double>(n), -s);
        re.add(w * std::cos(ang));
        im.add(w * std::sin(ang));
    }
    EvalResult r;
    r.value = {re.sum, im.sum};
    r.error_estimate = std::pow(static_cast<double>(M), 1.0 - s) / (s - 1.0) +
                       8 * kEps * std::abs(r.value);
    std::ostringstream os;
    os << "s=" << s << " x=" << x << " M=" << M;
    r.parameters = os.str();
    return r;
}

double gamma_plus_one(double s) {
    double z = s + 1.0;
    if (!(z > 0.0)) throw Error("gamma_plus_one: s must exceed -1");
    // shift into the Stirling regime, then divide the factors back out
    double shift = 1.0;
    while (z < 12.0) {
        shift *= z;
        z += 1.0;
    }
    const auto& b2j = bernoulli_over_factorial();
    double corr = 0.0;
    for (int j = 1; j <= 8; ++j) {
        // B_{2j} / (2j (2j-1) z^{2j-1}) with B_{2j} = b2j[j] * (2j)!
        const double b = b2j[static_cast<std::size_t>(j)] *
                         Rational(factorial(static_cast<unsigned>(2 * j))).to_double();
        corr += b / (2.0 * j * (2.0 * j - 1.0) * std::pow(z, 2.0 * j - 1.0));
    }
    const double lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
    return std::exp(lg) / shift;
}

EvalResult analytic_bernoulli_A(double s, double x, double target) {
    const double c = gamma_plus_one(s) / std::pow(2.0 * kPi, s);
    const double li_target = target / (2.0 * c);
    EvalResult li = polylog_unit_circle(s, x, li_target);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -kPi * s / 2.0));
    EvalResult r;
    r.value = -c * 2.0 * (phase * li.value).imag();
    r.error_estimate = 2.0 * c * li.error_estimate + 8 * kEps * std::abs(r.value);
    std::ostringstream os;
    os << "A s=" << s << " x=" << x << " via " << li.parameters;
    r.parameters = os.str();
    return r;
}

DefectReport appell_ladder_numeric(char fn, double s, double x, double h) {
    auto eval = [fn](double ss, double xx) {
        return fn == 'A' ? analytic_bernoulli_A(ss, xx).value.real()
                         : analytic_bernoulli_B(ss, xx).value.real();
    };
    const double fd = (eval(s, x + h) - eval(s, x - h)) / (2.0 * h);
    const double ladder = s * eval(s - 1.0, x);
    DefectReport rep;
    rep.check = std::string("analytic-ladder-") + fn;
    std::ostringstream os;
    os << "s=" << s << " x=" << x << " h=" << h;
    rep.params = os.str();
    const double residual = fd - ladder;
    rep.is_zero = std::abs(residual) < (fn == 'A' ? 1e-5 : 1e-6);
    rep.residual = format_double(residual);
    return rep;
}

DefectReport hurwitz_formula_check(double s, double x) {
    if (!(s >= 2.0)) throw Error("hurwitz_formula_check: s must be >= 2");
    const double lhs = -s * hurwitz_zeta(1.0 - s, x).value.real();
    const double c = gamma_plus_one(s) / std::pow(2.0 * kPi, s);
    const EvalResult li = polylog_unit_circle(s, x, 1e-11 / (2.0 * c), 60'000'000);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -kPi * s / 2.0));
    const double rhs = -c * 2.0 * (phase * li.value).real();
    DefectReport rep;
    rep.check = "hurwitz-formula";
    std::ostringstream os;
    os << "s=" << s << " x=" << x;
    rep.params = os.str();
    const double denom = std::max(std::abs(lhs), 1e-300);
    const double rel = std::abs(lhs - rhs) / denom;
    rep.is_zero = rel < 1e-8;
    rep.residual = format_double(rel);
    return rep;
}

DefectReport analytic_antisymmetry_probe(double s, double x, double tol) {
    const double v = analytic_bernoulli_A(s, 1.0 - x).value.real() +
                     analytic_bernoulli_A(s, x).value.real();
    DefectReport rep;
    rep.check = "analytic-antisymmetry-A";
    std::ostringstream os;
    os << "s=" << s << " x=" << x << " tol=" << tol;
    rep.params = os.str();
    rep.is_zero = std::abs(v) < tol;
    rep.residual = format_double(v);
    return rep;
}

namespace {

double real_generalized_binomial(double u, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= (u - i) / (i + 1);
    return prod;
}

double analytic_B_num(double m_plus_delta, double x) {
    return analytic_bernoulli_B(m_plus_delta, x).value.real();
}

double bracket_num(int n, double delta, double s, double t, double x, double y) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double term = real_generalized_binomial(s, k) *
                            real_generalized_binomial(t, n - k) *
                            analytic_B_num(n - k + delta, x) * analytic_B_num(k + delta, y);
        sum += (k % 2) ? -term : term;
    }
    return sum;
}

}  // namespace

DefectReport analytic_cyclic_probe(int n, double delta, double x, double y, double r, double s) {
    const double t = n - r - s;
    const double z = 1.0 - x - y;
    if (!(x > 0 && x <= 1 && y > 0 && y <= 1 && z > 0 && z <= 1))
        throw Error("analytic_cyclic_probe: x, y and z = 1-x-y must lie in (0, 1]");
    const double defect = r * bracket_num(n, delta, s, t, x, y) +
                          s * bracket_num(n, delta, t, r, y, z) +
                          t * bracket_num(n, delta, r, s, z, x);
    DefectReport rep;
    rep.check = "analytic-cyclic-probe";
    std::ostringstream os;
    os << "n=" << n << " delta=" << delta << " point=(r=" << r << ",s=" << s << ",x=" << x
       << ",y=" << y << ")";
    rep.params = os.str();
    // delta = 0 must reproduce the exact engine's zero; any other delta is a
    // recorded measurement with no asserted expectation
    rep.is_zero = delta == 0.0 ? std::abs(defect) < 1e-8 : true;
    if (delta != 0.0) rep.params += " recorded";
    rep.residual = format_double(defect);
    return rep;
}

}  // namespace cyclaudit
