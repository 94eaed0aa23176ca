#include "cyclaudit/rational.hpp"

#include <utility>

namespace cyclaudit {

Rational::Rational(Integer num, Integer den) {
    if (den.is_zero()) throw ZeroDenominator("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return InvalidRationalText("invalid rational text: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return Integer(std::string(part));
    };
    Integer num = parse_int(num_part);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_int(text.substr(slash + 1));
        if (den <= 0) throw bad();  // the grammar requires a positive denominator
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero rational");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational result(1);
    Rational base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial_integer(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

Rational generalized_binomial(const Rational& u, unsigned k) {
    Rational prod(1);
    for (unsigned i = 0; i < k; ++i) prod *= (u - Rational(static_cast<std::int64_t>(i)));
    return prod / Rational(factorial(k));
}

}  // namespace cyclaudit
