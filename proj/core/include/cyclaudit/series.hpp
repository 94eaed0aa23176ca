#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cyclaudit/ratfunc.hpp"

namespace cyclaudit {

/// Ring hooks used by TruncatedSeries. A coefficient type opts in by
/// specializing this template; "like" parameters carry the ring context
/// (variable lists) that a bare default constructor cannot.
template <class C>
struct SeriesRing;

template <>
struct SeriesRing<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static Rational invert(const Rational& c) {
        if (c.is_zero()) throw NonInvertibleConstantTerm("series constant term is zero");
        return c.inverse();
    }
};

template <>
struct SeriesRing<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& p) { return MultiPoly::zero(p.vars()); }
    static MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.vars(), Rational(1)); }
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
    static MultiPoly invert(const MultiPoly& p) {
        if (!p.is_constant() || p.is_zero())
            throw NonInvertibleConstantTerm("series constant term not invertible in Q[vars]");
        return MultiPoly::constant(p.vars(), p.constant_value().inverse());
    }
};

template <>
struct SeriesRing<RationalFunction> {
    static RationalFunction zero_like(const RationalFunction& f) {
        return RationalFunction::zero(f.vars());
    }
    static RationalFunction one_like(const RationalFunction& f) {
        return RationalFunction::one(f.vars());
    }
    static bool is_zero(const RationalFunction& f) { return f.is_zero(); }
    static RationalFunction invert(const RationalFunction& f) {
        if (f.is_zero()) throw NonInvertibleConstantTerm("series constant term is zero");
        return f.inverse();
    }
};

/// Power series in one formal variable w, exact modulo w^N. Arithmetic
/// truncates to the minimum operand order, never claiming more precision
/// than both sides hold.
template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("truncated series needs order >= 1");
    }

    static TruncatedSeries constant(const C& value, std::size_t order) {
        std::vector<C> v(order, SeriesRing<C>::zero_like(value));
        v[0] = value;
        return TruncatedSeries(std::move(v));
    }

    std::size_t order() const { return c_.size(); }
    const C& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<C>& coeffs() const { return c_; }

    TruncatedSeries truncated(std::size_t new_order) const {
        if (new_order == 0 || new_order > c_.size())
            throw Error("truncated: bad order");
        return TruncatedSeries(std::vector<C>(c_.begin(), c_.begin() + new_order));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<C> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(a.c_[i] + b.c_[i]);
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<C> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(a.c_[i] - b.c_[i]);
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<C> v(n, SeriesRing<C>::zero_like(a.c_[0]));
        for (std::size_t i = 0; i < n; ++i) {
            if (SeriesRing<C>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return TruncatedSeries(std::move(v));
    }

    TruncatedSeries scaled(const C& s) const {
        std::vector<C> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(x * s);
        return TruncatedSeries(std::move(v));
    }

    /// Multiplicative inverse modulo w^N; the constant term must be invertible.
    TruncatedSeries invert() const {
        const C inv0 = SeriesRing<C>::invert(c_[0]);
        std::vector<C> b(c_.size(), SeriesRing<C>::zero_like(c_[0]));
        b[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            C acc = SeriesRing<C>::zero_like(c_[0]);
            for (std::size_t k = 1; k <= n; ++k) acc = acc + c_[k] * b[n - k];
            b[n] = SeriesRing<C>::zero_like(c_[0]) - inv0 * acc;
        }
        return TruncatedSeries(std::move(b));
    }

    /// Divide by w^k; the first k coefficients must vanish. Order drops by k.
    TruncatedSeries shifted_down(std::size_t k) const {
        if (k >= c_.size()) throw Error("shifted_down: order too small");
        for (std::size_t i = 0; i < k; ++i)
            if (!SeriesRing<C>::is_zero(c_[i]))
                throw Error("shifted_down: low-order coefficient is nonzero");
        return TruncatedSeries(std::vector<C>(c_.begin() + k, c_.end()));
    }

private:
    std::vector<C> c_;
};

inline TruncatedSeries<Rational> series_invert(const TruncatedSeries<Rational>& a) { return a.invert(); }
inline TruncatedSeries<MultiPoly> series_invert(const TruncatedSeries<MultiPoly>& a) { return a.invert(); }
inline TruncatedSeries<RationalFunction> series_invert(const TruncatedSeries<RationalFunction>& a) { return a.invert(); }

/// Sum w^m/m! to the given order (the formal exponential).
inline TruncatedSeries<Rational> exp_w_series(std::size_t order) {
    std::vector<Rational> c(order);
    for (std::size_t m = 0; m < order; ++m) c[m] = Rational(factorial(static_cast<unsigned>(m))).inverse();
    return TruncatedSeries<Rational>(std::move(c));
}

/// exp of a series with zero constant term, via sum s^j/j!.
inline TruncatedSeries<Rational> series_exp(const TruncatedSeries<Rational>& s) {
    if (!s[0].is_zero()) throw Error("series_exp: constant term must vanish");
    const std::size_t n = s.order();
    TruncatedSeries<Rational> acc = TruncatedSeries<Rational>::constant(Rational(1), n);
    TruncatedSeries<Rational> p = TruncatedSeries<Rational>::constant(Rational(1), n);
    for (std::size_t j = 1; j < n; ++j) {
        p = p * s;
        acc = acc + p.scaled(Rational(factorial(static_cast<unsigned>(j))).inverse());
    }
    return acc;
}

}  // namespace cyclaudit
