#include "cyclaudit/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cyclaudit {

MultiPoly MultiPoly::zero(VarList vars) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    return p;
}

MultiPoly MultiPoly::constant(VarList vars, Rational c) {
    MultiPoly p = zero(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
    MultiPoly p = zero(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::from_terms(VarList vars, TermMap terms) {
    MultiPoly p = zero(std::move(vars));
    for (auto& [e, c] : terms) {
        if (e.size() != p.vars_.size())
            throw VariableMismatch("exponent vector length does not match variable list");
        if (!c.is_zero()) p.terms_.emplace(e, c);
    }
    return p;
}

std::size_t MultiPoly::var_index(std::string_view var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return i;
    throw UnknownVariable("unknown variable '" + std::string(var) + "'");
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value() on non-constant polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.begin()->first;  // graded order: leading term has max degree
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

unsigned MultiPoly::degree_in(std::string_view var) const {
    const std::size_t i = var_index(var);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading_coefficient() of zero polynomial");
    return terms_.begin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw Error("leading_exponents() of zero polynomial");
    return terms_.begin()->first;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r = MultiPoly::zero(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(vars_);
    MultiPoly r = *this;
    for (auto& [e, coef] : r.terms_) coef *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
    const std::size_t i = var_index(var);
    MultiPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(static_cast<std::int64_t>(e[i])));
    }
    return r;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
    // cache powers per variable up to the occurring degree
    std::vector<std::vector<Rational>> pows(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        unsigned maxd = 0;
        for (const auto& [e, c] : terms_) maxd = std::max(maxd, e[i]);
        if (maxd == 0) continue;
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw UnknownVariable("evaluate: variable '" + vars_[i] + "' not bound");
        pows[i].resize(maxd + 1, Rational(1));
        for (unsigned d = 1; d <= maxd; ++d) pows[i][d] = pows[i][d - 1] * it->second;
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= pows[i][e[i]];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings,
                                const VarList& target) const {
    // image of each of our variables in the target ring
    std::vector<MultiPoly> image(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) {
            if (it->second.vars() != target)
                throw VariableMismatch("substitute: binding for '" + vars_[i] +
                                       "' does not live over the target variables");
            image[i] = it->second;
        } else {
            image[i] = MultiPoly::variable(target, vars_[i]);  // UnknownVariable if absent
        }
    }
    // power cache per variable
    std::vector<std::vector<MultiPoly>> pows(vars_.size());
    MultiPoly result = MultiPoly::zero(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * image[i]);
            term = term * cache[e[i]];
        }
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::substitute_value(std::string_view var, const Rational& value) const {
    const std::size_t i = var_index(var);
    MultiPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[i] = 0;
        r.add_term(d, c * value.pow(e[i]));
    }
    return r;
}

MultiPoly MultiPoly::lifted(const VarList& superset) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(superset.begin(), superset.end(), vars_[i]);
        if (it == superset.end())
            throw VariableMismatch("lifted: variable '" + vars_[i] + "' missing from superset");
        where[i] = static_cast<std::size_t>(it - superset.begin());
    }
    MultiPoly r = zero(superset);
    for (const auto& [e, c] : terms_) {
        Exponents d(superset.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

MultiPoly MultiPoly::without_vars(const std::vector<std::string>& drop) const {
    VarList keep;
    std::vector<std::size_t> keep_idx;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), vars_[i]) == drop.end()) {
            keep.push_back(vars_[i]);
            keep_idx.push_back(i);
        } else if (degree_in(vars_[i]) > 0) {
            throw VariableMismatch("without_vars: variable '" + vars_[i] + "' still occurs");
        }
    }
    MultiPoly r = zero(std::move(keep));
    for (const auto& [e, c] : terms_) {
        Exponents d(keep_idx.size());
        for (std::size_t j = 0; j < keep_idx.size(); ++j) d[j] = e[keep_idx[j]];
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
    const std::size_t i = var_index(var);
    std::vector<MultiPoly> out(degree_in(var) + 1, zero(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        const unsigned k = d[i];
        d[i] = 0;
        out[k].add_term(d, c);
    }
    return out;
}

std::pair<Rational, MultiPoly> MultiPoly::content_primitive() const {
    if (terms_.empty()) return {Rational(0), *this};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, c.numerator());
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    }
    Rational content(num_gcd, den_lcm);
    if (leading_coefficient().sign() < 0) content = -content;
    return {content, scaled(content.inverse())};
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Rational a = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars())
        throw VariableMismatch("operation on polynomials over different variable lists");
}

namespace {

// Univariate view in one main variable with MultiPoly coefficients.
std::vector<MultiPoly> univar_coeffs(const MultiPoly& p, const std::string& v) {
    return p.coefficients_in(v);
}

MultiPoly from_univar(const std::vector<MultiPoly>& cs, const std::string& v, const VarList& vars) {
    MultiPoly x = MultiPoly::variable(vars, v);
    MultiPoly r = MultiPoly::zero(vars);
    MultiPoly xp = MultiPoly::constant(vars, Rational(1));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) xp = xp * x;
        if (!cs[i].is_zero()) r += cs[i] * xp;
    }
    return r;
}

int deg_univar(const std::vector<MultiPoly>& cs) {
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        if (!cs[i].is_zero()) return i;
    return -1;
}

// Content of p with respect to v: gcd of the v-coefficients.
MultiPoly content_wrt(const MultiPoly& p, const std::string& v) {
    MultiPoly g = MultiPoly::zero(p.vars());
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coefficient().inverse());
}

// Strip rational content and the polynomial content w.r.t. v.
MultiPoly primitive_wrt(const MultiPoly& p, const std::string& v) {
    if (p.is_zero()) return p;
    MultiPoly q = p.content_primitive().second;
    MultiPoly cont = content_wrt(q, v);
    if (!cont.is_constant()) q = divide_exact(q, cont);
    return q.content_primitive().second;
}

// Pseudo-remainder of a by b in the variable v (deg_v a >= deg_v b >= 0).
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, const std::string& v) {
    std::vector<MultiPoly> A = univar_coeffs(a, v);
    const std::vector<MultiPoly> B = univar_coeffs(b, v);
    const int db = deg_univar(B);
    const MultiPoly& lcb = B[static_cast<std::size_t>(db)];
    int da = deg_univar(A);
    while (da >= db && da >= 0) {
        MultiPoly lca = A[static_cast<std::size_t>(da)];
        // A := lcb*A - lca*v^(da-db)*B
        for (auto& c : A) c = c * lcb;
        for (int i = 0; i <= db; ++i)
            A[static_cast<std::size_t>(da - db + i)] -= lca * B[static_cast<std::size_t>(i)];
        int nd = -1;
        for (int i = da; i >= 0; --i)
            if (!A[static_cast<std::size_t>(i)].is_zero()) { nd = i; break; }
        da = nd;
    }
    A.resize(static_cast<std::size_t>(std::max(da + 1, 0)));
    return from_univar(A, v, a.vars());
}

// minimal exponent vector over all terms (the monomial content)
Exponents min_exponents(const MultiPoly& p) {
    Exponents m = p.leading_exponents();
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

MultiPoly shift_down(const MultiPoly& p, const Exponents& m) {
    MultiPoly::TermMap shifted;
    for (const auto& [e, c] : p.terms()) {
        Exponents d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) d[i] = e[i] - m[i];
        shifted.emplace(std::move(d), c);
    }
    return MultiPoly::from_terms(p.vars(), std::move(shifted));
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a == b) return monic(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.vars(), Rational(1));

    // split off the monomial content: gcd(Ma A, Mb B) = gcd(Ma, Mb) gcd(A, B)
    // with A, B having zero minimal exponent in every variable
    const Exponents ma = min_exponents(a), mb = min_exponents(b);
    Exponents common(ma.size());
    bool have_mono = false, stripped = false;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        common[i] = std::min(ma[i], mb[i]);
        have_mono |= common[i] > 0;
        stripped |= ma[i] > 0 || mb[i] > 0;
    }
    if (stripped) {
        const MultiPoly mono =
            MultiPoly::from_terms(a.vars(), {{common, Rational(1)}});
        const MultiPoly inner = poly_gcd(shift_down(a, ma), shift_down(b, mb));
        return have_mono ? monic(mono * inner) : monic(inner);
    }

    // common divisors only involve variables shared by both supports; shrink
    // each operand to its content with respect to its private variables first
    const VarList& vars = a.vars();
    std::vector<bool> in_a(vars.size()), in_b(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        in_a[i] = a.degree_in(vars[i]) > 0;
        in_b[i] = b.degree_in(vars[i]) > 0;
    }
    auto shrink_to_shared = [&](const MultiPoly& p, const std::vector<bool>& mine,
                                const std::vector<bool>& theirs) {
        bool has_private = false;
        for (std::size_t i = 0; i < vars.size(); ++i) has_private |= mine[i] && !theirs[i];
        if (!has_private) return p;
        // group terms by the exponents of the private variables; the gcd of
        // the groups is the shared-variable content
        std::map<Exponents, MultiPoly::TermMap, GradedLexGreater> groups;
        for (const auto& [e, c] : p.terms()) {
            Exponents key(e.size(), 0), rest = e;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (mine[i] && !theirs[i]) {
                    key[i] = e[i];
                    rest[i] = 0;
                }
            }
            groups[key].emplace(std::move(rest), c);
        }
        MultiPoly g = MultiPoly::zero(vars);
        for (auto& [key, terms] : groups) {
            g = poly_gcd(g, MultiPoly::from_terms(vars, std::move(terms)));
            if (g.is_constant() && !g.is_zero()) break;
        }
        return g;
    };
    const MultiPoly sa = shrink_to_shared(a, in_a, in_b);
    const MultiPoly sb = shrink_to_shared(b, in_b, in_a);
    if (sa.is_constant() || sb.is_constant()) return MultiPoly::constant(vars, Rational(1));
    if (sa != a || sb != b) return poly_gcd(sa, sb);

    // main variable: the last one occurring in both
    std::string v;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (a.degree_in(*it) > 0 && b.degree_in(*it) > 0) {
            v = *it;
            break;
        }
    }
    if (v.empty()) return MultiPoly::constant(vars, Rational(1));

    const MultiPoly ca = content_wrt(a, v);
    const MultiPoly cb = content_wrt(b, v);
    const MultiPoly cg = poly_gcd(ca, cb);

    MultiPoly pa = primitive_wrt(a, v);
    MultiPoly pb = primitive_wrt(b, v);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_wrt(r, v);
    }
    if (pa.degree_in(v) == 0) return monic(cg);
    return monic(cg * primitive_wrt(pa, v));
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    if (b.is_zero()) throw ZeroDenominator("divide_exact by zero polynomial");
    MultiPoly q = MultiPoly::zero(a.vars());
    MultiPoly r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents d(lr.size());
        for (std::size_t i = 0; i < lr.size(); ++i) {
            if (lr[i] < lb[i]) throw Error("divide_exact: not divisible");
            d[i] = lr[i] - lb[i];
        }
        MultiPoly t = MultiPoly::from_terms(a.vars(), {{d, r.leading_coefficient() / cb}});
        q += t;
        r -= t * b;
    }
    return q;
}

MultiPoly generalized_binomial(const MultiPoly& u, unsigned k) {
    MultiPoly prod = MultiPoly::constant(u.vars(), Rational(1));
    for (unsigned i = 0; i < k; ++i)
        prod = prod * (u - MultiPoly::constant(u.vars(), Rational(static_cast<std::int64_t>(i))));
    return prod.scaled(Rational(factorial(k)).inverse());
}

}  // namespace cyclaudit
