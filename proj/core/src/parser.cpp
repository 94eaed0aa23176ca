#include "cyclaudit/parser.hpp"

#include <cctype>

namespace cyclaudit {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

    MultiPoly parse() {
        skip_ws();
        if (eof()) throw SyntaxError("empty polynomial text", 0);
        MultiPoly acc = MultiPoly::zero(vars_);
        bool negate = false;
        if (peek() == '-') {  // optional leading sign
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        acc += parse_term(negate);
        skip_ws();
        while (!eof()) {
            const char op = peek();
            if (op != '+' && op != '-')
                throw SyntaxError(std::string("expected '+' or '-', found '") + op + "'", pos_);
            ++pos_;
            acc += parse_term(op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_digit() {
        skip_ws();
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool at_var_start() {
        skip_ws();
        return !eof() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
    }

    Integer parse_integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected an integer", pos_);
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return Integer(digits);
    }

    Rational parse_coefficient() {
        const Integer num = parse_integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            const std::size_t at = pos_;
            ++pos_;
            const Integer den = parse_integer();
            if (den.is_zero()) throw SyntaxError("zero denominator", at);
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string parse_var_name() {
        skip_ws();
        const std::size_t start = pos_;
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += text_[pos_++];
        if (name.empty()) throw SyntaxError("expected a variable name", start);
        for (const auto& v : vars_)
            if (v == name) return name;
        throw UnknownVariable("unknown variable '" + name + "' at offset " + std::to_string(start));
    }

    unsigned parse_exponent() {
        skip_ws();
        if (eof()) throw SyntaxError("expected an exponent after '^'", pos_);
        if (peek() == '-') throw SyntaxError("negative exponents are not polynomial", pos_);
        const Integer e = parse_integer();
        if (e > 4096) throw SyntaxError("exponent too large", pos_);
        return e.convert_to<unsigned>();
    }

    MultiPoly parse_monomial() {
        Exponents e(vars_.size(), 0);
        bool first = true;
        while (true) {
            if (!first) {
                skip_ws();
                if (!eof() && peek() == '*') {
                    ++pos_;
                    if (!at_var_start())
                        throw SyntaxError("expected a variable after '*'", pos_);
                } else if (!at_var_start()) {
                    break;
                }
            }
            const std::string name = parse_var_name();
            unsigned exp = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                exp = parse_exponent();
            }
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) e[i] += exp;
            first = false;
        }
        return MultiPoly::from_terms(vars_, {{e, Rational(1)}});
    }

    MultiPoly parse_term(bool negate) {
        skip_ws();
        if (eof()) throw SyntaxError("expected a term", pos_);
        Rational coef(1);
        bool have_coef = false;
        if (at_digit()) {
            coef = parse_coefficient();
            have_coef = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                if (!at_var_start()) throw SyntaxError("expected a variable after '*'", pos_);
            }
        }
        MultiPoly term = at_var_start() ? parse_monomial().scaled(coef)
                                        : MultiPoly::constant(vars_, coef);
        if (!have_coef && term.is_constant() && !at_var_start())
            throw SyntaxError("expected a coefficient or a variable", pos_);
        return negate ? -term : term;
    }

    std::string_view text_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarList& variables) {
    return PolyParser(text, variables).parse();
}

}  // namespace cyclaudit
