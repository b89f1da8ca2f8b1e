#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/exactalg/poly.hpp"

#include <cctype>

namespace cycleforge {

CoefText coef_text(const Rational& c) {
    Rational m = c.abs();
    return {c.sign(), m.is_one() ? std::string() : m.to_string()};
}

CoefText coef_text(const QuadExt& c) {
    if (c.is_rational()) return coef_text(c.a());
    if (c.a().is_zero()) {
        Rational m = c.b().abs();
        std::string root = "sqrt(" + std::to_string(c.radicand()) + ")";
        return {c.b().sign(), m.is_one() ? root : m.to_string() + "*" + root};
    }
    return {1, "(" + c.to_string() + ")"};
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

bool is_rational_poly(const QEPoly& p) {
    for (const auto& t : p.terms())
        if (!t.second.is_rational()) return false;
    return true;
}

QPoly to_rational(const QEPoly& p) {
    return p.map_coefficients<Rational>([](const QuadExt& q) {
        if (!q.is_rational()) throw std::domain_error("irrational coefficient " + q.to_string());
        return q.a();
    });
}

Rational unit_factor(const QPoly& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& t : p.terms()) {
        mpz_class n = t.second.num(), d = t.second.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(g, l);
    if (p.leading_term().second.sign() < 0) c = -c;
    return c;
}

QPoly unit_normal(const QPoly& p) {
    if (p.is_zero()) return p;
    return p.scale(unit_factor(p).inverse());
}

QEPoly unit_normal(const QEPoly& p) {
    if (p.is_zero()) return p;
    if (is_rational_poly(p)) return to_quadext(unit_normal(to_rational(p)));
    return p.scale(QuadExt(1) / p.leading_term().second);
}

namespace {

template <class K>
class Parser {
public:
    Parser(std::string_view text, VarList vars) : s_(text), vars_(vars ? std::move(vars) : empty_vars()) {}

    Poly<K> run() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        Poly<K> p = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return p.with_vars(vars_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool peek_pow() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') return true;
        return pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*';
    }

    Poly<K> constant(const K& c) { return Poly<K>::constant(c, vars_); }

    Poly<K> expr() {
        Poly<K> acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly<K> term() {
        Poly<K> acc = unary();
        while (true) {
            skip();
            if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') return acc;
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Poly<K> d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                acc = acc.scale(K(1) / d.constant_value());
            } else {
                return acc;
            }
        }
    }

    Poly<K> unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Poly<K> power() {
        Poly<K> base = atom();
        if (peek_pow()) {
            if (s_[pos_] == '^')
                ++pos_;
            else
                pos_ += 2;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 1000) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly<K> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<K> p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not exact; use n/m");
            return constant(K(Rational(mpz_class(std::string(s_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt") return sqrt_call(start);
            if (var_index(vars_, name) < 0) {
                auto names = *vars_;
                names.push_back(name);
                if (names.size() > kMaxVars) {
                    pos_ = start;
                    fail("too many variables");
                }
                vars_ = make_vars(std::move(names));
            }
            return Poly<K>::variable(name, vars_);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly<K> sqrt_call(std::size_t start) {
        if (!eat('(')) fail("expected '(' after sqrt");
        Poly<K> arg = expr();
        if (!eat(')')) fail("expected ')'");
        if constexpr (std::is_same_v<K, Rational>) {
            pos_ = start;
            fail("sqrt is not available over the rationals");
        } else {
            if (!arg.is_constant() || !arg.constant_value().is_rational()) {
                pos_ = start;
                fail("sqrt argument must be a rational constant");
            }
            Rational q = arg.constant_value().a();
            if (q.sign() < 0) {
                pos_ = start;
                fail("sqrt of a negative number");
            }
            return constant(QuadExt::sqrt_of(q));
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    VarList vars_;
};

} // namespace

QPoly parse_qpoly(std::string_view text, VarList vars) { return Parser<Rational>(text, std::move(vars)).run(); }
QEPoly parse_qepoly(std::string_view text, VarList vars) { return Parser<QuadExt>(text, std::move(vars)).run(); }

Rational parse_rational_expr(std::string_view text) {
    QPoly p = parse_qpoly(text);
    if (!p.is_constant()) throw std::invalid_argument("not a constant: " + std::string(text));
    return p.constant_value();
}

QuadExt parse_quadext(std::string_view text) {
    QEPoly p = parse_qepoly(text);
    if (!p.is_constant()) throw std::invalid_argument("not a constant: " + std::string(text));
    return p.constant_value();
}

} // namespace cycleforge
