#pragma once

#include "cycleforge/exactalg/monomial.hpp"
#include "cycleforge/exactalg/quadext.hpp"
#include "cycleforge/exactalg/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cycleforge {

template <class K>
class Poly {
public:
    using Scalar = K;
    using Term = std::pair<Monomial, K>;

    Poly() : vars_(empty_vars()) {}
    explicit Poly(VarList vars) : vars_(vars ? std::move(vars) : empty_vars()) {}
    Poly(const K& c, VarList vars) : Poly(std::move(vars)) {
        if (!c.is_zero()) terms_.push_back({Monomial{}, c});
    }

    static Poly constant(const K& c, VarList vars = nullptr) { return Poly(c, std::move(vars)); }

    static Poly variable(const std::string& name, VarList vars = nullptr) {
        if (!vars) vars = make_vars({name});
        int i = var_index(vars, name);
        if (i < 0) {
            auto names = *vars;
            names.push_back(name);
            vars = make_vars(std::move(names));
            i = static_cast<int>(vars->size()) - 1;
        }
        Poly p(vars);
        Monomial m;
        m.set(static_cast<std::size_t>(i), 1);
        p.terms_.push_back({m, K(1)});
        return p;
    }

    // Build from arbitrary terms; duplicates are summed, zeros dropped.
    static Poly from_terms(VarList vars, std::vector<Term> terms) {
        Poly p(std::move(vars));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        p.terms_ = std::move(terms);
        p.compact();
        return p;
    }

    const VarList& vars() const { return vars_; }
    const std::vector<std::string>& var_names() const { return *vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }
    K constant_value() const {
        if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
        return terms_.empty() ? K(0) : terms_[0].second;
    }
    K constant_term() const {
        if (!terms_.empty() && terms_.back().first.deg == 0) return terms_.back().second;
        return K(0);
    }
    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.front();
    }

    Degree degree() const {
        return terms_.empty() ? Degree::neg_infinity() : Degree::of(terms_.front().first.deg);
    }

    Degree degree_in(const std::string& var) const {
        int i = var_index(vars_, var);
        if (terms_.empty()) return Degree::neg_infinity();
        if (i < 0) return Degree::of(0);
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[static_cast<std::size_t>(i)]);
        return Degree::of(d);
    }

    // total degree restricted to the listed variables
    Degree degree_in(const std::vector<std::string>& vs) const {
        if (terms_.empty()) return Degree::neg_infinity();
        auto idx = indices(vs);
        unsigned d = 0;
        for (const auto& t : terms_) {
            unsigned s = 0;
            for (auto i : idx) s += t.first[i];
            d = std::max(d, s);
        }
        return Degree::of(d);
    }

    bool contains(const std::string& var) const {
        int i = var_index(vars_, var);
        if (i < 0) return false;
        for (const auto& t : terms_)
            if (t.first[static_cast<std::size_t>(i)] > 0) return true;
        return false;
    }

    std::vector<std::string> used_variables() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < vars_->size(); ++i)
            for (const auto& t : terms_)
                if (t.first[i] > 0) {
                    out.push_back((*vars_)[i]);
                    break;
                }
        return out;
    }

    // Re-express over another variable list containing every used variable.
    Poly with_vars(const VarList& target) const {
        if (same_vars(vars_, target)) {
            Poly p = *this;
            p.vars_ = target;
            return p;
        }
        std::vector<int> map(vars_->size(), -1);
        for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = var_index(target, (*vars_)[i]);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                if (t.first[i] == 0) continue;
                if (map[i] < 0) throw std::invalid_argument("variable " + (*vars_)[i] + " missing in target ring");
                m.set(static_cast<std::size_t>(map[i]), t.first[i]);
            }
            out.push_back({m, t.second});
        }
        return from_terms(target, std::move(out));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (!same_vars(a.vars_, b.vars_)) {
            VarList u = union_vars(a.vars_, b.vars_);
            return a.with_vars(u) * b.with_vars(u);
        }
        Poly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
        if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                auto [it, fresh] = acc.try_emplace(s.first * t.first, s.second);
                if (fresh)
                    it->second *= t.second;
                else
                    it->second += s.second * t.second;
            }
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) r.terms_.push_back({kv.first, std::move(kv.second)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const K& c, const Poly& p) { return p.scale(c); }
    friend Poly operator*(const Poly& p, const K& c) { return p.scale(c); }

    Poly scale(const K& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    Poly mul_term(const Monomial& m, const K& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = Poly::constant(K(1), vars_), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (same_vars(a.vars_, b.vars_)) return a.terms_ == b.terms_;
        return (a - b).is_zero();
    }

    Poly derivative(const std::string& var) const {
        int i = var_index(vars_, var);
        if (i < 0) throw std::invalid_argument("unknown variable '" + var + "'");
        auto iu = static_cast<std::size_t>(i);
        std::vector<Term> out;
        for (const auto& t : terms_) {
            auto e = t.first[iu];
            if (e == 0) continue;
            Monomial m = t.first;
            m.set(iu, static_cast<std::uint16_t>(e - 1));
            out.push_back({m, t.second * K(static_cast<long>(e))});
        }
        return from_terms(vars_, std::move(out));
    }

    // Partial evaluation; unbound variables stay symbolic. The variable list is unchanged.
    Poly evaluate(const std::map<std::string, K>& bindings) const {
        std::vector<std::pair<std::size_t, K>> b;
        for (const auto& [name, val] : bindings) {
            int i = var_index(vars_, name);
            if (i >= 0) b.push_back({static_cast<std::size_t>(i), val});
        }
        if (b.empty()) return *this;
        std::vector<std::vector<K>> powers(b.size());
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            K c = t.second;
            Monomial m = t.first;
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto e = m[b[j].first];
                if (e == 0) continue;
                auto& pw = powers[j];
                if (pw.empty()) pw.push_back(K(1));
                while (pw.size() <= e) pw.push_back(pw.back() * b[j].second);
                c *= pw[e];
                m.set(b[j].first, 0);
            }
            out.push_back({m, c});
        }
        return from_terms(vars_, std::move(out));
    }

    K evaluate_all(const std::map<std::string, K>& bindings) const {
        Poly r = evaluate(bindings);
        if (!r.is_constant()) throw std::invalid_argument("unbound variables remain in " + r.to_string());
        return r.constant_value();
    }

    // Simultaneous substitution of polynomials for variables.
    Poly substitute(const std::map<std::string, Poly>& images) const {
        VarList target = vars_;
        for (const auto& [name, img] : images) target = union_vars(target, img.vars_);
        std::vector<std::pair<std::size_t, Poly>> sub;
        for (const auto& [name, img] : images) {
            int i = var_index(vars_, name);
            if (i >= 0) sub.push_back({static_cast<std::size_t>(i), img.with_vars(target)});
        }
        Poly base = with_vars(target);
        if (sub.empty()) return base;
        std::vector<std::vector<Poly>> powers(sub.size());
        // group terms by the substituted part so each power product is formed once
        std::map<std::vector<std::uint16_t>, std::vector<Term>> by_key;
        for (const auto& t : base.terms_) {
            std::vector<std::uint16_t> key(sub.size());
            Monomial rest = t.first;
            for (std::size_t j = 0; j < sub.size(); ++j) {
                key[j] = rest[sub[j].first];
                rest.set(sub[j].first, 0);
            }
            by_key[key].push_back({rest, t.second});
        }
        Poly result(target);
        for (auto& [key, rest_terms] : by_key) {
            Poly prod = Poly::constant(K(1), target);
            for (std::size_t j = 0; j < sub.size(); ++j) {
                auto e = key[j];
                if (e == 0) continue;
                auto& pw = powers[j];
                if (pw.empty()) pw.push_back(Poly::constant(K(1), target));
                while (pw.size() <= e) pw.push_back(pw.back() * sub[j].second);
                prod *= pw[e];
            }
            result += prod * from_terms(target, std::move(rest_terms));
        }
        return result;
    }

    // Coefficients with respect to var: result[i] multiplies var^i.
    std::vector<Poly> coefficients_in(const std::string& var) const {
        int i = var_index(vars_, var);
        if (i < 0) return {*this};
        auto iu = static_cast<std::size_t>(i);
        unsigned d = is_zero() ? 0 : degree_in(var).value();
        std::vector<std::vector<Term>> parts(d + 1);
        for (const auto& t : terms_) {
            Monomial m = t.first;
            auto e = m[iu];
            m.set(iu, 0);
            parts[e].push_back({m, t.second});
        }
        std::vector<Poly> out;
        out.reserve(d + 1);
        for (auto& p : parts) out.push_back(from_terms(vars_, std::move(p)));
        return out;
    }

    Poly leading_coeff_in(const std::string& var) const {
        auto c = coefficients_in(var);
        return c.back();
    }

    static Poly assemble(const VarList& vars, const std::string& var, const std::vector<Poly>& coeffs) {
        Poly x = variable(var, vars);
        Poly r(x.vars_);
        Poly xp = Poly::constant(K(1), x.vars_);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k) xp *= x;
            r += coeffs[k] * xp;
        }
        return r;
    }

    // Terms whose exponents in vs equal exps, with those exponents cleared.
    Poly extract(const std::vector<std::string>& vs, const std::vector<unsigned>& exps) const {
        auto idx = indices(vs);
        std::vector<Term> out;
        for (const auto& t : terms_) {
            bool ok = true;
            for (std::size_t j = 0; j < idx.size() && ok; ++j)
                if (t.first[idx[j]] != exps[j]) ok = false;
            if (!ok) continue;
            Monomial m = t.first;
            for (auto i : idx) m.set(i, 0);
            out.push_back({m, t.second});
        }
        return from_terms(vars_, std::move(out));
    }

    // Drop terms whose total degree in vs exceeds max_deg.
    Poly truncate_degree_in(const std::vector<std::string>& vs, unsigned max_deg) const {
        auto idx = indices(vs);
        Poly r(vars_);
        for (const auto& t : terms_) {
            unsigned s = 0;
            for (auto i : idx) s += t.first[i];
            if (s <= max_deg) r.terms_.push_back(t);
        }
        return r;
    }

    // Exact division; nullopt when d does not divide *this.
    std::optional<Poly> divide_exact(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (!same_vars(vars_, d.vars_)) {
            VarList u = union_vars(vars_, d.vars_);
            return with_vars(u).divide_exact(d.with_vars(u));
        }
        if (is_zero()) return Poly(vars_);
        if (d.terms_.size() == 1) {
            const auto& [dm, dc] = d.terms_[0];
            Poly q(vars_);
            q.terms_.reserve(terms_.size());
            K inv = K(1) / dc;
            for (const auto& t : terms_) {
                if (!dm.divides(t.first)) return std::nullopt;
                q.terms_.push_back({dm.quotient_of(t.first), t.second * inv});
            }
            return q;
        }
        const auto& [lm, lc] = d.terms_.front();
        K inv = K(1) / lc;
        std::map<Monomial, K, GrlexDesc> r;
        for (const auto& t : terms_) r.emplace_hint(r.end(), t.first, t.second);
        std::vector<Term> q;
        while (!r.empty()) {
            auto it = r.begin();
            if (!lm.divides(it->first)) return std::nullopt;
            if (it->first.deg < lm.deg) return std::nullopt;
            Monomial qm = lm.quotient_of(it->first);
            K qc = it->second * inv;
            r.erase(it);
            for (std::size_t j = 1; j < d.terms_.size(); ++j) {
                Monomial m = d.terms_[j].first * qm;
                K c = d.terms_[j].second * qc;
                auto [pos, fresh] = r.try_emplace(m, -c);
                if (!fresh) {
                    pos->second -= c;
                    if (pos->second.is_zero()) r.erase(pos);
                }
            }
            q.push_back({qm, qc});
        }
        Poly out(vars_);
        out.terms_ = std::move(q);
        return out;
    }

    Poly exact_quotient(const Poly& d) const {
        auto q = divide_exact(d);
        if (!q) throw std::domain_error("inexact division of " + to_string() + " by " + d.to_string());
        return *q;
    }

    template <class K2, class F>
    Poly<K2> map_coefficients(F f) const {
        std::vector<typename Poly<K2>::Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({t.first, f(t.second)});
        return Poly<K2>::from_terms(vars_, std::move(out));
    }

    std::string to_string() const;

private:
    std::vector<std::size_t> indices(const std::vector<std::string>& vs) const {
        std::vector<std::size_t> idx;
        for (const auto& v : vs) {
            int i = var_index(vars_, v);
            if (i >= 0) idx.push_back(static_cast<std::size_t>(i));
        }
        return idx;
    }

    void compact() {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!t.second.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        if (!same_vars(a.vars_, b.vars_)) {
            VarList u = union_vars(a.vars_, b.vars_);
            return merge(a.with_vars(u), b.with_vars(u), subtract);
        }
        Poly r(a.vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].first, b.terms_[j].first))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].first, a.terms_[i].first)) {
                r.terms_.push_back(b.terms_[j]);
                if (subtract) r.terms_.back().second = -r.terms_.back().second;
                ++j;
            } else {
                K c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    VarList vars_;
    std::vector<Term> terms_;
};

using QPoly = Poly<Rational>;
using QEPoly = Poly<QuadExt>;

// coefficient formatting: sign, magnitude text ("" when the magnitude is one), and whether the
// magnitude needs a following '*' before a monomial
struct CoefText {
    int sign;
    std::string magnitude;
};
CoefText coef_text(const Rational& c);
CoefText coef_text(const QuadExt& c);

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars);

template <class K>
std::string Poly<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        CoefText ct = coef_text(c);
        std::string mono = monomial_text(m, *vars_);
        std::string body;
        if (mono.empty())
            body = ct.magnitude.empty() ? "1" : ct.magnitude;
        else
            body = ct.magnitude.empty() ? mono : ct.magnitude + "*" + mono;
        if (first)
            out += (ct.sign < 0 ? "-" : "") + body;
        else
            out += (ct.sign < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

inline QEPoly to_quadext(const QPoly& p) {
    return p.map_coefficients<QuadExt>([](const Rational& r) { return QuadExt(r); });
}

// Throws when some coefficient is irrational.
QPoly to_rational(const QEPoly& p);
bool is_rational_poly(const QEPoly& p);

// Scale to a canonical associate: integer coefficients with content 1 and positive leading
// coefficient over Q; monic over Q(sqrt d).
QPoly unit_normal(const QPoly& p);
QEPoly unit_normal(const QEPoly& p);
// The rational factor c with p = c * unit_normal(p).
Rational unit_factor(const QPoly& p);

} // namespace cycleforge
