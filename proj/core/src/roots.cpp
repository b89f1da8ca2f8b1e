#include "cycleforge/resultants/roots.hpp"

#include <functional>

namespace cycleforge {

UPoly UPoly::from(const QPoly& p) {
    auto used = p.used_variables();
    if (used.size() > 1) throw std::invalid_argument("not univariate: " + p.to_string());
    if (p.is_zero()) return UPoly();
    QPoly q = unit_normal(p);
    unsigned d = used.empty() ? 0 : q.degree().value();
    std::vector<mpz_class> c(d + 1, 0);
    int vi = used.empty() ? -1 : var_index(q.vars(), used[0]);
    for (const auto& [m, v] : q.terms()) {
        unsigned e = vi < 0 ? 0 : m[static_cast<std::size_t>(vi)];
        c[e] = v.num();
    }
    return UPoly(std::move(c));
}

int UPoly::sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    // b^n p(a/b) by Horner in integers
    mpz_class a = x.num(), b = x.den(), acc = c_.back(), bp = 1;
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) {
        bp *= b;
        acc = acc * a + c_[static_cast<std::size_t>(i)] * bp;
    }
    return sgn(acc);
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::primitive() const {
    if (c_.empty()) return *this;
    mpz_class g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    std::vector<mpz_class> out = c_;
    if (g > 1)
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return UPoly(std::move(out));
}

QPoly UPoly::to_qpoly(const std::string& var) const {
    auto vars = make_vars({var});
    std::vector<QPoly::Term> t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Monomial m;
        m.set(0, static_cast<std::uint16_t>(i));
        t.push_back({m, Rational(c_[i])});
    }
    return QPoly::from_terms(vars, std::move(t));
}

UPoly signed_prem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    const mpz_class& lb = b.lead();
    int steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int dr = static_cast<int>(r.size()) - 1;
        mpz_class lr = r.back();
        for (auto& v : r) v *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * bc[static_cast<std::size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
        ++steps;
    }
    UPoly out(std::move(r));
    if (lb < 0 && steps % 2 == 1) {
        std::vector<mpz_class> neg = out.coeffs();
        for (auto& v : neg) v = -v;
        out = UPoly(std::move(neg));
    }
    return out.primitive();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UPoly r = signed_prem(x, y);
        x = y;
        y = r;
    }
    if (!x.is_zero() && x.lead() < 0) {
        std::vector<mpz_class> c = x.coeffs();
        for (auto& v : c) v = -v;
        x = UPoly(std::move(c));
    }
    return x;
}

namespace {

UPoly exact_divide(const UPoly& a, const UPoly& b) {
    const auto& bc = b.coeffs();
    int db = b.degree();
    if (a.degree() < db) return UPoly();
    std::vector<mpq_class> num(a.coeffs().begin(), a.coeffs().end());
    std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree() - db; i >= 0; --i) {
        mpq_class c = num[static_cast<std::size_t>(i + db)] / mpq_class(bc.back());
        quo[static_cast<std::size_t>(i)] = c;
        for (int j = 0; j <= db; ++j) num[static_cast<std::size_t>(i + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    mpz_class l = 1;
    for (auto& v : quo) {
        v.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    for (auto& v : quo) out.push_back(mpz_class(v * l));
    return UPoly(std::move(out)).primitive();
}

} // namespace

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    UPoly g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive();
    return exact_divide(p, g);
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq{p, p.derivative().primitive()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UPoly r = signed_prem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        std::vector<mpz_class> neg = r.coeffs();
        for (auto& v : neg) v = -v;
        seq.push_back(UPoly(std::move(neg)));
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& s : seq) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

int count_roots_between(const UPoly& p, const Rational& lo, const Rational& hi) {
    auto seq = sturm_sequence(squarefree_part(p));
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

namespace {

Rational cauchy_power_of_two(const UPoly& p) {
    // 1 + max |c_i / c_n| rounded up to a power of two
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class r(abs(p.coeffs()[static_cast<std::size_t>(i)]), abs(p.lead()));
        r.canonicalize();
        if (r > m) m = r;
    }
    mpq_class b = m + 1;
    mpz_class pw = 1;
    while (pw < b) pw *= 2;
    return Rational(pw);
}

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p0) {
    if (p0.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    UPoly p = squarefree_part(p0);
    std::vector<IsolatingInterval> out;
    if (p.degree() <= 0) return out;
    auto seq = sturm_sequence(p);
    Rational bound = cauchy_power_of_two(p);
    std::function<void(const Rational&, const Rational&, int, int)> split;
    split = [&](const Rational& lo, const Rational& hi, int vlo, int vhi) {
        int n = vlo - vhi;
        if (n <= 0) return;
        if (n == 1) {
            out.push_back({lo, hi, p.sign_at(lo), p.sign_at(hi), std::nullopt});
            return;
        }
        Rational mid = (lo + hi) / Rational(2);
        if (p.sign_at(mid) != 0) {
            int vm = sign_variations(seq, mid);
            split(lo, mid, vlo, vm);
            split(mid, hi, vm, vhi);
            return;
        }
        // exact root at mid: carve out a small isolating interval around it
        Rational delta = (hi - lo) / Rational(4);
        while (true) {
            Rational a = mid - delta, b = mid + delta;
            if (p.sign_at(a) != 0 && p.sign_at(b) != 0) {
                int va = sign_variations(seq, a), vb = sign_variations(seq, b);
                if (va - vb == 1) {
                    split(lo, a, vlo, va);
                    out.push_back({a, b, p.sign_at(a), p.sign_at(b), mid});
                    split(b, hi, vb, vhi);
                    return;
                }
            }
            delta /= Rational(2);
        }
    };
    split(-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const QPoly& p) { return isolate_real_roots(UPoly::from(p)); }

IsolatingInterval refine(const UPoly& p0, IsolatingInterval iv, const Rational& width) {
    UPoly p = squarefree_part(p0);
    while (iv.hi - iv.lo > width) {
        if (iv.exact) {
            Rational w = (iv.hi - iv.lo) / Rational(4);
            iv.lo = *iv.exact - w;
            iv.hi = *iv.exact + w;
            iv.sign_lo = p.sign_at(iv.lo);
            iv.sign_hi = p.sign_at(iv.hi);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        int s = p.sign_at(mid);
        if (s == 0) {
            iv.exact = mid;
            continue;
        }
        if (s == iv.sign_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    if (iv.exact && (iv.sign_lo == 0 || iv.sign_hi == 0)) {
        iv.sign_lo = p.sign_at(iv.lo);
        iv.sign_hi = p.sign_at(iv.hi);
    }
    return iv;
}

IsolatingInterval refine(const QPoly& p, IsolatingInterval iv, const Rational& width) {
    return refine(UPoly::from(p), std::move(iv), width);
}

std::optional<Rational> rational_root(const UPoly& p, IsolatingInterval& iv) {
    if (iv.exact) return iv.exact;
    for (unsigned bits = 8; bits <= 64; bits += 8) {
        iv = refine(p, iv, Rational(mpz_class(1), mpz_class(1) << bits));
        if (iv.exact) return iv.exact;
        Rational s = simplest_between(iv.lo, iv.hi);
        if (p.sign_at(s) == 0) {
            iv.exact = s;
            return s;
        }
    }
    return std::nullopt;
}

std::vector<Rational> small_rational_roots(const UPoly& p, long max_den) {
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    Rational w(1, 2 * max_den * max_den);
    for (auto iv : isolate_real_roots(p)) {
        if (iv.exact) {
            if (iv.exact->den() <= max_den) out.push_back(*iv.exact);
            continue;
        }
        iv = refine(p, iv, w);
        if (iv.exact) {
            if (iv.exact->den() <= max_den) out.push_back(*iv.exact);
            continue;
        }
        for (long c = 1; c <= max_den; ++c) {
            mpz_class a, b;
            mpz_class lc = iv.lo.num() * c, hc = iv.hi.num() * c;
            mpz_cdiv_q(a.get_mpz_t(), lc.get_mpz_t(), iv.lo.den().get_mpz_t());
            mpz_fdiv_q(b.get_mpz_t(), hc.get_mpz_t(), iv.hi.den().get_mpz_t());
            bool found = false;
            for (mpz_class k = a; k <= b; ++k) {
                Rational cand(k, mpz_class(c));
                if (p.sign_at(cand) == 0) {
                    out.push_back(cand);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return out;
}

int sign_at(const QEPoly& f, const Rational& x) {
    auto vars = f.used_variables();
    if (vars.empty()) return f.is_zero() ? 0 : f.constant_value().sign();
    return f.evaluate({{vars[0], QuadExt(x)}}).constant_value().sign();
}

std::vector<IsolatingInterval> isolate_real_roots(const QEPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (is_rational_poly(f)) return isolate_real_roots(to_rational(f));
    auto vars = f.used_variables();
    if (vars.size() > 1) throw std::invalid_argument("not univariate: " + f.to_string());
    long d = 0;
    for (const auto& t : f.terms())
        if (!t.second.is_rational()) d = t.second.radicand();
    QPoly a = f.map_coefficients<Rational>([](const QuadExt& q) { return q.a(); });
    QPoly b = f.map_coefficients<Rational>([](const QuadExt& q) { return q.b(); });
    QPoly norm = a * a - b * b * Rational(d);
    std::vector<IsolatingInterval> out;
    if (norm.is_zero()) return out;
    UPoly n = UPoly::from(norm);
    for (auto iv : isolate_real_roots(n)) {
        if (iv.exact) {
            if (sign_at(f, *iv.exact) == 0) {
                iv.sign_lo = sign_at(f, iv.lo);
                iv.sign_hi = sign_at(f, iv.hi);
                out.push_back(iv);
            }
            continue;
        }
        int sl = sign_at(f, iv.lo), sh = sign_at(f, iv.hi);
        if (sl != 0 && sh != 0 && sl != sh) {
            iv.sign_lo = sl;
            iv.sign_hi = sh;
            out.push_back(iv);
        }
    }
    return out;
}

} // namespace cycleforge
