#include "cycleforge/resultants/linear_factors.hpp"
#include "cycleforge/resultants/roots.hpp"

#include <functional>
#include <numeric>
#include <random>

namespace cycleforge {

QPoly LinearFactorization::reassemble() const {
    QPoly r = remainder;
    for (const auto& f : factors) r = r * f.form.pow(f.multiplicity);
    return r;
}

namespace {

using Point = std::map<std::string, Rational>;

Point random_point(const std::vector<std::string>& vars, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-97, 97);
    Point r;
    for (const auto& v : vars) {
        int x = 0;
        while (x == 0) x = d(rng);
        r[v] = Rational(x);
    }
    return r;
}

// p restricted to the line through r parallel to the axis of vars[k]
UPoly restrict_to_line(const QPoly& p, const std::vector<std::string>& vars, std::size_t k, const Point& r) {
    Point b;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (i != k) b[vars[i]] = r.at(vars[i]);
    return UPoly::from(p.evaluate(b));
}

bool is_primitive(const std::vector<long>& c) {
    long g = 0;
    for (long x : c) g = std::gcd(g, std::labs(x));
    return g == 1;
}

void enumerate_tail(std::vector<long>& c, std::size_t i, int bound, const std::function<void()>& f) {
    if (i == c.size()) {
        f();
        return;
    }
    for (long v = -bound; v <= bound; ++v) {
        c[i] = v;
        enumerate_tail(c, i + 1, bound, f);
    }
    c[i] = 0;
}

} // namespace

LinearFactorization extract_linear_factors(const QPoly& p, int coeff_bound) {
    LinearFactorization out;
    out.remainder = p;
    if (p.is_zero() || p.is_constant()) return out;
    std::vector<std::string> vars = p.used_variables();
    std::size_t n = vars.size();
    std::mt19937 rng(0x5eed);

    for (std::size_t k = 0; k < n; ++k) {
        if (out.remainder.is_constant()) break;
        Point r, r2;
        UPoly q, q2;
        for (int attempt = 0; attempt < 64; ++attempt) {
            r = random_point(vars, rng);
            r2 = random_point(vars, rng);
            q = restrict_to_line(out.remainder, vars, k, r);
            q2 = restrict_to_line(out.remainder, vars, k, r2);
            if (!q.is_zero() && !q2.is_zero()) break;
        }
        if (q.is_zero() || q2.is_zero()) continue;
        auto roots = small_rational_roots(q, coeff_bound);
        std::vector<long> c(n + 1, 0);  // c[0] constant, c[i + 1] for vars[i]
        for (const auto& t : roots) {
            for (long ck = 1; ck <= coeff_bound; ++ck) {
                c[k + 1] = ck;
                std::vector<long> tail(n - k - 1, 0);
                enumerate_tail(tail, 0, coeff_bound, [&] {
                    Rational s = Rational(ck) * t;
                    for (std::size_t i = 0; i < tail.size(); ++i) s += Rational(tail[i]) * r.at(vars[k + 1 + i]);
                    if (!s.is_integer()) return;
                    Rational c0 = -s;
                    if (c0.abs() > Rational(coeff_bound)) return;
                    c[0] = c0.num().get_si();
                    for (std::size_t i = 0; i < tail.size(); ++i) c[k + 2 + i] = tail[i];
                    if (!is_primitive(c)) return;
                    Rational s2 = Rational(c[0]);
                    for (std::size_t i = 0; i < tail.size(); ++i) s2 += Rational(tail[i]) * r2.at(vars[k + 1 + i]);
                    if (q2.sign_at(-s2 / Rational(ck)) != 0) return;
                    QPoly form = QPoly::constant(Rational(c[0]), p.vars());
                    for (std::size_t i = k; i < n; ++i)
                        if (c[i + 1] != 0) form += QPoly::variable(vars[i], p.vars()).scale(Rational(c[i + 1]));
                    unsigned mult = 0;
                    while (true) {
                        auto d = out.remainder.divide_exact(form);
                        if (!d) break;
                        out.remainder = *d;
                        ++mult;
                    }
                    if (mult == 0) return;
                    for (auto& f : out.factors)
                        if (f.form == form) {
                            f.multiplicity += mult;
                            return;
                        }
                    out.factors.push_back({form, mult});
                });
            }
        }
    }
    return out;
}

} // namespace cycleforge
