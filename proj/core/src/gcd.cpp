#include "cycleforge/resultants/gcd.hpp"

#include <algorithm>

namespace cycleforge {

namespace {

QPoly one_in(const VarList& v) { return QPoly::constant(Rational(1), v); }


} // namespace

QPoly pseudo_remainder(const QPoly& a, const QPoly& b, const std::string& var) {
    unsigned db = b.degree_in(var).value();
    QPoly lb = b.leading_coeff_in(var);
    QPoly x = QPoly::variable(var, a.vars());
    QPoly r = a.with_vars(x.vars());
    while (!r.is_zero() && r.degree_in(var).value() >= db) {
        unsigned dr = r.degree_in(var).value();
        QPoly lr = r.leading_coeff_in(var);
        r = lb * r - lr * x.pow(dr - db) * b;
    }
    return r;
}

QPoly content_in(const QPoly& p, const std::string& var) {
    auto coeffs = p.coefficients_in(var);
    QPoly g(p.vars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = multivariate_gcd(g, c);
        if (g.is_constant()) return one_in(p.vars());
    }
    return g.is_zero() ? one_in(p.vars()) : g;
}

QPoly primitive_part_in(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return p;
    return p.exact_quotient(content_in(p, var));
}

QPoly multivariate_gcd(const QPoly& p0, const QPoly& q0) {
    VarList vars = union_vars(p0.vars(), q0.vars());
    QPoly p = p0.with_vars(vars), q = q0.with_vars(vars);
    if (p.is_zero()) return unit_normal(q);
    if (q.is_zero()) return unit_normal(p);
    if (p.is_constant() || q.is_constant()) return one_in(vars);
    auto vp = p.used_variables(), vq = q.used_variables();
    // a variable present in only one argument cannot occur in the gcd
    for (const auto& v : vp)
        if (std::find(vq.begin(), vq.end(), v) == vq.end()) return multivariate_gcd(content_in(p, v), q);
    for (const auto& v : vq)
        if (std::find(vp.begin(), vp.end(), v) == vp.end()) return multivariate_gcd(p, content_in(q, v));
    std::string var = vp[0];
    unsigned best = ~0u;
    for (const auto& v : vp) {
        unsigned d = std::max(p.degree_in(v).value(), q.degree_in(v).value());
        if (d < best) {
            best = d;
            var = v;
        }
    }
    QPoly cp = content_in(p, var), cq = content_in(q, var);
    QPoly a = p.exact_quotient(cp), b = q.exact_quotient(cq);
    QPoly c = multivariate_gcd(cp, cq);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    QPoly g;
    while (true) {
        QPoly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) {
            g = b;
            break;
        }
        if (r.degree_in(var).value() == 0) {
            g = one_in(vars);
            break;
        }
        a = b;
        b = primitive_part_in(r, var);
    }
    return unit_normal(c * primitive_part_in(g, var));
}

QPoly multivariate_gcd(const std::vector<QPoly>& ps) {
    QPoly g;
    for (const auto& p : ps) g = multivariate_gcd(g, p);
    return g;
}

} // namespace cycleforge
