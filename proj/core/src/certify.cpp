#include "cycleforge/centers/certify.hpp"
#include "cycleforge/exactalg/matrix.hpp"
#include "cycleforge/lyapunov/normalize.hpp"
#include "cycleforge/resultants/gcd.hpp"
#include "cycleforge/resultants/resultant.hpp"
#include "cycleforge/resultants/roots.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cycleforge {

const char* to_string(SymmetryLine l) {
    switch (l) {
    case SymmetryLine::x_zero: return "x=0";
    case SymmetryLine::y_zero: return "y=0";
    case SymmetryLine::y_eq_x: return "y=x";
    case SymmetryLine::y_eq_minus_x: return "y=-x";
    }
    return "?";
}

const char* to_string(CenterCertificate::Kind k) {
    switch (k) {
    case CenterCertificate::Kind::reversible: return "reversible";
    case CenterCertificate::Kind::darboux: return "darboux";
    case CenterCertificate::Kind::separable: return "separable";
    case CenterCertificate::Kind::none: return "none";
    }
    return "?";
}

namespace {

const std::vector<std::string> kXY{"x", "y"};

QPoly swap_xy(const QPoly& p, int sx, int sy, bool transpose) {
    QPoly x = QPoly::variable("x", p.vars()), y = QPoly::variable("y", p.vars());
    QPoly X = transpose ? y : x, Y = transpose ? x : y;
    return p.substitute({{"x", sx < 0 ? -X : X}, {"y", sy < 0 ? -Y : Y}});
}

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> out;
    if (p.is_zero() || p.is_constant()) return out;
    UPoly u = UPoly::from(p);
    for (auto iv : isolate_real_roots(u))
        if (auto r = rational_root(u, iv)) out.push_back(*r);
    return out;
}

QPoly common_gcd(const std::vector<QPoly>& ps) {
    QPoly g;
    for (const auto& p : ps) g = multivariate_gcd(g, p);
    return g;
}

// Coefficients of p as a polynomial in var.
std::vector<QPoly> nonzero_coefficients(const QPoly& p, const std::string& var) {
    std::vector<QPoly> out;
    for (auto& c : p.coefficients_in(var))
        if (!c.is_zero()) out.push_back(c);
    return out;
}

// Solutions (v, w) of a system in two variables, v first; requires finitely many v values.
std::vector<std::pair<Rational, Rational>> solve_pair(const std::vector<QPoly>& eqs, const std::string& v,
                                                      const std::string& w) {
    std::vector<std::pair<Rational, Rational>> out;
    if (eqs.empty()) return out;
    QPoly first;
    for (const auto& e : eqs)
        if (e.contains(w)) {
            first = e;
            break;
        }
    std::vector<QPoly> elim;
    if (first.is_zero()) {
        elim = eqs;
    } else {
        for (const auto& e : eqs) {
            if (e == first) continue;
            QPoly r = e.contains(w) ? resultant(first, e, w) : e;
            if (!r.is_zero()) elim.push_back(r);
        }
        // also the leading coefficient branch of the first equation
    }
    QPoly gv = common_gcd(elim);
    std::set<std::string> seen;
    std::vector<Rational> vs;
    if (gv.is_zero() || gv.contains(w)) return out;
    vs = rational_roots(gv);
    for (const auto& vv : vs) {
        std::vector<QPoly> uni;
        for (const auto& e : eqs) uni.push_back(e.evaluate({{v, vv}}));
        QPoly gw = common_gcd(uni);
        if (gw.is_zero()) continue;
        for (const auto& ww : rational_roots(gw)) out.push_back({vv, ww});
    }
    return out;
}

} // namespace

bool reversible_in(const VectorField& vf, SymmetryLine line) {
    const QPoly &P = vf.P, &Q = vf.Q;
    switch (line) {
    case SymmetryLine::x_zero: return P == swap_xy(P, -1, 1, false) && Q == -swap_xy(Q, -1, 1, false);
    case SymmetryLine::y_zero: return P == -swap_xy(P, 1, -1, false) && Q == swap_xy(Q, 1, -1, false);
    case SymmetryLine::y_eq_x: return P == -swap_xy(Q, 1, 1, true) && Q == -swap_xy(P, 1, 1, true);
    case SymmetryLine::y_eq_minus_x: return P == swap_xy(Q, -1, -1, true) && Q == swap_xy(P, -1, -1, true);
    }
    return false;
}

std::vector<SymmetryLine> reversibility(const VectorField& vf) {
    std::vector<SymmetryLine> out;
    for (auto l : {SymmetryLine::x_zero, SymmetryLine::y_zero, SymmetryLine::y_eq_x, SymmetryLine::y_eq_minus_x})
        if (reversible_in(vf, l)) out.push_back(l);
    return out;
}

std::optional<QPoly> cofactor(const VectorField& vf, const QPoly& F) {
    if (F.is_zero()) throw std::invalid_argument("cofactor of the zero polynomial");
    VarList ring = xy_ring({&vf.P, &F});
    QPoly Fr = F.with_vars(ring);
    QPoly lhs = vf.P * Fr.derivative("x") + vf.Q * Fr.derivative("y");
    return lhs.divide_exact(Fr);
}

std::optional<CenterCertificate> darboux_search(const VectorField& vf, const std::vector<QPoly>& curves) {
    if (curves.empty()) throw std::invalid_argument("darboux_search needs at least one curve");
    std::vector<QPoly> inv, cof;
    for (const auto& c : curves) {
        if (c.is_zero() || c.is_constant()) continue;
        if (auto k = cofactor(vf, c)) {
            inv.push_back(c);
            cof.push_back(*k);
        }
    }
    QPoly div = vf.divergence();
    std::size_t n = inv.size();
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned mask : masks) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        // equations: coefficient of every monomial (all variables) of div + sum l_i K_i
        VarList ring = div.vars();
        for (auto i : idx) ring = union_vars(ring, cof[i].vars());
        std::map<Monomial, std::size_t, GrlexDesc> rows;
        QPoly d = div.with_vars(ring);
        std::vector<QPoly> K;
        for (auto i : idx) K.push_back(cof[i].with_vars(ring));
        for (const auto& t : d.terms()) rows.emplace(t.first, rows.size());
        for (const auto& k : K)
            for (const auto& t : k.terms()) rows.emplace(t.first, rows.size());
        if (rows.empty()) continue;
        Matrix<Rational> A(rows.size(), idx.size(), Rational(0));
        std::vector<QPoly> b(rows.size(), QPoly());
        for (std::size_t j = 0; j < K.size(); ++j)
            for (const auto& t : K[j].terms()) A(rows[t.first], j) = t.second;
        for (const auto& t : d.terms()) b[rows[t.first]] = QPoly::constant(-t.second);
        if (idx.empty()) {
            if (!d.is_zero()) continue;
        }
        auto sol = solve_linear_exact(A, b);
        if (sol.kind == LinearSolution<Rational>::Kind::inconsistent) continue;
        CenterCertificate cert;
        cert.kind = CenterCertificate::Kind::darboux;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Rational e = sol.x[j].is_zero() ? Rational(0) : sol.x[j].constant_value();
            cert.factors.push_back({inv[idx[j]], e, cof[idx[j]]});
        }
        cert.witness = "div X";
        for (const auto& f : cert.factors)
            cert.witness += " + (" + f.exponent.to_string() + ")*(" + f.cofactor.to_string() + ")";
        cert.witness += " = 0";
        if (cert.verify(vf)) return cert;
    }
    return std::nullopt;
}

std::optional<SeparableSplit> separable_split(const VectorField& vf) {
    auto split = [](const QPoly& p, const std::string& a, const std::string& b) -> std::optional<std::pair<QPoly, QPoly>> {
        // p = A(a) * B(b): content in a is B (times constants), the rest must be free of b
        if (p.is_zero()) return std::pair{p, QPoly::constant(Rational(1), p.vars())};
        QPoly cb = content_in(p, a);
        QPoly ra = p.exact_quotient(cb);
        if (ra.contains(b) || cb.contains(a)) return std::nullopt;
        return std::pair{ra, cb};
    };
    auto sp = split(vf.P, "x", "y");
    auto sq = split(vf.Q, "y", "x");
    if (!sp || !sq) return std::nullopt;
    return SeparableSplit{sp->first, sp->second, sq->second, sq->first};
}

bool separable_check(const VectorField& vf) { return separable_split(vf).has_value(); }

std::vector<QPoly> invariant_lines(const VectorField& vf) {
    std::vector<QPoly> out;
    VarList ring = vf.P.vars();
    auto add = [&](const QPoly& line) {
        QPoly l = line.with_vars(union_vars(ring, line.vars()));
        for (const auto& o : out)
            if (o == l) return;
        if (cofactor(vf, l)) out.push_back(l);
    };
    if (vf.f) {
        QPoly g = multivariate_gcd(*vf.f, *vf.g);
        if (!g.is_zero() && g.degree_in(kXY).value() == 1) {
            QPoly c0 = g.extract(kXY, {0, 0});
            if (c0.is_constant() && !c0.is_zero()) add(g.scale(c0.constant_value().inverse()));
        }
    }
    if (!vf.parameters().empty()) return out;

    // case u != 0: x = -(1 + v y) w with w = 1/u, condition P + v w Q = 0 along the line
    QPoly x = QPoly::variable("x", ring), y = QPoly::variable("y", ring);
    QPoly v = QPoly::variable("_v", ring), w = QPoly::variable("_w", ring);
    QPoly one = QPoly::constant(Rational(1), ring);
    QPoly X = -(one + v * y) * w;
    QPoly E = vf.P.substitute({{"x", X}}) + v * w * vf.Q.substitute({{"x", X}});
    for (const auto& [vv, ww] : solve_pair(nonzero_coefficients(E, "y"), "_v", "_w")) {
        if (ww.is_zero()) continue;
        add(x.scale(ww.inverse()) + y.scale(vv) + QPoly::constant(Rational(1), ring));
    }
    // case u = 0: y = -t with t = 1/v, Q(x, -t) = 0 for all x
    QPoly t = QPoly::variable("_t", ring);
    QPoly Et = vf.Q.substitute({{"y", -t}});
    QPoly gt = common_gcd(nonzero_coefficients(Et, "x"));
    if (!gt.is_zero())
        for (const auto& tt : rational_roots(gt))
            if (!tt.is_zero()) add(y.scale(tt.inverse()) + QPoly::constant(Rational(1), ring));
    return out;
}

bool CenterCertificate::verify(const VectorField& vf) const {
    switch (kind) {
    case Kind::none: return false;
    case Kind::reversible: return reversible_in(vf, line);
    case Kind::separable: {
        if (!split) return false;
        const auto& s = *split;
        return !s.fx.contains("y") && !s.gy.contains("x") && !s.hx.contains("y") && !s.ky.contains("x") &&
               vf.P == s.fx * s.gy && vf.Q == s.hx * s.ky;
    }
    case Kind::darboux: {
        QPoly sum = vf.divergence();
        for (const auto& f : factors) {
            QPoly F = f.curve;
            QPoly lhs = vf.P * F.derivative("x") + vf.Q * F.derivative("y");
            if (lhs != f.cofactor * F) return false;
            sum += f.cofactor.scale(f.exponent);
        }
        return sum.is_zero();
    }
    }
    return false;
}

CenterCertificate certify(const VectorField& vf, const Rational& px, const Rational& py,
                          const std::vector<QPoly>& extra_curves) {
    std::map<std::string, Rational> at{{"x", px}, {"y", py}};
    if (!vf.P.evaluate(at).is_zero() || !vf.Q.evaluate(at).is_zero())
        throw NotALinearCenter("point is not a singularity of the field");
    auto J = vf.jacobian_at(px, py);
    if (!(J[0] + J[3]).is_zero()) throw NotALinearCenter("trace is not identically zero");
    QPoly det = J[0] * J[3] - J[1] * J[2];
    if (!det.is_constant() || det.is_zero() || det.constant_value().sign() <= 0)
        throw NotALinearCenter("determinant is not a positive constant: " + det.to_string());

    CenterCertificate cert;
    for (auto l : reversibility(vf)) {
        bool through = (l == SymmetryLine::x_zero && px.is_zero()) || (l == SymmetryLine::y_zero && py.is_zero()) ||
                       (l == SymmetryLine::y_eq_x && px == py) || (l == SymmetryLine::y_eq_minus_x && px == -py);
        if (!through) continue;
        cert.kind = CenterCertificate::Kind::reversible;
        cert.line = l;
        cert.witness = std::string("reversible with respect to ") + to_string(l);
        return cert;
    }

    std::vector<QPoly> curves;
    if (vf.f) {
        curves.push_back(boundary_x().with_vars(vf.P.vars()));
        curves.push_back(boundary_y().with_vars(vf.P.vars()));
    }
    for (const auto& c : extra_curves) curves.push_back(c);
    for (const auto& c : invariant_lines(vf)) curves.push_back(c);
    if (!curves.empty()) {
        if (auto d = darboux_search(vf, curves)) {
            bool regular = true;
            for (const auto& f : d->factors)
                if (!f.exponent.is_zero() && f.curve.evaluate(at).is_zero()) regular = false;
            if (regular) return *d;
        }
    }
    if (auto s = separable_split(vf)) {
        cert.kind = CenterCertificate::Kind::separable;
        cert.split = s;
        cert.witness = "P = (" + s->fx.to_string() + ")*(" + s->gy.to_string() + "), Q = (" + s->hx.to_string() +
                       ")*(" + s->ky.to_string() + ")";
        return cert;
    }
    return cert;
}

} // namespace cycleforge
