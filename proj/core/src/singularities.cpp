#include "cycleforge/dynamics/singularities.hpp"
#include "cycleforge/centers/certify.hpp"
#include "cycleforge/resultants/gcd.hpp"
#include "cycleforge/resultants/resultant.hpp"
#include "cycleforge/resultants/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cycleforge {

const char* to_string(SingularityType t) {
    switch (t) {
    case SingularityType::saddle: return "saddle";
    case SingularityType::antisaddle_node: return "antisaddle_node";
    case SingularityType::antisaddle_focus: return "antisaddle_focus";
    case SingularityType::linear_center: return "linear_center";
    case SingularityType::degenerate: return "degenerate";
    }
    return "?";
}

const char* to_string(BerlinskiiKind k) {
    switch (k) {
    case BerlinskiiKind::convex_alternating: return "convex_alternating";
    case BerlinskiiKind::triangle_config: return "triangle_config";
    case BerlinskiiKind::counterexample: return "counterexample";
    case BerlinskiiKind::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

const Rational kFinest(mpz_class(1), mpz_class(1) << 200);
const Rational kTraceFloor(mpz_class(1), mpz_class(10) * mpz_class("1000000000000000000000000000000"));

// Real roots of a univariate polynomial with exact rationals marked.
struct Roots {
    UPoly p;
    std::vector<IsolatingInterval> iv;

    explicit Roots(const QPoly& q) : p(squarefree_part(UPoly::from(q))) {
        if (p.degree() < 1) return;
        iv = isolate_real_roots(p);
        for (auto& i : iv) rational_root(p, i);
    }
    RInterval box(std::size_t i) const {
        return iv[i].exact ? RInterval(*iv[i].exact) : iv[i].interval();
    }
    void refine_to(std::size_t i, const Rational& w) {
        if (!iv[i].exact && iv[i].width() > w) iv[i] = refine(p, iv[i], w);
    }
};

bool overlap(const RInterval& a, const RInterval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

struct Solution {
    std::size_t xi, yi;
};

int enclosure_sign(const QPoly& p, const RInterval& x, const RInterval& y) {
    return eval_interval(p, {{"x", x}, {"y", y}}).sign();
}

std::vector<std::string> extra_variables(const QPoly& p) {
    std::vector<std::string> out;
    for (const auto& v : p.used_variables())
        if (v != "x" && v != "y") out.push_back(v);
    return out;
}

void classify(Singularity& s, Roots& rx, Roots& ry, std::size_t xi, std::size_t yi, const QPoly& P, const QPoly& Q) {
    QPoly Px = P.derivative("x"), Py = P.derivative("y"), Qx = Q.derivative("x"), Qy = Q.derivative("y");
    QPoly det = Px * Qy - Py * Qx, tr = Px + Qy;
    QPoly disc = tr * tr - det.scale(Rational(4));
    if (s.is_exact()) {
        std::map<std::string, Rational> at{{"x", *s.exact_x}, {"y", *s.exact_y}};
        s.det_sign = det.evaluate(at).constant_value().sign();
        s.trace_sign = tr.evaluate(at).constant_value().sign();
        int ds = disc.evaluate(at).constant_value().sign();
        if (s.det_sign < 0) s.type = SingularityType::saddle;
        else if (s.det_sign == 0) s.type = SingularityType::degenerate;
        else if (s.trace_sign == 0) s.type = SingularityType::linear_center;
        else s.type = ds >= 0 ? SingularityType::antisaddle_node : SingularityType::antisaddle_focus;
        if (s.det_sign != 0) s.index = s.det_sign;
        return;
    }
    Rational w = s.x.width() > s.y.width() ? s.x.width() : s.y.width();
    int dsign = 0, tsign = 0, qsign = 0;
    for (;;) {
        dsign = enclosure_sign(det, s.x, s.y);
        tsign = enclosure_sign(tr, s.x, s.y);
        if (dsign > 0 && tsign != 0) qsign = enclosure_sign(disc, s.x, s.y);
        bool done = dsign < 0 || (dsign > 0 && (tsign == 0 ? false : qsign != 0));
        if (dsign > 0 && tsign == 0 && w < kTraceFloor) done = true;
        if (done || w < kFinest) break;
        w = w / Rational(1024);
        rx.refine_to(xi, w);
        ry.refine_to(yi, w);
        s.x = rx.box(xi);
        s.y = ry.box(yi);
    }
    s.det_sign = dsign;
    s.trace_sign = tsign;
    if (dsign < 0) s.type = SingularityType::saddle;
    else if (dsign == 0) s.type = SingularityType::degenerate;
    else if (tsign == 0) {
        s.type = SingularityType::linear_center;
        s.trace_certified = false;
    } else s.type = qsign >= 0 ? SingularityType::antisaddle_node : SingularityType::antisaddle_focus;
    if (dsign != 0) s.index = dsign;
}

bool inside_region(Roots& r, std::size_t i, Region region) {
    if (region == Region::plane) return true;
    Rational half(1, 2);
    for (Rational w(1, 16);; w = w / Rational(16)) {
        RInterval b = r.box(i);
        if (r.iv[i].exact) return -half < *r.iv[i].exact && *r.iv[i].exact < half;
        if (-half < b.lo && b.hi < half) return true;
        if (b.hi < -half || half < b.lo) return false;
        if (b.hi <= -half || half <= b.lo) return false;
        r.refine_to(i, w);
    }
}

SingularityReport solve_and_classify(const QPoly& f0, const QPoly& g0, const QPoly& P, const QPoly& Q,
                                     const SolveOptions& opts) {
    for (const auto* p : {&f0, &g0, &P, &Q})
        if (auto extra = extra_variables(*p); !extra.empty())
            throw std::invalid_argument("unbound parameter " + extra[0]);
    VarList ring = xy_ring({&f0, &g0});
    QPoly f = f0.with_vars(ring), g = g0.with_vars(ring);
    SingularityReport rep;
    if (f.is_zero() || g.is_zero()) {
        rep.degenerate_family = true;
        rep.common_component = f.is_zero() ? g : f;
        rep.diagnostic = "one equation vanishes identically";
        return rep;
    }
    QPoly h = multivariate_gcd(f, g);
    if (h.contains("x") || h.contains("y")) {
        rep.degenerate_family = true;
        rep.common_component = h;
        rep.diagnostic = "common component " + h.to_string();
        return rep;
    }
    // both leading coefficients in y vanish: the side branch of the elimination
    auto cf = f.coefficients_in("y"), cg = g.coefficients_in("y");
    QPoly side = multivariate_gcd(cf.back(), cg.back());
    if (side.contains("x")) {
        Roots sr(side);
        for (std::size_t i = 0; i < sr.iv.size(); ++i) rep.side_branch.push_back(sr.box(i));
    }

    Roots rx(resultant(f, g, "y")), ry(resultant(f, g, "x"));
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < rx.iv.size(); ++i) xs.push_back(i);
    for (std::size_t j = 0; j < ry.iv.size(); ++j) ys.push_back(j);
    if (xs.empty() || ys.empty()) return rep;

    // Pair x and y roots through a sheared projection s = x + c y. Accepted once real roots of the
    // sheared resultant and candidate pairs are in bijection.
    QPoly x = QPoly::variable("x", ring), y = QPoly::variable("y", ring);
    std::vector<Solution> sols;
    bool paired = false;
    for (int c : {1, 2, -1, 3, -2, 5, -3, 7}) {
        QPoly X = x - y.scale(Rational(c));
        QPoly fs = f.substitute({{"x", X}}), gs = g.substitute({{"x", X}});
        if (!fs.coefficients_in("y").back().is_constant() && !gs.coefficients_in("y").back().is_constant()) continue;
        QPoly rs = resultant(fs, gs, "y");
        if (rs.is_zero()) continue;
        Roots sr(rs);
        Rational C(c);
        for (Rational w(1, 64); w > kFinest; w = w / Rational(64)) {
            for (auto i : xs) rx.refine_to(i, w);
            for (auto j : ys) ry.refine_to(j, w);
            for (std::size_t k = 0; k < sr.iv.size(); ++k) sr.refine_to(k, w);
            std::vector<Solution> cand;
            bool ambiguous = false;
            std::vector<int> used_k(sr.iv.size(), 0);
            for (auto i : xs)
                for (auto j : ys) {
                    RInterval bx = rx.box(i), by = ry.box(j);
                    if (enclosure_sign(f, bx, by) != 0 || enclosure_sign(g, bx, by) != 0) continue;
                    RInterval sx = bx + RInterval(C) * by;
                    int hits = 0;
                    for (std::size_t k = 0; k < sr.iv.size(); ++k)
                        if (overlap(sx, sr.box(k))) {
                            ++hits;
                            ++used_k[k];
                        }
                    if (hits > 1) ambiguous = true;
                    if (hits == 1) cand.push_back({i, j});
                }
            for (int u : used_k)
                if (u != 1) ambiguous = true;
            if (!ambiguous) {
                // every candidate pair must survive; exact pairs are confirmed directly
                bool ok = true;
                for (const auto& s : cand)
                    if (rx.iv[s.xi].exact && ry.iv[s.yi].exact) {
                        std::map<std::string, Rational> at{{"x", *rx.iv[s.xi].exact}, {"y", *ry.iv[s.yi].exact}};
                        if (!f.evaluate(at).is_zero() || !g.evaluate(at).is_zero()) ok = false;
                    }
                if (ok) {
                    sols = cand;
                    paired = true;
                    break;
                }
            }
        }
        if (paired) break;
    }
    if (!paired) throw std::runtime_error("could not separate the common zeros by a sheared projection");

    for (const auto& s : sols) {
        if (!inside_region(rx, s.xi, opts.region) || !inside_region(ry, s.yi, opts.region)) continue;
        rx.refine_to(s.xi, opts.box_width);
        ry.refine_to(s.yi, opts.box_width);
        Singularity p;
        p.x = rx.box(s.xi);
        p.y = ry.box(s.yi);
        p.exact_x = rx.iv[s.xi].exact;
        p.exact_y = ry.iv[s.yi].exact;
        classify(p, rx, ry, s.xi, s.yi, P.with_vars(ring), Q.with_vars(ring));
        rep.points.push_back(p);
    }
    std::sort(rep.points.begin(), rep.points.end(), [](const Singularity& a, const Singularity& b) {
        return a.x.lo < b.x.lo || (a.x.lo == b.x.lo && a.y.lo < b.y.lo);
    });
    return rep;
}

} // namespace

SingularityReport solve_system(const QPoly& f, const QPoly& g, const SolveOptions& opts) {
    return solve_and_classify(f, g, f, g, opts);
}

SingularityReport singularities(const VectorField& field, const std::map<std::string, Rational>& binding,
                                const SolveOptions& opts) {
    VectorField b = binding.empty() ? field : field.bind(binding);
    if (b.f && opts.region == Region::open_square) return solve_and_classify(*b.f, *b.g, b.P, b.Q, opts);
    return solve_and_classify(b.P, b.Q, b.P, b.Q, opts);
}

SingularityReport singularities_in_delta(const VectorField& field, const std::map<std::string, Rational>& binding,
                                         const SolveOptions& opts) {
    SolveOptions o = opts;
    o.region = Region::open_square;
    return singularities(field, binding, o);
}

namespace {

struct Dets {
    QPoly lhs, rhs, uv;
};

Dets lemma_sides(const QPoly& f0, const QPoly& g0, const QPoly& u0, const QPoly& v0) {
    VarList ring = xy_ring({&f0, &g0, &u0, &v0});
    QPoly f = f0.with_vars(ring), g = g0.with_vars(ring), u = u0.with_vars(ring), v = v0.with_vars(ring);
    QPoly F = u * f, G = v * g;
    QPoly lhs = F.derivative("x") * G.derivative("y") - F.derivative("y") * G.derivative("x");
    QPoly dy = f.derivative("x") * g.derivative("y") - f.derivative("y") * g.derivative("x");
    return {lhs, u * v * dy, u * v};
}

} // namespace

IndexLemmaResult index_lemma_check(const QPoly& f, const QPoly& g, const QPoly& u, const QPoly& v, const Rational& px,
                                   const Rational& py) {
    std::map<std::string, Rational> at{{"x", px}, {"y", py}};
    if (!f.evaluate(at).is_zero() || !g.evaluate(at).is_zero())
        throw std::invalid_argument("point is not a common zero of f and g");
    auto d = lemma_sides(f, g, u, v);
    IndexLemmaResult r;
    Rational l = d.lhs.evaluate(at).constant_value(), rr = d.rhs.evaluate(at).constant_value();
    r.lhs = RInterval(l);
    r.rhs = RInterval(rr);
    r.exact = true;
    r.holds = l == rr;
    r.index_sign_factor = d.uv.evaluate(at).constant_value().sign();
    return r;
}

IndexLemmaResult index_lemma_check(const QPoly& f, const QPoly& g, const QPoly& u, const QPoly& v,
                                   const Singularity& p) {
    if (p.is_exact()) return index_lemma_check(f, g, u, v, *p.exact_x, *p.exact_y);
    std::map<std::string, RInterval> box{{"x", p.x}, {"y", p.y}};
    if (!eval_interval(f, box).contains_zero() || !eval_interval(g, box).contains_zero())
        throw std::invalid_argument("box does not contain a common zero of f and g");
    auto d = lemma_sides(f, g, u, v);
    IndexLemmaResult r;
    r.lhs = eval_interval(d.lhs, box);
    r.rhs = eval_interval(d.rhs, box);
    r.holds = overlap(r.lhs, r.rhs);
    r.index_sign_factor = eval_interval(d.uv, box).sign();
    return r;
}

BerlinskiiResult berlinskii_check(const SingularityReport& report) {
    BerlinskiiResult res;
    const auto& pts = report.points;
    if (report.degenerate_family || pts.size() != 4) {
        res.diagnostic = "needs exactly four singularities, got " + std::to_string(pts.size());
        return res;
    }
    for (const auto& p : pts)
        if (!p.index) {
            res.diagnostic = "degenerate singularity";
            return res;
        }
    for (const auto& p : pts) res.index_sum += *p.index;
    // convex hull (monotone chain) on box midpoints
    std::vector<std::size_t> idx{0, 1, 2, 3};
    auto X = [&](std::size_t i) { return pts[i].mid_x(); };
    auto Y = [&](std::size_t i) { return pts[i].mid_y(); };
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return X(a) < X(b) || (X(a) == X(b) && Y(a) < Y(b)); });
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (X(a) - X(o)) * (Y(b) - Y(o)) - (Y(a) - Y(o)) * (X(b) - X(o));
    };
    std::vector<std::size_t> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (auto i : idx) {
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0) hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    res.hull = hull;
    if (hull.size() == 4) {
        bool alt = *pts[hull[0]].index == *pts[hull[2]].index && *pts[hull[1]].index == *pts[hull[3]].index &&
                   *pts[hull[0]].index != *pts[hull[1]].index;
        res.kind = alt ? BerlinskiiKind::convex_alternating : BerlinskiiKind::counterexample;
        if (!alt) res.diagnostic = "convex quadrilateral without alternating indices";
    } else if (hull.size() == 3) {
        std::size_t inner = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (std::find(hull.begin(), hull.end(), i) == hull.end()) inner = i;
        int io = *pts[inner].index;
        bool ok = true;
        for (auto h : hull)
            if (*pts[h].index != -io) ok = false;
        res.kind = ok ? BerlinskiiKind::triangle_config : BerlinskiiKind::counterexample;
        res.inner_antisaddle = io > 0;
        if (!ok) res.diagnostic = "triangle without opposite inner type";
    } else {
        res.diagnostic = "collinear configuration";
    }
    return res;
}

std::vector<ContactPoint> contact_points(const VectorField& field, const Rational& a, const Rational& b,
                                         const Rational& c, const std::map<std::string, Rational>& binding) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("degenerate line");
    VectorField vf = binding.empty() ? field : field.bind(binding);
    if (auto extra = extra_variables(vf.P); !extra.empty()) throw std::invalid_argument("unbound parameter " + extra[0]);
    VarList ring = vf.P.vars();
    QPoly x = QPoly::variable("x", ring), y = QPoly::variable("y", ring);
    QPoly line = x.scale(a) + y.scale(b) + QPoly::constant(c, ring);
    if (cofactor(vf, line)) throw std::invalid_argument("line is invariant: " + line.to_string());
    QPoly H = vf.P.scale(a) + vf.Q.scale(b);
    bool along_x = !b.is_zero();
    QPoly h = along_x ? H.substitute({{"y", (x.scale(a) + QPoly::constant(c, ring)).scale(-b.inverse())}})
                      : H.substitute({{"x", QPoly::constant(-c / a, ring)}});
    if (h.is_zero()) throw std::invalid_argument("line is invariant: " + line.to_string());
    std::vector<ContactPoint> out;
    if (h.is_constant()) return out;
    UPoly u = UPoly::from(h);
    UPoly sq = squarefree_part(u);
    UPoly rep = upoly_gcd(u, u.derivative());
    for (auto iv : isolate_real_roots(sq)) {
        rational_root(sq, iv);
        RInterval t = iv.exact ? RInterval(*iv.exact) : iv.interval();
        ContactPoint p;
        if (!iv.exact) p.simple = rep.degree() < 1 || count_roots_between(rep, iv.lo, iv.hi) == 0;
        else p.simple = rep.degree() < 1 || rep.sign_at(*iv.exact) != 0;
        if (along_x) {
            p.x = t;
            RInterval yy = (RInterval(a) * t + RInterval(c)) * RInterval(-b.inverse());
            p.y = yy;
        } else {
            p.x = RInterval(-c / a);
            p.y = t;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace cycleforge
