#include "cycleforge/lyapunov/normalize.hpp"

#include <algorithm>

namespace cycleforge {

namespace {

const std::vector<std::string> kXY{"x", "y"};

template <class K>
K coeff_xy(const Poly<K>& p, unsigned i, unsigned j) {
    Poly<K> c = p.extract(kXY, {i, j});
    if (!c.is_constant()) throw NotALinearCenter("linear part depends on parameters: " + c.to_string());
    return c.is_zero() ? K(0) : c.constant_value();
}

} // namespace

template <class K>
NormalizedField<K> normalized_from(const Poly<K>& P0, const Poly<K>& Q0, long radicand) {
    VarList ring = union_vars(union_vars(make_vars(kXY), P0.vars()), Q0.vars());
    Poly<K> P = P0.with_vars(ring), Q = Q0.with_vars(ring);
    if (!P.extract(kXY, {0, 0}).is_zero() || !Q.extract(kXY, {0, 0}).is_zero())
        throw NotALinearCenter("the origin is not a singularity");
    if (!(coeff_xy(P, 1, 0) == K(0) && coeff_xy(P, 0, 1) == K(-1) && coeff_xy(Q, 1, 0) == K(1) &&
          coeff_xy(Q, 0, 1) == K(0)))
        throw NotALinearCenter("linear part is not (-y, x)");
    NormalizedField<K> nf;
    Poly<K> x = Poly<K>::variable("x", ring), y = Poly<K>::variable("y", ring);
    nf.F = P + y;
    nf.G = Q - x;
    nf.radicand = radicand;
    for (const auto* p : {&nf.F, &nf.G})
        for (const auto& v : p->used_variables())
            if (v != "x" && v != "y" && std::find(nf.parameters.begin(), nf.parameters.end(), v) == nf.parameters.end())
                nf.parameters.push_back(v);
    return nf;
}

template NormalizedField<Rational> normalized_from(const QPoly&, const QPoly&, long);
template NormalizedField<QuadExt> normalized_from(const QEPoly&, const QEPoly&, long);

NormalizedFieldQE normalize_at(const VectorField& field, const Rational& px, const Rational& py,
                               const NormalizeOptions& opts) {
    std::map<std::string, Rational> at{{"x", px}, {"y", py}};
    QPoly p0 = field.P.evaluate(at), q0 = field.Q.evaluate(at);
    if (!p0.is_zero() || !q0.is_zero())
        throw NotALinearCenter("(" + px.to_string() + ", " + py.to_string() + ") is not a singularity");
    auto J = field.jacobian_at(px, py);
    Rational j[4];
    for (int i = 0; i < 4; ++i) {
        if (!J[i].is_constant()) throw NotALinearCenter("Jacobian depends on parameters: " + J[i].to_string());
        j[i] = J[i].is_zero() ? Rational(0) : J[i].constant_value();
    }
    if (!(j[0] + j[3]).is_zero()) throw NotALinearCenter("nonzero trace " + (j[0] + j[3]).to_string());
    Rational det = j[0] * j[3] - j[1] * j[2];
    if (det.sign() <= 0) throw NotALinearCenter("non-positive determinant " + det.to_string());
    if (opts.frame_a.is_zero() && opts.frame_b.is_zero()) throw std::invalid_argument("degenerate frame factor");
    QuadExt w = QuadExt::sqrt_of(det);
    QuadExt p(j[0]), r(j[2]);
    // T0 maps the rotation generator to J / w
    QuadExt t0[4] = {w / r, p / r, QuadExt(0), QuadExt(1)};
    QuadExt a(opts.frame_a), b(opts.frame_b);
    QuadExt t[4] = {t0[0] * a + t0[1] * b, -t0[0] * b + t0[1] * a, t0[2] * a + t0[3] * b, -t0[2] * b + t0[3] * a};
    QuadExt dt = t[0] * t[3] - t[1] * t[2];
    QuadExt ti[4] = {t[3] / dt, -t[1] / dt, -t[2] / dt, t[0] / dt};

    QEPoly P = to_quadext(field.P), Q = to_quadext(field.Q);
    VarList ring = P.vars();
    QEPoly x = QEPoly::variable("x", ring), y = QEPoly::variable("y", ring);
    auto c = [&](const QuadExt& v) { return QEPoly::constant(v, ring); };
    std::map<std::string, QEPoly> sub{{"x", c(QuadExt(px)) + x.scale(t[0]) + y.scale(t[1])},
                                      {"y", c(QuadExt(py)) + x.scale(t[2]) + y.scale(t[3])}};
    QEPoly Ps = P.substitute(sub), Qs = Q.substitute(sub);
    QuadExt winv = w.inverse();
    QEPoly nP = (Ps.scale(ti[0]) + Qs.scale(ti[1])).scale(winv);
    QEPoly nQ = (Ps.scale(ti[2]) + Qs.scale(ti[3])).scale(winv);
    return normalized_from(nP, nQ, w.radicand());
}

NormalizedFieldQ to_rational(const NormalizedFieldQE& nf) {
    NormalizedFieldQ out;
    out.F = to_rational(nf.F);
    out.G = to_rational(nf.G);
    out.parameters = nf.parameters;
    out.radicand = 0;
    return out;
}

} // namespace cycleforge
