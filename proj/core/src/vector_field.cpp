#include "cycleforge/dynamics/vector_field.hpp"

#include <algorithm>

namespace cycleforge {

const char* to_string(FieldClass c) {
    switch (c) {
    case FieldClass::X_d: return "X_d";
    case FieldClass::X_d0: return "X_d0";
    case FieldClass::general: return "general";
    }
    return "?";
}

QPoly boundary_x() {
    QPoly x = QPoly::variable("x", make_vars({"x", "y"}));
    return x * x * QPoly::constant(Rational(4), x.vars()) - QPoly::constant(Rational(1), x.vars());
}

QPoly boundary_y() {
    QPoly y = QPoly::variable("y", make_vars({"x", "y"}));
    return y * y * QPoly::constant(Rational(4), y.vars()) - QPoly::constant(Rational(1), y.vars());
}

VarList xy_ring(std::initializer_list<const QPoly*> ps) {
    VarList v = make_vars({"x", "y"});
    for (const auto* p : ps) v = union_vars(v, p->vars());
    return v;
}

namespace {

void classify(VectorField& vf) {
    if (!vf.f) {
        vf.field_class = FieldClass::general;
        unsigned dp = vf.P.is_zero() ? 0 : vf.P.degree_in(std::vector<std::string>{"x", "y"}).value();
        unsigned dq = vf.Q.is_zero() ? 0 : vf.Q.degree_in(std::vector<std::string>{"x", "y"}).value();
        vf.d = std::max(dp, dq);
        return;
    }
    std::vector<std::string> xy{"x", "y"};
    unsigned df = vf.f->is_zero() ? 0 : vf.f->degree_in(xy).value();
    unsigned dg = vf.g->is_zero() ? 0 : vf.g->degree_in(xy).value();
    vf.d = std::max(df, dg);
    bool a_d0 = vf.f->extract(xy, {vf.d, 0}).is_zero();
    bool b_0d = vf.g->extract(xy, {0, vf.d}).is_zero();
    vf.field_class = (a_d0 && b_0d) ? FieldClass::X_d0 : FieldClass::X_d;
}

} // namespace

VectorField VectorField::from_factors(const QPoly& f0, const QPoly& g0) {
    VarList ring = xy_ring({&f0, &g0});
    VectorField vf;
    vf.f = f0.with_vars(ring);
    vf.g = g0.with_vars(ring);
    vf.P = boundary_x().with_vars(ring) * *vf.f;
    vf.Q = boundary_y().with_vars(ring) * *vf.g;
    classify(vf);
    return vf;
}

VectorField VectorField::from_components(const QPoly& P0, const QPoly& Q0) {
    VarList ring = xy_ring({&P0, &Q0});
    VectorField vf;
    vf.P = P0.with_vars(ring);
    vf.Q = Q0.with_vars(ring);
    auto f = vf.P.divide_exact(boundary_x().with_vars(ring));
    auto g = vf.Q.divide_exact(boundary_y().with_vars(ring));
    if (f && g) {
        vf.f = *f;
        vf.g = *g;
    }
    classify(vf);
    return vf;
}

std::vector<std::string> VectorField::parameters() const {
    std::vector<std::string> out;
    for (const auto* p : {&P, &Q})
        for (const auto& v : p->used_variables())
            if (v != "x" && v != "y" && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

VectorField VectorField::substitute(const std::map<std::string, QPoly>& images) const {
    if (f) return from_factors(f->substitute(images), g->substitute(images));
    return from_components(P.substitute(images), Q.substitute(images));
}

VectorField VectorField::bind(const std::map<std::string, Rational>& values) const {
    if (f) return from_factors(f->evaluate(values), g->evaluate(values));
    return from_components(P.evaluate(values), Q.evaluate(values));
}

QPoly VectorField::divergence() const { return P.derivative("x") + Q.derivative("y"); }

std::array<QPoly, 4> VectorField::jacobian_at(const Rational& x, const Rational& y) const {
    std::map<std::string, Rational> at{{"x", x}, {"y", y}};
    return {P.derivative("x").evaluate(at), P.derivative("y").evaluate(at), Q.derivative("x").evaluate(at),
            Q.derivative("y").evaluate(at)};
}

} // namespace cycleforge
