#include "cycleforge/bifurcation/perturbation.hpp"
#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycleforge {

namespace {

QPoly poly(const char* s) { return parse_qpoly(s, make_vars({"x", "y"})); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> symbols(const QPoly& p) {
    std::vector<std::string> out;
    for (const auto& v : p.used_variables())
        if (v != "x" && v != "y") out.push_back(v);
    return out;
}

} // namespace

PerturbationSetup build_perturbation(const VectorField& base, const std::vector<PerturbationTerm>& terms,
                                     const std::string& alpha) {
    PerturbationSetup s;
    s.base = base;
    s.alpha = alpha;
    for (const auto& p : base.parameters())
        if (p != alpha) s.mu.push_back(p);
    QPoly dP, dQ;
    for (const auto& t : terms) {
        std::string name = (t.target == Target::P ? "P: " : "Q: ") + t.term.to_string();
        QPoly add = t.term;
        if (t.inner) {
            add = (t.target == Target::P ? boundary_x() : boundary_y()) * t.term;
        } else {
            QPoly b = t.target == Target::P ? boundary_x() : boundary_y();
            if (!add.divide_exact(b.with_vars(union_vars(b.vars(), add.vars()))))
                throw std::invalid_argument("term breaks the invariance of the lines: " + name);
        }
        std::vector<std::string> fresh;
        for (const auto& v : symbols(t.term))
            if (v != alpha && !contains(s.mu, v)) fresh.push_back(v);
        if (fresh.size() > 1) throw std::invalid_argument("term has more than one perturbation parameter: " + name);
        if (fresh.empty() && !contains(symbols(t.term), alpha))
            throw std::invalid_argument("term has no perturbation parameter: " + name);
        for (const auto& v : fresh) {
            if (add.degree_in(v).value() != 1) throw std::invalid_argument("term is not linear in " + v + ": " + name);
            if (!contains(s.lambda, v)) s.lambda.push_back(v);
        }
        (t.target == Target::P ? dP : dQ) += add;
    }
    s.field = VectorField::from_components(base.P + dP, base.Q + dQ);
    if (base.f && !s.field.f) throw std::logic_error("perturbed field lost its factored form");
    return s;
}

PerturbationSetup canned_setup(const std::string& label) {
    PerturbationSetup s;
    if (label == "P7") {
        s = build_perturbation(family_P7(), {{Target::P, poly("-alpha*y")},
                                             {Target::P, poly("a*y^2")},
                                             {Target::Q, poly("alpha*x")},
                                             {Target::Q, poly("b*x*y")}});
        s.N = 4;
    } else if (label == "P8") {
        s = build_perturbation(family_P8(), {{Target::P, poly("-alpha*y")},
                                             {Target::P, poly("a1*x*y")},
                                             {Target::P, poly("a2*y^2")},
                                             {Target::Q, poly("alpha*x")},
                                             {Target::Q, poly("b1*x^2")},
                                             {Target::Q, poly("b2*x*y")}});
        s.N = 6;
    } else if (label == "P9b" || label == "P9c") {
        VectorField base = family_P9().substitute({{"lam", QPoly()}, {"alpha", QPoly()}});
        s = build_perturbation(base, {{Target::P, poly("lam*y^2")}, {Target::Q, poly("-4*alpha*x*y")}});
        s.px = Rational(1, 4);
        s.frame = {Rational(1, 2), Rational(1, 2)};
        s.N = 3;
        if (label == "P9c") {
            s.fixed = {{"mu", Rational(0)}};
            s.N = 2;
        }
    } else {
        throw std::invalid_argument("unknown setup label " + label);
    }
    s.label = label;
    return s;
}

std::vector<std::string> canned_setup_labels() { return {"P7", "P8", "P9b", "P9c"}; }

} // namespace cycleforge
