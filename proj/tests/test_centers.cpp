#include "doctest.h"

#include "cycleforge/centers/certify.hpp"
#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/lyapunov/normalize.hpp"
#include "cycleforge/lyapunov/quantities.hpp"

#include <random>

using namespace cycleforge;

namespace {

QPoly P(const char* s) { return parse_qpoly(s); }

using Kind = CenterCertificate::Kind;

struct Expected {
    const char* label;
    Kind kind;
    std::optional<SymmetryLine> line;
};

const Expected kExpected[] = {
    {"C1", Kind::reversible, SymmetryLine::x_zero},       {"C2", Kind::darboux, std::nullopt},
    {"C3", Kind::separable, std::nullopt},                {"C4", Kind::reversible, SymmetryLine::y_zero},
    {"C5", Kind::reversible, SymmetryLine::y_eq_minus_x}, {"C6", Kind::reversible, SymmetryLine::y_eq_x},
    {"C7", Kind::darboux, std::nullopt},                  {"D1", Kind::separable, std::nullopt},
    {"D2", Kind::darboux, std::nullopt},                  {"D3", Kind::reversible, SymmetryLine::y_zero},
    {"D4", Kind::reversible, SymmetryLine::x_zero},       {"D5", Kind::reversible, SymmetryLine::y_eq_minus_x},
    {"D6", Kind::reversible, SymmetryLine::y_eq_x},       {"D7", Kind::darboux, std::nullopt},
    {"D8", Kind::reversible, SymmetryLine::y_eq_x},       {"D9", Kind::reversible, SymmetryLine::y_eq_minus_x},
};

Rational exponent_of(const CenterCertificate& c, const QPoly& curve) {
    for (const auto& f : c.factors)
        if (f.curve == curve.with_vars(f.curve.vars())) return f.exponent;
    return Rational(0);
}

} // namespace

TEST_CASE("reversibility identities") {
    auto sym = VectorField::from_components(P("-y + x^2"), P("x + x*y"));
    CHECK(reversible_in(sym, SymmetryLine::x_zero));
    CHECK_FALSE(reversible_in(sym, SymmetryLine::y_zero));
    auto vx = VectorField::from_components(P("-y + x*y"), P("x + y^2"));
    CHECK(reversible_in(vx, SymmetryLine::y_zero));
    CHECK_FALSE(reversible_in(vx, SymmetryLine::x_zero));
    auto diag = VectorField::from_components(P("-y + x^2"), P("x - y^2"));
    CHECK(reversible_in(diag, SymmetryLine::y_eq_x));
    auto anti = VectorField::from_components(P("-y + x^2"), P("x + y^2"));
    CHECK(reversible_in(anti, SymmetryLine::y_eq_minus_x));
    CHECK(reversibility(family_P4()).empty());
}

TEST_CASE("cofactors") {
    auto vf = family_P4();
    auto k = cofactor(vf, boundary_x());
    REQUIRE(k.has_value());
    CHECK(*k == P("8*x*y + 8*a11*x^2*y + 8*a02*x*y^2").with_vars(k->vars()));
    CHECK_FALSE(cofactor(vf, P("1 + x + y")).has_value());
    CHECK_THROWS(cofactor(vf, QPoly()));
}

TEST_CASE("invariant lines of a numeric field") {
    // 2P - 3Q is divisible by 1 + 2x - 3y
    QPoly l = P("1 + 2*x - 3*y"), w = P("x^2 + y");
    auto vf = VectorField::from_components(l * P("x") + w.scale(Rational(3)), l * P("y") + w.scale(Rational(2)));
    auto lines = invariant_lines(vf);
    bool found = false;
    for (const auto& c : lines) {
        CHECK(cofactor(vf, c).has_value());
        if (c == l.with_vars(c.vars())) found = true;
    }
    CHECK(found);

    auto p4 = builtin_family("C7");
    auto sym = invariant_lines(p4);
    REQUIRE(sym.size() == 1);
    CHECK(sym[0] == P("1 + a11*x + a02*y").with_vars(sym[0].vars()));
}

TEST_CASE("certificates for the center strata") {
    for (const auto& e : kExpected) {
        CAPTURE(e.label);
        auto vf = builtin_family(e.label);
        auto cert = certify(vf, Rational(0), Rational(0));
        CHECK(cert.kind == e.kind);
        if (e.line) CHECK(cert.line == *e.line);
        CHECK(cert.verify(vf));
        CHECK_FALSE(cert.witness.empty());
    }
}

TEST_CASE("darboux exponents") {
    auto c2 = certify(builtin_family("C2"), Rational(0), Rational(0));
    CHECK(exponent_of(c2, boundary_x()) == Rational(-1));
    CHECK(exponent_of(c2, boundary_y()) == Rational(-1));
    auto d2 = certify(builtin_family("D2"), Rational(0), Rational(0));
    CHECK(exponent_of(d2, boundary_x()) == Rational(-1));
    CHECK(exponent_of(d2, boundary_y()) == Rational(-1));
    auto d7 = certify(builtin_family("D7"), Rational(0), Rational(0));
    CHECK(exponent_of(d7, boundary_x()) == Rational(-2));
    CHECK(exponent_of(d7, boundary_y()) == Rational(-2));
    auto c7 = certify(builtin_family("C7"), Rational(0), Rational(0));
    CHECK(exponent_of(c7, P("1 + a11*x + a02*y")) == Rational(-1));
}

TEST_CASE("no certificate for the generic family") {
    auto cert = certify(family_P4(), Rational(0), Rational(0));
    CHECK(cert.kind == Kind::none);
    CHECK_FALSE(cert.verify(family_P4()));
    CHECK_THROWS_AS(certify(family_P4(), Rational(1), Rational(0)), NotALinearCenter);
}

TEST_CASE("certified strata have vanishing quantities at random points") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (const auto& e : kExpected) {
        CAPTURE(e.label);
        auto vf = builtin_family(e.label);
        for (int trial = 0; trial < 3; ++trial) {
            std::map<std::string, Rational> vals;
            for (const auto& p : vf.parameters()) vals[p] = Rational(num(rng), den(rng));
            auto b = vf.bind(vals);
            auto cert = certify(b, Rational(0), Rational(0));
            CHECK(cert.kind != Kind::none);
            auto rep = lyapunov_quantities(to_rational(normalize_at(b, Rational(0), Rational(0))), 3);
            for (const auto& L : rep.quantities) CHECK(L.is_zero());
        }
    }
}
