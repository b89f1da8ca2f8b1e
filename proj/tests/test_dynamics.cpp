#include "doctest.h"

#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/dynamics/game.hpp"
#include "cycleforge/dynamics/numeric.hpp"
#include "cycleforge/dynamics/singularities.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "support/pencil.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cycleforge;
using cycleforge::testing::pencil;

namespace {

QPoly P(const char* s) { return parse_qpoly(s); }

PayoffMatrix payoff(const char* a, const char* b, const char* c, const char* d) {
    return {{{P(a), P(b)}, {P(c), P(d)}}};
}

} // namespace

TEST_CASE("game construction") {
    auto swap = payoff("0", "1", "1", "0");
    auto vf = build_from_game(GameModel::make(swap, swap));
    CHECK(*vf.f == P("2*y").with_vars(vf.f->vars()));
    CHECK(*vf.g == P("2*x").with_vars(vf.g->vars()));
    CHECK(vf.P == (boundary_x() * P("2*y")).with_vars(vf.P.vars()));
    CHECK(vf.d == 1);

    auto lin = GameModel::make(payoff("x", "1 + y", "2*x - y", "3"), payoff("y", "x + y", "1", "-x"));
    CHECK(lin.d == 2);
    auto v2 = build_from_game(lin);
    CHECK(v2.field_class == FieldClass::X_d0);
    CHECK(v2.d == 2);
    std::vector<std::string> xy{"x", "y"};
    CHECK(v2.f->extract(xy, {2, 0}).is_zero());
    CHECK(v2.g->extract(xy, {0, 2}).is_zero());

    auto zero = build_from_game(GameModel::make(payoff("0", "0", "0", "0"), payoff("0", "0", "0", "0")));
    CHECK(zero.P.is_zero());
    CHECK(zero.Q.is_zero());

    CHECK_THROWS(GameModel::make(payoff("x^2", "0", "0", "0"), swap, 2u));
    CHECK_THROWS(GameModel::make(payoff("a", "0", "0", "0"), swap));
}

TEST_CASE("replicator dynamics agree with the translated field") {
    // x' = x(x-1) f*(x,y) at a shifted point equals P/4 at the centered point
    auto A = payoff("1 + x", "y", "2", "x*y"), B = payoff("3", "x - y", "0", "1");
    auto vf = build_from_game(GameModel::make(A, B));
    Rational X(1, 3), Y(2, 7);
    std::map<std::string, Rational> at{{"x", X}, {"y", Y}};
    auto e = [&](const QPoly& p) { return p.evaluate(at).constant_value(); };
    Rational fs = e(A[1][1]) - e(A[0][1]) + (e(A[0][1]) + e(A[1][0]) - e(A[0][0]) - e(A[1][1])) * Y;
    Rational xdot = X * (X - Rational(1)) * fs;
    std::map<std::string, Rational> c{{"x", X - Rational(1, 2)}, {"y", Y - Rational(1, 2)}};
    CHECK(vf.P.evaluate(c).constant_value() == xdot * Rational(4));
}

TEST_CASE("singularities of the symmetric two-center family") {
    auto rep = singularities_in_delta(family_P9(), {{"alpha", Rational(0)}, {"lam", Rational(0)}, {"mu", Rational(0)}});
    REQUIRE(rep.points.size() == 2);
    for (const auto& p : rep.points) {
        REQUIRE(p.is_exact());
        CHECK(p.exact_y->is_zero());
        CHECK(p.exact_x->abs() == Rational(1, 4));
        CHECK(p.type == SingularityType::linear_center);
        CHECK(p.index == 1);
    }
    auto shifted = singularities_in_delta(family_P9(), {{"alpha", Rational(1)}, {"lam", Rational(0)}, {"mu", Rational(0)}});
    REQUIRE(shifted.points.size() == 2);
    CHECK(shifted.points[1].type == SingularityType::antisaddle_focus);
    CHECK(shifted.points[1].trace_sign == 1);
    CHECK_THROWS(singularities_in_delta(family_P9()));
}

TEST_CASE("common zeros in the plane") {
    SolveOptions plane;
    plane.region = Region::plane;
    auto rep = solve_system(P("x^2 + y^2 - 5"), P("x*y - 2"), plane);
    REQUIRE(rep.points.size() == 4);
    for (const auto& p : rep.points) {
        REQUIRE(p.is_exact());
        CHECK(*p.exact_x * *p.exact_y == Rational(2));  // back-substitution y = 2/x
        CHECK(p.det_sign == (p.exact_x->abs() > p.exact_y->abs() ? 1 : -1));
        CHECK(p.type == (p.det_sign < 0 ? SingularityType::saddle : p.type));
    }

    auto circ = solve_system(P("x^2 + y^2 - 1"), P("y - x"), plane);
    REQUIRE(circ.points.size() == 2);
    for (const auto& p : circ.points) {
        CHECK_FALSE(p.is_exact());
        CHECK(p.x.width() <= Rational(1, 1000000000));
        CHECK(std::abs(std::abs(p.mid_x()) - std::sqrt(0.5)) < 1e-8);
    }
    auto inside = solve_system(P("x^2 + y^2 - 1"), P("y - x"));
    CHECK(inside.points.empty());

    auto deg = solve_system(P("x*y - x"), P("x^2 + 2*x"), plane);
    CHECK(deg.degenerate_family);
    REQUIRE(deg.common_component.has_value());
    CHECK_FALSE(deg.points.size());

    auto side = solve_system(P("x*y^2 + y - 1"), P("x*y - 3"), plane);
    REQUIRE(side.side_branch.size() == 1);
    CHECK(side.side_branch[0].contains(Rational(0)));
    for (const auto& p : side.points) {
        std::map<std::string, Rational> m{{"x", p.x.mid()}, {"y", p.y.mid()}};
        CHECK(std::abs(P("x*y^2 + y - 1").evaluate(m).constant_value().to_double()) < 1e-6);
        CHECK(std::abs(P("x*y - 3").evaluate(m).constant_value().to_double()) < 1e-6);
    }
    // x = 0 leaves y = 1 against -3 = 0: no zero on the side branch
    CHECK(side.points.size() >= 1);
}

TEST_CASE("constructed common zeros are recovered") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    SolveOptions plane;
    plane.region = Region::plane;
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < 4; ++i) pts.push_back({Rational(num(rng), 4), Rational(num(rng), 4)});
        bool repeated = false;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) repeated = repeated || pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)];
        if (repeated) continue;
        auto [f, g] = pencil(pts, rng);
        if (f.is_zero() || g.is_zero()) continue;
        auto rep = solve_system(f, g, plane);
        if (rep.degenerate_family) continue;
        ++checked;
        for (const auto& p : rep.points) {
            REQUIRE(p.is_exact());
            bool listed = false;
            for (const auto& [x, y] : pts) listed = listed || (x == *p.exact_x && y == *p.exact_y);
            CHECK(listed);
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("index lemma") {
    QPoly f = P("x + y + x*y"), g = P("x - 2*y + y^2");
    auto r = index_lemma_check(f, g, boundary_x(), boundary_y(), Rational(0), Rational(0));
    CHECK(r.holds);
    CHECK(r.index_sign_factor == 1);

    auto pp = index_lemma_check(P("x*y"), P("1 - 16*x^2"), boundary_x(), boundary_y(), Rational(1, 4), Rational(0));
    CHECK(pp.holds);
    CHECK(pp.index_sign_factor == 1);

    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int i = 0; i < 20; ++i) {
        Rational px(c(rng), 3), py(c(rng), 5);
        auto rnd = [&] {
            QPoly p;
            for (const char* m : {"x^2", "x*y", "y^2", "x", "y"}) p += P(m).scale(Rational(c(rng)));
            return p;
        };
        std::map<std::string, Rational> at{{"x", px}, {"y", py}};
        QPoly fr = rnd(), gr = rnd();
        fr -= QPoly::constant(fr.evaluate(at).constant_value());
        gr -= QPoly::constant(gr.evaluate(at).constant_value());
        auto res = index_lemma_check(fr, gr, rnd() + P("1"), rnd() + P("2"), px, py);
        CHECK(res.holds);
    }
    CHECK_THROWS(index_lemma_check(f, g, boundary_x(), boundary_y(), Rational(1), Rational(0)));

    SolveOptions plane;
    plane.region = Region::plane;
    auto circ = solve_system(P("x^2 + y^2 - 1/9"), P("y - x"), plane);
    for (const auto& p : circ.points) {
        auto b = index_lemma_check(P("x^2 + y^2 - 1/9"), P("y - x"), boundary_x(), boundary_y(), p);
        CHECK(b.holds);
        CHECK(b.index_sign_factor == 1);
    }
}

TEST_CASE("Berlinskii configurations") {
    SolveOptions plane;
    plane.region = Region::plane;
    auto rep = solve_system(P("x^2 + y^2 - 5"), P("x*y - 2"), plane);
    auto b = berlinskii_check(rep);
    CHECK(b.kind == BerlinskiiKind::convex_alternating);
    CHECK(b.index_sum == 0);

    // all four zeros scaled into the square: same configuration for the induced field
    auto scaled = solve_system(P("x^2 + y^2 - 5/100"), P("x*y - 2/100"));
    REQUIRE(scaled.points.size() == 4);
    auto vf = VectorField::from_factors(P("x^2 + y^2 - 5/100"), P("x*y - 2/100"));
    auto induced = singularities_in_delta(vf);
    CHECK(berlinskii_check(induced).kind == BerlinskiiKind::convex_alternating);
    for (std::size_t i = 0; i < 4; ++i) CHECK(induced.points[i].index == scaled.points[i].index);

    std::mt19937 rng(3);
    auto [f, g] = pencil({{Rational(0), Rational(0)}, {Rational(4), Rational(0)}, {Rational(0), Rational(4)},
                          {Rational(1), Rational(1)}},
                         rng);
    auto tri = berlinskii_check(solve_system(f, g, plane));
    CHECK(tri.kind == BerlinskiiKind::triangle_config);
    CHECK(std::abs(tri.index_sum) == 2);

    rep.points.pop_back();
    CHECK(berlinskii_check(rep).kind == BerlinskiiKind::not_applicable);
}

TEST_CASE("contact points") {
    auto vf = family_P4().bind({{"a11", Rational(1)}, {"a02", Rational(-1, 2)}, {"b20", Rational(2)}, {"b11", Rational(1, 3)}});
    // y = 1/5: contacts are the zeros of g(x, 1/5) = -x + 2 x^2 + x/15
    auto cps = contact_points(vf, Rational(0), Rational(1), Rational(-1, 5));
    CHECK(cps.size() == 2);
    for (const auto& c : cps) {
        double x = c.x.mid().to_double();
        CHECK(std::abs(-x + 2 * x * x + x / 15) < 1e-12);
        CHECK(c.y.contains(Rational(1, 5)));
        CHECK(c.simple);
    }
    auto diag = contact_points(vf, Rational(1), Rational(-1), Rational(1, 7));
    CHECK(diag.size() <= 4);
    CHECK_THROWS_AS(contact_points(vf, Rational(2), Rational(0), Rational(-1)), std::invalid_argument);

    // the line through the two centers touches the field only at the centers
    auto p9 = family_P9();
    auto between = contact_points(p9, Rational(0), Rational(1), Rational(0),
                                  {{"alpha", Rational(0)}, {"lam", Rational(0)}, {"mu", Rational(0)}});
    REQUIRE(between.size() == 2);
    for (const auto& c : between) CHECK(c.x.lo.abs() == Rational(1, 4));
}

TEST_CASE("integration") {
    auto lin = NumericField(VectorField::from_components(P("-y"), P("x")));
    auto tr = integrate(lin, {0.1, 0.0}, 2 * std::numbers::pi);
    CHECK_FALSE(tr.truncated);
    CHECK(std::abs(tr.x.back() - 0.1) < 1e-8);
    CHECK(std::abs(tr.y.back()) < 1e-8);

    IntegrateOptions sampled;
    sampled.stride = 0.5;
    auto ts = integrate(lin, {0.1, 0.0}, 3.0, sampled);
    CHECK(ts.t.size() == 7);
    CHECK(std::abs(ts.x[2] - 0.1 * std::cos(1.0)) < 1e-9);

    auto p4 = NumericField(family_P4(), {{"a11", Rational(1)}, {"a02", Rational(1)}, {"b20", Rational(1)}, {"b11", Rational(1)}});
    auto edge = integrate(p4, {0.5, 0.1}, 20.0);
    for (double x : edge.x) CHECK(std::abs(x - 0.5) < 1e-12);

    // square invariance for random quadratic fields
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-10, 10);
    std::uniform_real_distribution<double> u(-0.49, 0.49);
    int excursions = 0;
    for (int i = 0; i < 50; ++i) {
        QPoly f, g;
        for (const char* m : {"1", "x", "y", "x^2", "x*y", "y^2"}) {
            f += P(m).scale(Rational(c(rng), 10));
            g += P(m).scale(Rational(c(rng), 10));
        }
        NumericField nf(VectorField::from_factors(f, g));
        auto t = integrate(nf, {u(rng), u(rng)}, 100.0);
        for (std::size_t k = 0; k < t.x.size(); ++k)
            if (std::abs(t.x[k]) > 0.5 + 1e-8 || std::abs(t.y[k]) > 0.5 + 1e-8) ++excursions;
    }
    CHECK(excursions == 0);
}

TEST_CASE("return map") {
    auto lin = NumericField(VectorField::from_components(P("-y"), P("x")));
    auto tab = return_map(lin, {0, 0}, {1, 0}, {0.01, 0.05, 0.1});
    for (const auto& r : tab.rows) {
        REQUIRE(r.displacement.has_value());
        CHECK(std::abs(*r.displacement) < 1e-9);
        CHECK(std::abs(r.period - 2 * std::numbers::pi) < 1e-9);
    }

    // certified center: closed orbits
    auto c2 = builtin_family("C2");
    std::map<std::string, Rational> vals;
    for (const auto& p : c2.parameters()) vals[p] = Rational(1, 2);
    auto cen = return_map(NumericField(c2, vals), {0, 0}, {1, 0}, {0.1});
    REQUIRE(cen.rows[0].displacement.has_value());
    CHECK(std::abs(*cen.rows[0].displacement) < 1e-9);

    // L1 = 2/3 (a02 a11 - b11 b20) < 0: stable focus
    auto stable = NumericField(family_P4(), {{"a11", Rational(1, 2)}, {"a02", Rational(-1, 2)}, {"b20", Rational(0)}, {"b11", Rational(0)}});
    auto st = return_map(stable, {0, 0}, {1, 0}, log_radii(1e-3, 1e-1, 5));
    for (const auto& r : st.rows) {
        REQUIRE(r.displacement.has_value());
        CHECK(*r.displacement < 0);
    }
    CHECK(st.sign_changes.empty());
    CHECK_THROWS(return_map(lin, {0, 0}, {0, 0}, {0.1}));
}
