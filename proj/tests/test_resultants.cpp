#include "doctest.h"

#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/resultants/cascade.hpp"
#include "cycleforge/resultants/gcd.hpp"
#include "cycleforge/resultants/linear_factors.hpp"
#include "cycleforge/resultants/resultant.hpp"
#include "cycleforge/resultants/roots.hpp"

#include <random>

using namespace cycleforge;

namespace {

QPoly P(const char* s, VarList v = nullptr) { return parse_qpoly(s, v); }

const char* kL1 = "2/3*a11*a02 - 2/3*b20*b11";
const char* kL2 =
    "-14/15*a11^3*a02 - 26/9*a11^2*a02*b20 + 16/15*a11^2*b20*b11 + 2/3*a11*a02^3 + 2/5*a11*a02^2*b11"
    " - 20/9*a11*a02*b20^2 - 32/15*a11*a02 + 106/45*a11*b20^2*b11 + 2/15*a02*b20*b11^2 + 14/9*b20^3*b11"
    " - 2/15*b20*b11^3 + 32/15*b20*b11";

// dense univariate arithmetic over Q, low degree first
using Dense = std::vector<Rational>;

void trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense dense_mod(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int gcd_degree(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = dense_mod(a, b);
        a = b;
        b = r;
    }
    return static_cast<int>(a.size()) - 1;
}

// resultant by the Euclidean recurrence
Rational euclid_resultant(Dense f, Dense g) {
    trim(f);
    trim(g);
    long l = static_cast<long>(f.size()) - 1, m = static_cast<long>(g.size()) - 1;
    if (m == 0) return g[0].pow(l);
    if (l == 0) return f[0].pow(m);
    Dense r = dense_mod(f, g);
    if (r.empty()) return Rational(0);
    long k = static_cast<long>(r.size()) - 1;
    Rational s = ((l * m) % 2) ? Rational(-1) : Rational(1);
    return s * g.back().pow(l - k) * euclid_resultant(g, r);
}

QPoly to_poly(const Dense& a, const VarList& v) {
    QPoly x = QPoly::variable("x", v), r(v);
    for (std::size_t i = 0; i < a.size(); ++i) r += x.pow(static_cast<unsigned>(i)).scale(a[i]);
    return r;
}

Dense random_dense(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> c(-6, 6);
    Dense a(deg + 1);
    for (auto& x : a) x = Rational(c(rng));
    if (a.back().is_zero()) a.back() = Rational(1);
    return a;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

} // namespace

TEST_CASE("sylvester layout") {
    auto s = sylvester(P("x - 1"), P("x + 1"), "x");
    REQUIRE(s.rows() == 2);
    CHECK(s(0, 0) == QPoly::constant(Rational(1)));
    CHECK(s(0, 1) == QPoly::constant(Rational(1)));
    CHECK(s(1, 0) == QPoly::constant(Rational(-1)));
    CHECK(s(1, 1) == QPoly::constant(Rational(1)));

    QPoly l1 = P(kL1), l2 = P(kL2);
    auto m = sylvester(l1, l2, "a11");
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 4);
    // first column carries L1 = (2/3 a02) a11 - 2/3 b20 b11
    CHECK(m(0, 0) == P("2/3*a02"));
    CHECK(m(1, 0) == P("-2/3*b20*b11"));
    CHECK(m(2, 0).is_zero());
    CHECK(m(0, 3) == P("-14/15*a02"));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(!m(i, j).contains("a11"));
}

TEST_CASE("resultant basics") {
    CHECK(resultant(P("x^2 - 1"), P("x - 1"), "x").is_zero());
    CHECK(resultant(P("x - 1"), P("x + 1"), "x") == QPoly::constant(Rational(2)));
    CHECK(resultant(P("3"), P("x^2 + 1"), "x") == QPoly::constant(Rational(9)));
    CHECK(resultant(P("x^3 + 1"), P("2"), "x") == QPoly::constant(Rational(8)));
    CHECK(resultant(P("3"), P("5"), "x") == QPoly::constant(Rational(1)));
    CHECK(resultant(P("x + y"), P("x - y"), "x") == P("-2*y"));
    QPoly r = resultant(P(kL1), P(kL2), "a11");
    CHECK(!r.contains("a11"));
}

TEST_CASE("resultant against Euclid on random univariate pairs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> deg(0, 4), share(0, 1);
    auto v = make_vars({"x"});
    int zeros = 0;
    for (int n = 0; n < 500; ++n) {
        Dense f = random_dense(rng, deg(rng)), g = random_dense(rng, deg(rng));
        if (share(rng)) {
            Dense h = random_dense(rng, 1);
            f = dense_mul(f, h);
            g = dense_mul(g, h);
        }
        QPoly r = resultant(to_poly(f, v), to_poly(g, v), "x");
        REQUIRE(r.is_constant());
        Rational val = r.is_zero() ? Rational(0) : r.constant_value();
        CHECK(val == euclid_resultant(f, g));
        CHECK(val.is_zero() == (gcd_degree(f, g) >= 1));
        zeros += val.is_zero();
    }
    CHECK(zeros > 100);
}

TEST_CASE("specialization identity") {
    auto c = specialize_check(P(kL1), P(kL2), "a11", {{"a02", Rational(0)}, {"b20", Rational(1)}, {"b11", Rational(2)}});
    CHECK(c.status == SpecializationCheck::Status::degree_dropped);
    auto c2 = specialize_check(P(kL1), P(kL2), "a11", {{"a02", Rational(3)}, {"b20", Rational(1)}, {"b11", Rational(2)}});
    CHECK(c2.status == SpecializationCheck::Status::consistent);
    CHECK(c2.leading_at_point == QPoly::constant(Rational(2)));
    CHECK(c2.identity_holds);

    auto c3 = specialize_check(P("x"), P("x"), "x", {{"y", Rational(5)}});
    CHECK(c3.status == SpecializationCheck::Status::consistent);
    CHECK(c3.identity_holds);
    CHECK(c3.resultant_at_point.is_zero());

    auto c4 = specialize_check(P("x^2 + y"), P("(y - 1)*x + y - 1"), "x", {{"y", Rational(1)}});
    CHECK(c4.status == SpecializationCheck::Status::g_vanished);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> cf(-5, 5), dg(1, 3), num(-20, 20), den(1, 7);
    auto v = make_vars({"x", "y"});
    QPoly x = QPoly::variable("x", v), y = QPoly::variable("y", v);
    auto rnd = [&](int d) {
        QPoly p(v);
        for (int i = 0; i <= d; ++i) {
            QPoly c = QPoly::constant(Rational(cf(rng)), v) + y.scale(Rational(cf(rng))) + y.pow(2).scale(Rational(cf(rng)));
            if (i == d && c.is_zero()) c = y + QPoly::constant(Rational(1), v);
            p += c * x.pow(static_cast<unsigned>(i));
        }
        return p;
    };
    int checked = 0, dropped_p = 0;
    while (checked < 100) {
        QPoly f = rnd(dg(rng)), g = rnd(dg(rng));
        Rational y0(num(rng), den(rng));
        auto r = specialize_check(f, g, "x", {{"y", y0}});
        if (r.status != SpecializationCheck::Status::consistent) continue;
        CHECK(r.identity_holds);
        if (r.p < r.m) ++dropped_p;
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("multivariate gcd") {
    CHECK(multivariate_gcd(P("a02*b11"), P("a02*b20")) == P("a02"));
    QPoly p = P("3*x^2*y - 3*y");
    CHECK(multivariate_gcd(p, QPoly()) == unit_normal(p));
    QPoly a = P("(x + y)^2*(x - 2*z)*(y*z + 1)"), b = P("(x + y)*(y*z + 1)^2*(z - 3)");
    QPoly g = multivariate_gcd(a, b);
    CHECK(g == unit_normal(P("(x + y)*(y*z + 1)")));
    CHECK(a.divide_exact(g).has_value());
    CHECK(b.divide_exact(g).has_value());
    CHECK(multivariate_gcd(P("x^2 + y^2 + 1"), P("x + y")).is_constant());
    CHECK(multivariate_gcd({P("x*y*z"), P("x*z^2"), P("x^3*z")}) == P("x*z"));
}

TEST_CASE("linear factor extraction") {
    QPoly p = P("(a02 - b20)^2*(a02 + b11)");
    auto lf = extract_linear_factors(p, 1);
    REQUIRE(lf.factors.size() == 2);
    CHECK(lf.remainder.is_constant());
    CHECK(lf.reassemble() == p);
    unsigned m_sum = 0;
    for (const auto& f : lf.factors) {
        if (f.form == P("a02 - b20")) CHECK(f.multiplicity == 2);
        if (f.form == P("a02 + b11")) CHECK(f.multiplicity == 1);
        m_sum += f.multiplicity;
    }
    CHECK(m_sum == 3);

    QPoly q = P("a02^2 + b11^2 + 1");
    auto lq = extract_linear_factors(q, 4);
    CHECK(lq.factors.empty());
    CHECK(lq.remainder == q);

    QPoly r2 = P("-16/405*a02*b11*b20*(a02 + b11)*(a02 - b20)*(a02 + b20)*(5*a02 - b11)");
    auto lr = extract_linear_factors(r2, 2);
    CHECK(lr.factors.size() == 6);
    CHECK(lr.reassemble() == r2);
    CHECK(unit_normal(lr.remainder) == P("5*a02 - b11"));
    CHECK(lr.remainder.degree().value() == 1);

    auto lr5 = extract_linear_factors(r2, 5);
    CHECK(lr5.factors.size() == 7);

    QPoly w = P("(2*x - y + 3)*(x + 2*y - 4)^3*(x^2 + y^2 + 1)");
    auto lw = extract_linear_factors(w, 4);
    CHECK(lw.factors.size() == 2);
    CHECK(lw.reassemble() == w);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int n = 0; n < 20; ++n) {
        QPoly acc = QPoly::constant(Rational(c(rng) == 0 ? 7 : 2));
        for (int k = 0; k < 3; ++k) {
            QPoly f = P("u").scale(Rational(c(rng))) + P("v").scale(Rational(c(rng))) + P("w").scale(Rational(c(rng))) +
                      QPoly::constant(Rational(c(rng)));
            acc = acc * f;
        }
        acc = acc * P("u^2 + v*w + 5");
        auto l = extract_linear_factors(acc, 3);
        CHECK(l.reassemble() == acc);
    }
}

TEST_CASE("real root isolation") {
    QPoly h = P("175*mu^4 + 128520*mu^2 - 44944");
    auto ivs = isolate_real_roots(h);
    REQUIRE(ivs.size() == 2);
    UPoly uh = UPoly::from(h);
    for (auto& iv : ivs) {
        auto r = refine(uh, iv, Rational(1, 1000000));
        CHECK(r.width() <= Rational(1, 1000000));
        CHECK(std::abs(std::abs(r.midpoint()) - 0.591223) < 1e-5);
        CHECK(r.sign_lo * r.sign_hi < 0);
    }
    CHECK(ivs[0].hi <= ivs[1].lo);
    CHECK(isolate_real_roots(P("mu^2 + 1")).empty());
    auto f0 = isolate_real_roots(P("2/15*(mu + 1)*(mu - 5)"));
    REQUIRE(f0.size() == 2);
    CHECK(f0[0].interval().contains(Rational(-1)));
    CHECK(f0[1].interval().contains(Rational(5)));
    CHECK_THROWS(isolate_real_roots(QPoly()));

    std::mt19937 rng(9);
    std::uniform_int_distribution<int> cf(-9, 9), dg(1, 7);
    for (int n = 0; n < 100; ++n) {
        Dense a = random_dense(rng, dg(rng));
        if (n % 3 == 0) a = dense_mul(a, dense_mul(Dense{Rational(-1), Rational(1)}, Dense{Rational(-1), Rational(1)}));
        UPoly u = UPoly::from(to_poly(a, make_vars({"x"})));
        auto seq = sturm_sequence(u);
        Rational big(1000000);
        int expected = sign_variations(seq, -big) - sign_variations(seq, big);
        auto roots = isolate_real_roots(u);
        CHECK(static_cast<int>(roots.size()) == expected);
        UPoly sf = squarefree_part(u);
        for (const auto& iv : roots) {
            if (iv.exact) {
                CHECK(sf.sign_at(*iv.exact) == 0);
            } else {
                CHECK(sf.sign_at(iv.lo) * sf.sign_at(iv.hi) < 0);
                CHECK(count_roots_between(u, iv.lo, iv.hi) == 1);
            }
        }
    }
}

TEST_CASE("elimination cascade") {
    auto r = cascade({P("x + y"), P("x - y")}, {"x"});
    REQUIRE(r.stages.size() == 1);
    CHECK(r.stages[0].resultants[0] == P("-2*y"));
    CHECK(r.stages[0].verify());
    REQUIRE(r.stages[0].branch_factors[0].size() == 1);
    CHECK(r.stages[0].branch_factors[0][0] == P("y"));

    auto q = cascade({P("x^2 + y^2 - 5"), P("x*y - 2")}, {"x"});
    REQUIRE(q.stages.size() == 1);
    QPoly quartic = q.stages[0].resultants[0];
    // x = 2/y substituted and cleared: y^4 - 5 y^2 + 4
    CHECK(unit_normal(quartic) == P("y^4 - 5*y^2 + 4"));
    auto roots = isolate_real_roots(quartic);
    REQUIRE(roots.size() == 4);
    std::vector<Rational> want{Rational(-2), Rational(-1), Rational(1), Rational(2)};
    for (std::size_t i = 0; i < 4; ++i) CHECK(roots[i].interval().contains(want[i]));
    CHECK(q.stages[0].branch_factors[0].size() == 4);
    CHECK(q.stages[0].side_branch.size() == 2);

    auto z = cascade({P("x*y"), P("x*y*(x + 1)")}, {"x", "y"});
    REQUIRE(z.stages.size() == 1);
    CHECK(z.stages[0].zero_resultant[0]);
    CHECK(z.termination == "all resultants vanish identically");

    auto c3 = cascade({P("x + y + z"), P("x - y + 2*z^2"), P("x*y - z - 3")}, {"x", "y"});
    REQUIRE(!c3.stages.empty());
    for (const auto& s : c3.stages) CHECK(s.verify());
    CHECK_THROWS(cascade({P("x")}, {"x"}));
}
