#include "doctest.h"

#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/io/json.hpp"
#include "cycleforge/lyapunov/normalize.hpp"

#include <filesystem>

using namespace cycleforge;

namespace {

QPoly P(const char* s) { return parse_qpoly(s); }

template <class T, class F>
void round_trip(const T& value, F&& back) {
    std::string once = io::to_json(value);
    T parsed = back(once);
    CHECK(parsed == value);
    CHECK(io::to_json(parsed) == once);
}

} // namespace

TEST_CASE("Lyapunov reports round trip") {
    auto nf = to_rational(normalize_at(family_P4(), Rational(0), Rational(0)));
    auto rep = lyapunov_quantities(nf, 3);
    round_trip(rep, io::lyapunov_from_json<Rational>);
    CHECK(io::to_json(rep) == io::to_json(lyapunov_quantities(nf, 3)));

    auto s = canned_setup("P9b");
    auto qe = lyapunov_quantities(normalize_at(s.field.bind({{"alpha", Rational(0)}}), s.px, s.py, s.frame), 2);
    round_trip(qe, io::lyapunov_from_json<QuadExt>);
}

TEST_CASE("cascade and certificates round trip") {
    round_trip(cascade({P("x^2 + y^2 - 5"), P("x*y - 2")}, {"x"}), io::cascade_from_json);
    for (const auto& label : {"C2", "C7", "D1", "C5"}) {
        auto cert = certify(builtin_family(label), Rational(0), Rational(0));
        round_trip(cert, io::certificate_from_json);
    }
}

TEST_CASE("dynamics reports round trip") {
    SolveOptions plane;
    plane.region = Region::plane;
    auto rep = solve_system(P("x^2 + y^2 - 5"), P("x*y - 2"), plane);
    round_trip(rep, io::singularities_from_json);
    round_trip(berlinskii_check(rep), io::berlinskii_from_json);
    auto p9 = family_P9();
    auto cps = contact_points(p9, Rational(0), Rational(1), Rational(0),
                              {{"alpha", Rational(0)}, {"lam", Rational(0)}, {"mu", Rational(0)}});
    round_trip(cps, io::contacts_from_json);

    auto lin = NumericField(VectorField::from_components(P("-y"), P("x")));
    IntegrateOptions sampled;
    sampled.stride = 0.5;
    auto tr = integrate(lin, {0.1, 0.0}, 3.0, sampled);
    round_trip(tr, io::trajectory_from_json);
    auto csv = io::trajectory_csv(tr);
    CHECK(csv.rfind("t,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(tr.t.size() + 1));

    auto vf = family_P4().bind({{"a11", Rational(1)}, {"a02", Rational(-1, 2)}, {"b20", Rational(2)}, {"b11", Rational(1, 3)}});
    auto table = return_map(NumericField(vf), {0.0, 0.0}, {1.0, 0.0}, {1e-2, 2e-2});
    round_trip(table, io::return_map_from_json);
}

TEST_CASE("bifurcation reports round trip") {
    auto r = ggt_analyze(canned_setup("P7"));
    round_trip(r, io::ggt_from_json);
    round_trip(hopf_order_one(canned_setup("P9c"), {}), io::hopf_from_json);
}

TEST_CASE("model inputs") {
    auto vf = io::field_from_json(R"({"f": "x + y", "g": "x - 2*y"})");
    CHECK(vf.f.has_value());
    CHECK(io::field_from_json(R"({"family": "P4"})").P == family_P4().P);
    CHECK(io::field_from_json(R"({"P": "-y", "Q": "x"})").Q == P("x"));
    CHECK_THROWS_AS(io::field_from_json(R"({"R": "x"})"), std::invalid_argument);

    try {
        io::field_from_json("{\n  \"f\": \"x\",\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    auto game = io::game_from_json(R"({"A": [[1, "x"], [0, 2]], "B": [["1/2", 0], [0, 1]], "d": 2})");
    CHECK(game.d == 2);
    CHECK_THROWS(io::game_from_json(R"({"A": [[1.5, 0], [0, 2]], "B": [[1, 0], [0, 1]]})"));
    CHECK_THROWS(io::game_from_json(R"({"A": [[1, 0]], "B": [[1, 0], [0, 1]]})"));

    auto s = io::setup_from_json(R"({
        "family": "P7",
        "terms": [{"target": "P", "term": "a*(4*x^2 - 1)*y^2", "inner": false}],
        "N": 3,
        "label": "demo"
    })");
    CHECK(s.label == "demo");
    CHECK(s.N == 3);
    CHECK(s.lambda == std::vector<std::string>{"a"});
}

TEST_CASE("atomic writes") {
    auto dir = std::filesystem::temp_directory_path() / "cycleforge_io_test";
    std::filesystem::create_directories(dir);
    auto file = dir / "out.json";
    io::write_atomic(file, "first\n");
    io::write_atomic(file, "second\n");
    CHECK(io::read_file(file) == "second\n");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(io::write_atomic(dir / "missing" / "x.json", "x"));
}
