#include "cycleforge/dynamics/game.hpp"

#include <stdexcept>

namespace cycleforge {

GameModel GameModel::make(PayoffMatrix A, PayoffMatrix B, std::optional<unsigned> d) {
    unsigned top = 0;
    for (const auto* M : {&A, &B})
        for (const auto& row : *M)
            for (const auto& e : row) {
                for (const auto& v : e.var_names())
                    if (v != "x" && v != "y" && e.contains(v))
                        throw std::invalid_argument("payoff entry uses variable " + v + ": " + e.to_string());
                if (!e.is_zero()) top = std::max(top, e.degree().value());
            }
    GameModel g{std::move(A), std::move(B), d.value_or(top + 1)};
    if (g.d == 0 || top + 1 > g.d)
        throw std::invalid_argument("payoff degree " + std::to_string(top) + " exceeds d - 1 = " +
                                    std::to_string(static_cast<int>(g.d) - 1));
    return g;
}

VectorField build_from_game(const GameModel& m) {
    QPoly x = QPoly::variable("x"), y = QPoly::variable("y");
    const auto& A = m.A;
    const auto& B = m.B;
    QPoly fs = A[1][1] - A[0][1] + (A[0][1] + A[1][0] - A[0][0] - A[1][1]) * y;
    QPoly gs = B[1][1] - B[0][1] + (B[0][1] + B[1][0] - B[0][0] - B[1][1]) * x;
    QPoly half = QPoly::constant(Rational(1, 2));
    std::map<std::string, QPoly> shift{{"x", x + half}, {"y", y + half}};
    QPoly f = fs.substitute(shift), g = gs.substitute(shift);
    VectorField vf = VectorField::from_factors(f, g);
    vf.d = std::max(vf.d, m.d);
    vf.field_class = FieldClass::X_d0;
    for (const auto& [c, e] : {std::pair{&f, std::vector<unsigned>{vf.d, 0}}, std::pair{&g, std::vector<unsigned>{0, vf.d}}})
        if (!c->extract({"x", "y"}, e).is_zero()) vf.field_class = FieldClass::X_d;
    return vf;
}

} // namespace cycleforge
