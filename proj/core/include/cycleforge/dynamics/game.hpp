#pragma once

#include "cycleforge/dynamics/vector_field.hpp"

#include <array>

namespace cycleforge {

using PayoffMatrix = std::array<std::array<QPoly, 2>, 2>;

// Two-player game with payoff entries polynomial in the population shares (x, y).
struct GameModel {
    PayoffMatrix A;
    PayoffMatrix B;
    unsigned d = 1;  // entries have degree <= d - 1

    // d defaults to one more than the largest entry degree; throws when an entry exceeds d - 1
    // or uses variables other than x, y.
    static GameModel make(PayoffMatrix A, PayoffMatrix B, std::optional<unsigned> d = std::nullopt);
};

// Replicator dynamics x' = x(x-1) f*(x, y), y' = y(y-1) g*(x, y), moved to the square centered at the origin
// with time scaled by 4, so that P = (4x^2 - 1) f*(x + 1/2, y + 1/2).
VectorField build_from_game(const GameModel& model);

} // namespace cycleforge
