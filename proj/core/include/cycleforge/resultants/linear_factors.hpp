#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <vector>

namespace cycleforge {

struct LinearFactor {
    QPoly form;  // primitive integer linear form, first nonzero variable coefficient positive
    unsigned multiplicity = 0;
};

struct LinearFactorization {
    std::vector<LinearFactor> factors;
    QPoly remainder;  // p = remainder * prod form^multiplicity
    QPoly reassemble() const;
};

// All factors c0 + sum ci vi with integer |ci| <= coeff_bound dividing p, found by exact trial division
// after an exact filter on a random line.
LinearFactorization extract_linear_factors(const QPoly& p, int coeff_bound);

} // namespace cycleforge
