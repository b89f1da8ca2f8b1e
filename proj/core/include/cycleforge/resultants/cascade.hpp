#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <string>
#include <vector>

namespace cycleforge {

struct EliminationTrace {
    int stage = 0;
    std::string eliminated_variable;
    std::vector<QPoly> inputs;
    std::vector<QPoly> resultants;           // Res(inputs[0], inputs[i], var), i >= 1
    std::vector<bool> zero_resultant;
    std::vector<QPoly> common_factors;       // factors of the gcd of the nonzero resultants, with repetition
    std::vector<QPoly> cofactor_remainders;  // resultants[i] = prod(common_factors) * cofactor_remainders[i]
    std::vector<std::vector<QPoly>> branch_factors;  // bounded linear factors of each cofactor, with repetition
    std::vector<QPoly> next_inputs;          // cofactors stripped of branch factors (non-constant only)
    std::vector<QPoly> side_branch;          // inputs plus the leading coefficient of inputs[0]

    bool verify() const;
    friend bool operator==(const EliminationTrace&, const EliminationTrace&) = default;
};

struct CascadeResult {
    std::vector<EliminationTrace> stages;
    std::string termination;
    friend bool operator==(const CascadeResult&, const CascadeResult&) = default;
};

CascadeResult cascade(const std::vector<QPoly>& system, const std::vector<std::string>& order, int coeff_bound = 4);

} // namespace cycleforge
