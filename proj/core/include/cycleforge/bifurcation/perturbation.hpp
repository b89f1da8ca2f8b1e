#pragma once

#include "cycleforge/dynamics/vector_field.hpp"
#include "cycleforge/lyapunov/normalize.hpp"

#include <string>
#include <vector>

namespace cycleforge {

enum class Target { P, Q };

// One perturbation term. inner terms enter f (resp. g), i.e. P gains (4x^2 - 1) * term;
// outer terms are added to P (resp. Q) directly and must keep the divisibility.
struct PerturbationTerm {
    Target target = Target::P;
    QPoly term;
    bool inner = true;
};

struct PerturbationSetup {
    std::string label;
    VectorField base;
    VectorField field;                 // perturbed
    std::vector<std::string> mu;       // parameters of the base family
    std::vector<std::string> lambda;   // perturbation parameters
    std::string alpha = "alpha";       // trace-breaking parameter, set to 0 for the analysis
    Rational px{0}, py{0};             // the center under study
    NormalizeOptions frame;
    int N = 4;                         // number of Lyapunov quantities
    std::map<std::string, Rational> fixed;  // parameters held at given values
};

// Adds the terms to the base field. Throws std::invalid_argument naming the first term that breaks
// the invariance of the lines 4x^2 - 1 = 0, 4y^2 - 1 = 0. Each term must be linear in exactly one
// parameter outside the base family; the alpha symbol may appear in any term.
PerturbationSetup build_perturbation(const VectorField& base, const std::vector<PerturbationTerm>& terms,
                                     const std::string& alpha = "alpha");

// Canned setups: "P7", "P8", "P9b", "P9c".
PerturbationSetup canned_setup(const std::string& label);
std::vector<std::string> canned_setup_labels();

} // namespace cycleforge
