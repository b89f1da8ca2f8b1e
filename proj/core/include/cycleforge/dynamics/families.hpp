#pragma once

#include "cycleforge/dynamics/vector_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace cycleforge {

// Built-in families. Parameter names follow the f, g coefficient convention a_ij, b_ij.
VectorField family_P4();  // f = y + a11 x y + a02 y^2, g = -x + b20 x^2 + b11 x y
VectorField family_P5();  // full quadratic f, g with linear part (y, -x)
VectorField family_P7();  // C4 member with parameter mu
VectorField family_P8();  // D7 member with parameter mu
VectorField family_P9();  // two symmetric centers at (+-1/4, 0); parameters lam, alpha, mu

// Substitutions realizing the center conditions C1..C7 (on P4) and D1..D9 (on P5).
const std::vector<std::string>& center_condition_labels();
std::map<std::string, QPoly> center_condition(const std::string& label);
// "P4", "P5", "P7", "P8", "P9" or a condition label (the family restricted to it).
VectorField builtin_family(const std::string& label);
std::vector<std::string> builtin_family_labels();

} // namespace cycleforge
