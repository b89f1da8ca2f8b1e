#pragma once

#include "cycleforge/dynamics/vector_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cycleforge {

enum class SymmetryLine { x_zero, y_zero, y_eq_x, y_eq_minus_x };
const char* to_string(SymmetryLine l);

// Lines among x=0, y=0, y=x, y=-x for which the field is reversible, as exact identities.
std::vector<SymmetryLine> reversibility(const VectorField& field);
bool reversible_in(const VectorField& field, SymmetryLine line);

// K with P F_x + Q F_y = K F, or nullopt when F is not invariant.
std::optional<QPoly> cofactor(const VectorField& field, const QPoly& F);

struct DarbouxFactor {
    QPoly curve;
    Rational exponent;
    QPoly cofactor;
    friend bool operator==(const DarbouxFactor&, const DarbouxFactor&) = default;
};

struct SeparableSplit {
    QPoly fx, gy;  // P = fx(x) * gy(y)
    QPoly hx, ky;  // Q = hx(x) * ky(y)
    friend bool operator==(const SeparableSplit&, const SeparableSplit&) = default;
};

struct CenterCertificate {
    enum class Kind { reversible, darboux, separable, none };
    Kind kind = Kind::none;
    SymmetryLine line = SymmetryLine::x_zero;  // reversible
    std::vector<DarbouxFactor> factors;        // darboux
    std::optional<SeparableSplit> split;       // separable
    std::string witness;

    // Re-checks the identity from scratch.
    bool verify(const VectorField& field) const;
    friend bool operator==(const CenterCertificate&, const CenterCertificate&) = default;
};
const char* to_string(CenterCertificate::Kind k);

// Smallest subset of the invariant curves with div X + sum l_i K_i = 0 for rational l_i.
std::optional<CenterCertificate> darboux_search(const VectorField& field, const std::vector<QPoly>& curves);

std::optional<SeparableSplit> separable_split(const VectorField& field);
bool separable_check(const VectorField& field);

// Invariant lines u x + v y + 1 = 0: linear common factors of f and g (symbolic coefficients allowed)
// and, for fields without parameters, all rational solutions of the ansatz.
std::vector<QPoly> invariant_lines(const VectorField& field);

// The point must be a linear center. Tries reversibility (lines through the point), then Darboux
// with {4x^2-1, 4y^2-1}, the extra curves and discovered invariant lines, then separability.
CenterCertificate certify(const VectorField& field, const Rational& px, const Rational& py,
                          const std::vector<QPoly>& extra_curves = {});

} // namespace cycleforge
