#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cycleforge {

enum class FieldClass { X_d, X_d0, general };
const char* to_string(FieldClass c);

// 4x^2 - 1 and 4y^2 - 1
QPoly boundary_x();
QPoly boundary_y();
// Ring with x, y in front followed by every other variable of the arguments.
VarList xy_ring(std::initializer_list<const QPoly*> ps);

// Planar polynomial field (P, Q) in the variables x, y; every other variable is a parameter.
struct VectorField {
    QPoly P;
    QPoly Q;
    std::optional<QPoly> f;  // P = (4x^2 - 1) f
    std::optional<QPoly> g;  // Q = (4y^2 - 1) g
    unsigned d = 0;          // max degree of f, g in (x, y)
    FieldClass field_class = FieldClass::general;

    static VectorField from_factors(const QPoly& f, const QPoly& g);
    // Detects the factored structure when both divisibilities hold.
    static VectorField from_components(const QPoly& P, const QPoly& Q);

    bool has_square_structure() const { return f.has_value(); }
    std::vector<std::string> parameters() const;
    VectorField substitute(const std::map<std::string, QPoly>& images) const;
    VectorField bind(const std::map<std::string, Rational>& values) const;
    QPoly divergence() const;
    // Jacobian entries [[P_x, P_y], [Q_x, Q_y]] evaluated at a rational point.
    std::array<QPoly, 4> jacobian_at(const Rational& x, const Rational& y) const;
};

} // namespace cycleforge
