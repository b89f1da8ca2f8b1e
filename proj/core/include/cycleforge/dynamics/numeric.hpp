#pragma once

#include "cycleforge/dynamics/vector_field.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cycleforge {

// Double-precision evaluator for a field with all parameters bound.
class NumericField {
public:
    explicit NumericField(const VectorField& field, const std::map<std::string, Rational>& binding = {});
    std::array<double, 2> operator()(double x, double y) const;
    std::array<double, 4> jacobian(double x, double y) const;

private:
    struct Term {
        double c;
        unsigned i, j;
    };
    static std::vector<Term> compile(const QPoly& p);
    static double eval(const std::vector<Term>& t, double x, double y);
    std::vector<Term> P_, Q_, Px_, Py_, Qx_, Qy_;
    // P = (4x^2 - 1) f and Q = (4y^2 - 1) g evaluated in factored form when available
    bool factored_ = false;
    std::vector<Term> f_, g_;
};

struct IntegrateOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double stride = 0.0;  // sample spacing in time; 0 keeps the accepted steps only
    double h0 = 1e-3;
    std::size_t max_steps = 2000000;
};

struct Trajectory {
    std::vector<double> t, x, y;
    bool truncated = false;
    std::string diagnostic;
    std::size_t steps = 0;
    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Adaptive Dormand-Prince 5(4) with dense output.
Trajectory integrate(const NumericField& field, std::array<double, 2> x0, double tmax, const IntegrateOptions& opts = {});

struct ReturnRow {
    double radius = 0;
    std::optional<double> displacement;  // signed radial displacement after one turn
    double period = 0;
    std::string diagnostic;
    friend bool operator==(const ReturnRow&, const ReturnRow&) = default;
};

struct ReturnMapOptions {
    IntegrateOptions integrate;
    double event_tol = 1e-12;     // bisection tolerance in time
    double guard = 0.45;          // trajectories leaving this distance from the focus are reported
    double tmax = 1e4;
};

struct ReturnMapTable {
    std::vector<ReturnRow> rows;
    // consecutive radii between which the displacement changes sign
    std::vector<std::pair<double, double>> sign_changes;
    friend bool operator==(const ReturnMapTable&, const ReturnMapTable&) = default;
};

// Poincare return map on the ray focus + s * direction, s > 0.
ReturnMapTable return_map(const NumericField& field, std::array<double, 2> focus, std::array<double, 2> direction,
                          const std::vector<double>& radii, const ReturnMapOptions& opts = {});
// Logarithmically spaced radii.
std::vector<double> log_radii(double lo, double hi, std::size_t n);

} // namespace cycleforge
