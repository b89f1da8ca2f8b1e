#pragma once

#include "cycleforge/exactalg/matrix.hpp"
#include "cycleforge/exactalg/poly.hpp"

#include <map>
#include <string>

namespace cycleforge {

// (l+m) x (l+m) Sylvester matrix: m columns of f coefficients, then l columns of g coefficients,
// leading coefficients on top. Degrees l = deg_var f, m = deg_var g; l = m = 0 gives 0 x 0.
Matrix<QPoly> sylvester(const QPoly& f, const QPoly& g, const std::string& var);
QPoly resultant(const QPoly& f, const QPoly& g, const std::string& var);

struct SpecializationCheck {
    enum class Status { consistent, degree_dropped, g_vanished };
    Status status = Status::consistent;
    bool identity_holds = false;  // R(y0) = c0(y0)^(m-p) * R_{y0}; only meaningful when consistent
    unsigned l = 0, m = 0, p = 0;
    QPoly leading_at_point;       // c0(y0)
    QPoly resultant_at_point;     // R(y0)
    QPoly specialized_resultant;  // R_{y0} = Res(f(y0), g(y0))
};

SpecializationCheck specialize_check(const QPoly& f, const QPoly& g, const std::string& var,
                                     const std::map<std::string, Rational>& point);

const char* to_string(SpecializationCheck::Status s);

} // namespace cycleforge
