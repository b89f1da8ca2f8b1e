#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <string>
#include <vector>

namespace cycleforge {

// gcd up to a rational unit, normalized with unit_normal; gcd(p, 0) = unit_normal(p).
QPoly multivariate_gcd(const QPoly& p, const QPoly& q);
QPoly multivariate_gcd(const std::vector<QPoly>& ps);

// gcd of the coefficients of p viewed as a polynomial in var.
QPoly content_in(const QPoly& p, const std::string& var);
QPoly primitive_part_in(const QPoly& p, const std::string& var);
// lc(b)^k a = q b + r with deg_var r < deg_var b (sparse pseudo-division, k not fixed).
QPoly pseudo_remainder(const QPoly& a, const QPoly& b, const std::string& var);

} // namespace cycleforge
