#pragma once

#include "cycleforge/dynamics/vector_field.hpp"
#include "cycleforge/exactalg/interval.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cycleforge {

enum class SingularityType { saddle, antisaddle_node, antisaddle_focus, linear_center, degenerate };
const char* to_string(SingularityType t);

struct Singularity {
    RInterval x;
    RInterval y;
    std::optional<Rational> exact_x;
    std::optional<Rational> exact_y;
    int det_sign = 0;
    int trace_sign = 0;
    bool trace_certified = true;
    SingularityType type = SingularityType::degenerate;
    std::optional<int> index;  // sgn det for simple points

    bool is_exact() const { return exact_x && exact_y; }
    double mid_x() const { return x.mid().to_double(); }
    double mid_y() const { return y.mid().to_double(); }
    friend bool operator==(const Singularity&, const Singularity&) = default;
};

struct SingularityReport {
    std::vector<Singularity> points;
    bool degenerate_family = false;   // f, g share a curve of zeros
    std::string diagnostic;
    std::optional<QPoly> common_component;
    // x-values where the leading coefficients in y of both equations vanish (roots of their gcd)
    std::vector<RInterval> side_branch;
    friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

enum class Region { open_square, plane };

struct SolveOptions {
    Rational box_width{1, 1000000000};  // isolating boxes are refined below this width
    Region region = Region::open_square;
};

// Real common zeros of two bivariate polynomials in x, y with rational coefficients.
SingularityReport solve_system(const QPoly& f, const QPoly& g, const SolveOptions& opts = {});

// Zeros of f = g = 0 (or of P = Q = 0 for unstructured fields) inside the region, classified by the
// Jacobian of (P, Q). Every parameter must be bound.
SingularityReport singularities_in_delta(const VectorField& field, const std::map<std::string, Rational>& binding = {},
                                         const SolveOptions& opts = {});
// Same, for the plane or any region.
SingularityReport singularities(const VectorField& field, const std::map<std::string, Rational>& binding,
                                const SolveOptions& opts);

struct IndexLemmaResult {
    RInterval lhs;  // det D(uf, vg)(p)
    RInterval rhs;  // u(p) v(p) det D(f, g)(p)
    bool exact = false;
    bool holds = false;
    int index_sign_factor = 0;  // sgn(u(p) v(p))
};

// det D(uf, vg)(p) = u(p) v(p) det D(f, g)(p) at a common zero p of f and g.
IndexLemmaResult index_lemma_check(const QPoly& f, const QPoly& g, const QPoly& u, const QPoly& v, const Rational& px,
                                   const Rational& py);
// Boxed variant: both sides enclosed over the box, holds when the enclosures overlap.
IndexLemmaResult index_lemma_check(const QPoly& f, const QPoly& g, const QPoly& u, const QPoly& v,
                                   const Singularity& p);

enum class BerlinskiiKind { convex_alternating, triangle_config, counterexample, not_applicable };
const char* to_string(BerlinskiiKind k);

struct BerlinskiiResult {
    BerlinskiiKind kind = BerlinskiiKind::not_applicable;
    // triangle case: true when the inner point is the antisaddle
    bool inner_antisaddle = false;
    int index_sum = 0;
    std::vector<std::size_t> hull;  // indices into the report, counter-clockwise
    std::string diagnostic;
    friend bool operator==(const BerlinskiiResult&, const BerlinskiiResult&) = default;
};

BerlinskiiResult berlinskii_check(const SingularityReport& report);

struct ContactPoint {
    RInterval x;
    RInterval y;
    bool simple = true;
    friend bool operator==(const ContactPoint&, const ContactPoint&) = default;
};

// Points of a*x + b*y + c = 0 where the field is tangent to the line.
// Throws std::invalid_argument for an invariant line.
std::vector<ContactPoint> contact_points(const VectorField& field, const Rational& a, const Rational& b,
                                         const Rational& c, const std::map<std::string, Rational>& binding = {});

} // namespace cycleforge
