#pragma once

#include "cycleforge/bifurcation/perturbation.hpp"
#include "cycleforge/bifurcation/ratfunc.hpp"
#include "cycleforge/exactalg/interval.hpp"
#include "cycleforge/exactalg/matrix.hpp"
#include "cycleforge/lyapunov/quantities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cycleforge {

struct MuCandidate {
    RInterval value;                // isolating interval, degenerate when exact
    std::optional<Rational> exact;
    bool simple = false;            // f_0 changes sign with nonzero derivative
    int f_ell_sign = 0;             // sign of f_ell at the candidate, 0 when it vanishes
    bool denominators_ok = true;
    std::string rejection;          // empty for an accepted candidate
    friend bool operator==(const MuCandidate&, const MuCandidate&) = default;
};

struct GGTReport {
    std::string label;
    long radicand = 0;                              // scalars live in Q(sqrt radicand)
    std::vector<std::string> mu;
    std::vector<std::string> lambda;
    Matrix<QEPoly> linear_parts;                    // N x p
    int k = 0;
    int ell = 0;
    Matrix<RatFunc<QuadExt>> M;                     // p x k
    std::vector<std::vector<RatFunc<QuadExt>>> g;   // g[j][l]: row k + j, column l < k - 1
    std::vector<RatFunc<QuadExt>> f;                // f_0, f_1, ...
    std::vector<MuCandidate> candidates;
    std::optional<MuCandidate> mu0;
    bool identity_rows_verified = false;
    enum class Verdict { cycles, conditions_fail } verdict = Verdict::conditions_fail;
    int cycles = 0;                                 // k + ell when the conditions hold
    std::string reason;

    // f_i as a polynomial in mu (throws when it has a nonconstant denominator)
    QEPoly f_poly(std::size_t i) const { return f.at(i).as_polynomial(); }
    friend bool operator==(const GGTReport&, const GGTReport&) = default;
};
const char* to_string(GGTReport::Verdict v);

struct GGTOptions {
    std::optional<int> N;
    Pinning pinning = Pinning::x_power;
};

GGTReport ggt_analyze(const PerturbationSetup& setup, const GGTOptions& opts = {});

// Rank over the rational function field, by fraction-free elimination.
template <class K>
int rank_over_fraction_field(Matrix<Poly<K>> m);

struct HopfReport {
    enum class Kind { one_cycle, none } kind = Kind::none;
    QEPoly L1;             // first Lyapunov quantity at alpha = 0, in the remaining parameters
    Rational trace_alpha;  // d trace / d alpha at the point
    long radicand = 0;
    std::string condition; // sign condition on alpha for the cycle
    friend bool operator==(const HopfReport&, const HopfReport&) = default;
};
const char* to_string(HopfReport::Kind k);

// Parameters in binding are fixed; alpha is the unfolding parameter.
HopfReport hopf_order_one(const PerturbationSetup& setup, const std::map<std::string, Rational>& binding);

enum class Symmetry { odd_symmetry, none };

// Total count when every nest around a point off the symmetry fixed point has a mirror image.
// Throws when the field is not invariant under (x, y, t) -> (-x, -y, -t).
int mirror_count(const VectorField& field, const Rational& px, const Rational& py, int per_nest, Symmetry symmetry);
int mirror_count(const PerturbationSetup& setup, int per_nest, Symmetry symmetry);

} // namespace cycleforge
