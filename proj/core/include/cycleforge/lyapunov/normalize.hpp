#pragma once

#include "cycleforge/dynamics/vector_field.hpp"
#include "cycleforge/exactalg/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cycleforge {

class NotALinearCenter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Field x' = -y + F, y' = x + G with F, G free of constant and linear terms.
template <class K>
struct NormalizedField {
    Poly<K> F;
    Poly<K> G;
    std::vector<std::string> parameters;
    long radicand = 0;  // 0 when the scalars are rational, else d of Q(sqrt d)

    Poly<K> P() const { return F - Poly<K>::variable("y", F.vars()); }
    Poly<K> Q() const { return G + Poly<K>::variable("x", G.vars()); }
};

using NormalizedFieldQ = NormalizedField<Rational>;
using NormalizedFieldQE = NormalizedField<QuadExt>;

// Throws unless the linear part is exactly (-y, x) and there is no constant term.
template <class K>
NormalizedField<K> normalized_from(const Poly<K>& P, const Poly<K>& Q, long radicand = 0);

struct NormalizeOptions {
    // extra conformal factor a I + b J applied after the basic frame; (1, 0) keeps it
    Rational frame_a{1};
    Rational frame_b{0};
};

// Translate a linear center to the origin, bring the linear part to (-y, x) and rescale time by
// omega = sqrt(det DX(p)). The Jacobian at p must be free of parameters.
NormalizedFieldQE normalize_at(const VectorField& field, const Rational& px, const Rational& py,
                               const NormalizeOptions& opts = {});
NormalizedFieldQ to_rational(const NormalizedFieldQE& nf);

} // namespace cycleforge
