#include "cycleforge/resultants/resultant.hpp"

namespace cycleforge {

Matrix<QPoly> sylvester(const QPoly& f0, const QPoly& g0, const std::string& var) {
    if (f0.is_zero() || g0.is_zero()) throw std::invalid_argument("sylvester: zero polynomial");
    VarList vars = union_vars(f0.vars(), g0.vars());
    QPoly f = f0.with_vars(vars), g = g0.with_vars(vars);
    auto fc = f.coefficients_in(var), gc = g.coefficients_in(var);
    std::size_t l = fc.size() - 1, m = gc.size() - 1, n = l + m;
    Matrix<QPoly> s(n, n, QPoly(vars));
    // leading coefficient first: c_k multiplies var^(l-k)
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= l; ++k) s(j + k, j) = fc[l - k];
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t k = 0; k <= m; ++k) s(j + k, m + j) = gc[m - k];
    return s;
}

QPoly resultant(const QPoly& f, const QPoly& g, const std::string& var) {
    Matrix<QPoly> s = sylvester(f, g, var);
    if (s.rows() == 0) return QPoly::constant(Rational(1), union_vars(f.vars(), g.vars()));
    return determinant(std::move(s));
}

const char* to_string(SpecializationCheck::Status s) {
    switch (s) {
    case SpecializationCheck::Status::consistent: return "consistent";
    case SpecializationCheck::Status::degree_dropped: return "degree_dropped";
    case SpecializationCheck::Status::g_vanished: return "g_vanished";
    }
    return "?";
}

SpecializationCheck specialize_check(const QPoly& f, const QPoly& g, const std::string& var,
                                     const std::map<std::string, Rational>& point) {
    SpecializationCheck out;
    out.l = f.degree_in(var).value();
    out.m = g.degree_in(var).value();
    QPoly r = resultant(f, g, var);
    out.resultant_at_point = r.evaluate(point);
    out.leading_at_point = f.leading_coeff_in(var).evaluate(point);
    QPoly fs = f.evaluate(point), gs = g.evaluate(point);
    if (gs.is_zero()) {
        out.status = SpecializationCheck::Status::g_vanished;
        return out;
    }
    out.p = gs.degree_in(var).value();
    if (out.leading_at_point.is_zero()) {
        out.status = SpecializationCheck::Status::degree_dropped;
        return out;
    }
    out.specialized_resultant = resultant(fs, gs, var);
    QPoly rhs = out.leading_at_point.pow(out.m - out.p) * out.specialized_resultant;
    out.identity_holds = rhs == out.resultant_at_point;
    return out;
}

} // namespace cycleforge
