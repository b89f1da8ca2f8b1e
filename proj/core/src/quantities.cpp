#include "cycleforge/lyapunov/quantities.hpp"

#include <stdexcept>

namespace cycleforge {

const char* to_string(Pinning p) {
    return p == Pinning::x_power ? "coefficient of x^k in H_k set to 0 for even k"
                                 : "coefficient of y^k in H_k set to 0 for even k";
}

const char* to_string(FocusKind k) {
    switch (k) {
    case FocusKind::center_candidate: return "center_candidate";
    case FocusKind::stable_focus: return "stable_focus";
    case FocusKind::unstable_focus: return "unstable_focus";
    }
    return "?";
}

namespace {

const std::vector<std::string> kXY{"x", "y"};

// x, y sit at positions 0 and 1 of the ring
template <class K>
std::vector<Poly<K>> homogeneous_parts(const Poly<K>& p, int top) {
    std::vector<std::vector<typename Poly<K>::Term>> parts(static_cast<std::size_t>(top) + 1);
    for (const auto& t : p.terms()) {
        unsigned d = t.first[0] + t.first[1];
        if (d <= static_cast<unsigned>(top)) parts[d].push_back(t);
    }
    std::vector<Poly<K>> out;
    for (auto& v : parts) out.push_back(Poly<K>::from_terms(p.vars(), std::move(v)));
    return out;
}

template <class K>
Poly<K> xy_monomial(const VarList& ring, unsigned i, unsigned j) {
    Monomial m;
    m.set(0, static_cast<std::uint16_t>(i));
    m.set(1, static_cast<std::uint16_t>(j));
    return Poly<K>::from_terms(ring, {{m, K(1)}});
}

template <class K>
VarList ring_of(const NormalizedField<K>& nf) {
    return union_vars(union_vars(make_vars(kXY), nf.F.vars()), nf.G.vars());
}

} // namespace

template <class K>
LyapunovReport<K> lyapunov_quantities(const NormalizedField<K>& nf, int N, const LyapunovOptions& opts) {
    if (N < 1) throw std::invalid_argument("number of Lyapunov quantities must be positive");
    VarList ring = ring_of(nf);
    int top = 2 * N + 2;
    auto Fh = homogeneous_parts(nf.F.with_vars(ring), top);
    auto Gh = homogeneous_parts(nf.G.with_vars(ring), top);
    auto trunc = [&](const Poly<K>& p) {
        return opts.linear_in.empty() ? p : p.truncate_degree_in(opts.linear_in, 1);
    };

    LyapunovReport<K> rep;
    rep.kernel_pinning = to_string(opts.pinning);
    rep.parameters = nf.parameters;
    rep.radicand = nf.radicand;
    std::map<int, Poly<K>> Hx, Hy;
    rep.H[2] = xy_monomial<K>(ring, 2, 0) + xy_monomial<K>(ring, 0, 2);
    Hx[2] = rep.H[2].derivative("x");
    Hy[2] = rep.H[2].derivative("y");

    for (int k = 3; k <= top; ++k) {
        Poly<K> rhs(ring);
        for (int j = 2; j < k; ++j) {
            int m = k - j + 1;
            if (!Fh[j].is_zero()) rhs += Fh[j] * Hx[m];
            if (!Gh[j].is_zero()) rhs += Gh[j] * Hy[m];
        }
        rhs = trunc(rhs);
        bool even = k % 2 == 0;
        std::size_t off = even ? 1 : 0, n = static_cast<std::size_t>(k) + 1;
        auto col = [&](unsigned i) {
            return off + (opts.pinning == Pinning::x_power ? i : static_cast<unsigned>(k) - i);
        };
        Matrix<K> A(n, n + off, K(0));
        std::vector<Poly<K>> b(n, Poly<K>(ring));
        for (unsigned i = 0; i <= static_cast<unsigned>(k); ++i) {
            // D(x^i y^(k-i)) = -i x^(i-1) y^(k-i+1) + (k-i) x^(i+1) y^(k-i-1)
            if (i >= 1) A(i - 1, col(i)) += K(-static_cast<long>(i));
            if (i < static_cast<unsigned>(k)) A(i + 1, col(i)) += K(static_cast<long>(k - static_cast<int>(i)));
            b[i] = -rhs.extract(kXY, {i, static_cast<unsigned>(k) - i});
        }
        if (even) A(n - 1, 0) = K(-1);
        auto sol = solve_linear_exact(A, b);
        if (sol.kind == LinearSolution<K>::Kind::inconsistent)
            throw std::logic_error("inconsistent Lyapunov recurrence at degree " + std::to_string(k));
        std::size_t expect_free = even ? 1 : 0;
        if (sol.free_vars.size() != expect_free || (even && sol.free_vars[0] != n))
            throw std::logic_error("unexpected kernel in Lyapunov recurrence at degree " + std::to_string(k));
        Poly<K> h(ring);
        for (unsigned i = 0; i <= static_cast<unsigned>(k); ++i) {
            const Poly<K>& c = sol.x[col(i)];
            if (!c.is_zero()) h += c * xy_monomial<K>(ring, i, static_cast<unsigned>(k) - i);
        }
        rep.H[k] = h;
        Hx[k] = h.derivative("x");
        Hy[k] = h.derivative("y");
        if (even) rep.quantities.push_back(sol.x[0]);
    }
    if (opts.verify_residual) {
        Poly<K> r = lyapunov_residual(nf, rep, opts);
        rep.residual_verified = true;
        for (const auto& t : r.terms())
            if (static_cast<int>(t.first[0] + t.first[1]) <= top) rep.residual_verified = false;
        if (!rep.residual_verified) throw std::logic_error("Lyapunov residual check failed");
    }
    return rep;
}

template <class K>
Poly<K> lyapunov_residual(const NormalizedField<K>& nf, const LyapunovReport<K>& report, const LyapunovOptions& opts) {
    VarList ring = ring_of(nf);
    Poly<K> H(ring);
    for (const auto& [k, h] : report.H) H += h.with_vars(ring);
    Poly<K> P = nf.P().with_vars(ring), Q = nf.Q().with_vars(ring);
    Poly<K> r = P * H.derivative("x") + Q * H.derivative("y");
    for (std::size_t k = 0; k < report.quantities.size(); ++k)
        r -= report.quantities[k].with_vars(ring) * xy_monomial<K>(ring, 2 * static_cast<unsigned>(k) + 4, 0);
    return opts.linear_in.empty() ? r : r.truncate_degree_in(opts.linear_in, 1);
}

template <class K>
FocusStability focus_stability(const LyapunovReport<K>& report, const std::map<std::string, K>& binding) {
    FocusStability fs;
    for (std::size_t k = 0; k < report.quantities.size(); ++k) {
        K v = report.quantities[k].evaluate_all(binding);
        if (v.is_zero()) continue;
        fs.k0 = static_cast<int>(k) + 1;
        fs.kind = v.sign() < 0 ? FocusKind::stable_focus : FocusKind::unstable_focus;
        return fs;
    }
    return fs;
}

template <class K>
Matrix<Poly<K>> linear_parts_in(const LyapunovReport<K>& report, const std::vector<std::string>& symbols) {
    Matrix<Poly<K>> m(report.quantities.size(), symbols.size());
    for (std::size_t j = 0; j < report.quantities.size(); ++j) {
        const Poly<K>& L = report.quantities[j];
        std::vector<std::string> present;
        for (const auto& s : symbols)
            if (var_index(L.vars(), s) >= 0) present.push_back(s);
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (var_index(L.vars(), symbols[i]) < 0) {
                m(j, i) = Poly<K>(L.vars());
                continue;
            }
            std::vector<unsigned> e(present.size(), 0);
            for (std::size_t q = 0; q < present.size(); ++q)
                if (present[q] == symbols[i]) e[q] = 1;
            m(j, i) = L.extract(present, e);
        }
    }
    return m;
}

#define CYCLEFORGE_INSTANTIATE(K)                                                                              \
    template LyapunovReport<K> lyapunov_quantities(const NormalizedField<K>&, int, const LyapunovOptions&);   \
    template Poly<K> lyapunov_residual(const NormalizedField<K>&, const LyapunovReport<K>&,                   \
                                       const LyapunovOptions&);                                              \
    template FocusStability focus_stability(const LyapunovReport<K>&, const std::map<std::string, K>&);      \
    template Matrix<Poly<K>> linear_parts_in(const LyapunovReport<K>&, const std::vector<std::string>&);

CYCLEFORGE_INSTANTIATE(Rational)
CYCLEFORGE_INSTANTIATE(QuadExt)

} // namespace cycleforge
