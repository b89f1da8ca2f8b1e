#include "cycleforge/bifurcation/ggt.hpp"
#include "cycleforge/resultants/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycleforge {

const char* to_string(GGTReport::Verdict v) {
    return v == GGTReport::Verdict::cycles ? "k_plus_ell_cycles" : "conditions_fail";
}

const char* to_string(HopfReport::Kind k) { return k == HopfReport::Kind::one_cycle ? "one_cycle" : "none"; }

template <class K>
int rank_over_fraction_field(Matrix<Poly<K>> m) {
    std::size_t r = 0;
    Poly<K> prev = Poly<K>::constant(K(1));
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)).exact_quotient(prev);
            m(i, c) = Poly<K>();
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

template int rank_over_fraction_field<Rational>(Matrix<QPoly>);
template int rank_over_fraction_field<QuadExt>(Matrix<QEPoly>);

namespace {

const Rational kFinest(mpz_class(1), mpz_class(1) << 160);

QEPoly to_qe(const QPoly& p) { return to_quadext(p); }
QEPoly to_qe(const QEPoly& p) { return p; }
RatFunc<QuadExt> to_qe(const RatFunc<Rational>& r) { return RatFunc<QuadExt>(to_quadext(r.num()), to_quadext(r.den())); }
RatFunc<QuadExt> to_qe(const RatFunc<QuadExt>& r) { return r; }

template <class K>
int exact_sign(const Poly<K>& p, const std::string& var, const Rational& v) {
    Poly<K> e = p.evaluate({{var, K(v)}});
    return e.is_zero() ? 0 : e.constant_value().sign();
}

// Real roots of a univariate polynomial over K with refinement through the square-free norm.
template <class K>
struct RootSet {
    UPoly norm;
    std::vector<IsolatingInterval> iv;

    RootSet(const Poly<K>& p, const std::string& var) {
        QPoly n;
        if constexpr (std::is_same_v<K, Rational>) {
            n = p;
        } else {
            long d = 0;
            for (const auto& t : p.terms())
                if (!t.second.is_rational()) d = t.second.radicand();
            QPoly a = p.template map_coefficients<Rational>([](const QuadExt& q) { return q.a(); });
            QPoly b = p.template map_coefficients<Rational>([](const QuadExt& q) { return q.b(); });
            n = a * a - b * b * Rational(d);
        }
        if (n.is_zero() || !n.contains(var)) return;
        norm = squarefree_part(UPoly::from(n));
        for (auto i : isolate_real_roots(norm)) {
            rational_root(norm, i);
            if (i.exact) {
                if (exact_sign(p, var, *i.exact) == 0) iv.push_back(i);
                continue;
            }
            int sl = exact_sign(p, var, i.lo), sh = exact_sign(p, var, i.hi);
            if (sl != 0 && sh != 0 && sl != sh) iv.push_back(i);
        }
    }
    void refine_to(std::size_t i, const Rational& w) {
        if (!iv[i].exact && iv[i].width() > w) iv[i] = refine(norm, iv[i], w);
    }
};

// Sign of p on the root candidate, refining until decided.
template <class K>
int candidate_sign(const Poly<K>& p, const std::string& var, RootSet<K>& rs, std::size_t i) {
    if (rs.iv[i].exact) return exact_sign(p, var, *rs.iv[i].exact);
    for (Rational w = rs.iv[i].width(); w > kFinest; w = w / Rational(1 << 16)) {
        rs.refine_to(i, w);
        int s = eval_interval(p, {{var, rs.iv[i].interval()}}).sign();
        if (s != 0) return s;
    }
    return 0;
}

template <class K>
RatFunc<K> dot(const Matrix<Poly<K>>& A, std::size_t row, const std::vector<RatFunc<K>>& v) {
    RatFunc<K> acc;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!A(row, j).is_zero() && !v[j].is_zero()) acc = acc + RatFunc<K>(A(row, j)) * v[j];
    return acc;
}

template <class K>
void analyze(GGTReport& rep, const NormalizedField<K>& nf, const PerturbationSetup& s, const GGTOptions& opts) {
    int N = opts.N.value_or(s.N);
    LyapunovOptions lo;
    lo.pinning = opts.pinning;
    lo.linear_in = s.lambda;
    auto lr = lyapunov_quantities(nf, N, lo);
    Matrix<Poly<K>> A = linear_parts_in(lr, s.lambda);
    std::size_t p = s.lambda.size();
    rep.linear_parts = Matrix<QEPoly>(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) rep.linear_parts(i, j) = to_qe(A(i, j));

    int k = rank_over_fraction_field(A);
    rep.k = k;
    if (k == 0) {
        rep.reason = "all linear parts vanish";
        return;
    }
    std::size_t km = static_cast<std::size_t>(k - 1);
    Matrix<Poly<K>> head(km, p);
    for (std::size_t i = 0; i < km; ++i)
        for (std::size_t j = 0; j < p; ++j) head(i, j) = A(i, j);
    if (rank_over_fraction_field(head) != k - 1) {
        rep.reason = "the first k-1 linear parts are dependent";
        return;
    }
    if (static_cast<int>(A.rows()) < k) {
        rep.reason = "not enough quantities";
        return;
    }

    // Gauss-Jordan on [head | I] over the rational function field, pivots left to right
    std::vector<std::vector<RatFunc<K>>> R(km, std::vector<RatFunc<K>>(p + km));
    for (std::size_t i = 0; i < km; ++i) {
        for (std::size_t j = 0; j < p; ++j) R[i][j] = RatFunc<K>(A(i, j));
        R[i][p + i] = RatFunc<K>(Poly<K>::constant(K(1)));
    }
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < p && r < km; ++c) {
        std::size_t q = r;
        while (q < km && R[q][c].is_zero()) ++q;
        if (q == km) continue;
        std::swap(R[q], R[r]);
        RatFunc<K> inv = RatFunc<K>(Poly<K>::constant(K(1))) / R[r][c];
        for (auto& e : R[r]) e = e * inv;
        for (std::size_t i = 0; i < km; ++i) {
            if (i == r || R[i][c].is_zero()) continue;
            RatFunc<K> fct = R[i][c];
            for (std::size_t j = 0; j < p + km; ++j) R[i][j] = R[i][j] - fct * R[r][j];
        }
        piv.push_back(c);
        ++r;
    }

    std::vector<std::vector<RatFunc<K>>> cols;
    for (std::size_t j = 0; j < km; ++j) {
        std::vector<RatFunc<K>> x(p);
        for (std::size_t i = 0; i < km; ++i) x[piv[i]] = R[i][p + j];
        cols.push_back(x);
    }
    std::optional<std::vector<RatFunc<K>>> kernel;
    for (std::size_t c = 0; c < p && !kernel; ++c) {
        if (std::find(piv.begin(), piv.end(), c) != piv.end()) continue;
        std::vector<RatFunc<K>> v(p);
        v[c] = RatFunc<K>(Poly<K>::constant(K(1)));
        for (std::size_t i = 0; i < km; ++i) v[piv[i]] = -R[i][c];
        if (!dot(A, km, v).is_zero()) kernel = v;
    }
    if (!kernel) {
        rep.reason = "L_k vanishes on the kernel of the leading linear parts";
        return;
    }
    cols.push_back(*kernel);

    rep.M = Matrix<RatFunc<QuadExt>>(p, static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < p; ++i) rep.M(i, j) = to_qe(cols[j][i]);

    bool identity = true;
    for (std::size_t i = 0; i < km; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            RatFunc<K> e = dot(A, i, cols[j]);
            RatFunc<K> want = i == j ? RatFunc<K>(Poly<K>::constant(K(1))) : RatFunc<K>();
            if (!(e == want)) identity = false;
        }
    rep.identity_rows_verified = identity;
    if (!identity) {
        rep.reason = "identity rows failed after the change of parameters";
        return;
    }
    std::vector<RatFunc<K>> f;
    for (std::size_t row = km; row < A.rows(); ++row) {
        std::vector<RatFunc<QuadExt>> grow;
        for (std::size_t l = 0; l < km; ++l) grow.push_back(to_qe(dot(A, row, cols[l])));
        rep.g.push_back(grow);
        f.push_back(dot(A, row, *kernel));
        rep.f.push_back(to_qe(f.back()));
    }

    std::vector<std::string> mu;
    for (const auto& m : s.mu)
        if (!s.fixed.count(m)) mu.push_back(m);
    rep.mu = mu;
    auto accept_generic = [&](const std::string& why) {
        rep.ell = 0;
        rep.cycles = k;
        rep.verdict = GGTReport::Verdict::cycles;
        rep.reason = why;
    };
    if (mu.size() != 1 || f.size() < 2) {
        if (mu.size() > 1) accept_generic("ell >= 1 search needs a single mu parameter; f_0 is not identically zero");
        else accept_generic(f.size() < 2 ? "no f_1 available (increase N)" : "no mu parameter; f_0 != 0");
        return;
    }

    const std::string& var = mu[0];
    Poly<K> den = Poly<K>::constant(K(1));
    for (const auto& c : cols)
        for (const auto& e : c) den = den * e.den();
    den = den * f[0].den() * f[1].den();
    Poly<K> f0 = f[0].num(), f0d = f0.derivative(var);
    Poly<K> f1 = f[1].num() * f[1].den();  // same sign as f_1 where the denominator is nonzero

    RootSet<K> roots(f0, var);
    for (std::size_t i = 0; i < roots.iv.size(); ++i) {
        MuCandidate c;
        if (!den.is_constant() && candidate_sign(den, var, roots, i) == 0) {
            c.denominators_ok = false;
            c.rejection = "denominator " + den.to_string() + " vanishes";
        }
        c.simple = candidate_sign(f0d, var, roots, i) != 0;
        if (c.rejection.empty() && !c.simple) c.rejection = "zero of f_0 is not simple";
        c.f_ell_sign = candidate_sign(f1, var, roots, i);
        if (c.rejection.empty() && c.f_ell_sign == 0) c.rejection = "f_1 vanishes";
        c.exact = roots.iv[i].exact;
        c.value = c.exact ? RInterval(*c.exact) : roots.iv[i].interval();
        rep.candidates.push_back(c);
    }
    for (const auto& c : rep.candidates)
        if (c.rejection.empty()) {
            rep.mu0 = c;
            rep.ell = 1;
            rep.cycles = k + 1;
            rep.verdict = GGTReport::Verdict::cycles;
            rep.reason.clear();
            return;
        }
    accept_generic(rep.candidates.empty() ? "f_0 has no real zero" : "no admissible zero of f_0");
}

} // namespace

GGTReport ggt_analyze(const PerturbationSetup& s, const GGTOptions& opts) {
    GGTReport rep;
    rep.label = s.label;
    rep.lambda = s.lambda;
    if (s.lambda.empty()) {
        rep.reason = "no perturbation parameters";
        return rep;
    }
    std::map<std::string, Rational> bind = s.fixed;
    bind[s.alpha] = Rational(0);
    VectorField vf = s.field.bind(bind);
    auto nf = normalize_at(vf, s.px, s.py, s.frame);
    rep.radicand = nf.radicand;
    if (nf.radicand == 0) analyze(rep, to_rational(nf), s, opts);
    else analyze(rep, nf, s, opts);
    return rep;
}

HopfReport hopf_order_one(const PerturbationSetup& s, const std::map<std::string, Rational>& binding) {
    std::map<std::string, Rational> bind = s.fixed;
    for (const auto& [k, v] : binding) bind[k] = v;
    bind.erase(s.alpha);
    VectorField vf = s.field.bind(bind);
    HopfReport h;
    auto J = vf.jacobian_at(s.px, s.py);
    QPoly tr = J[0] + J[3];
    QPoly tr_alpha = tr.contains(s.alpha) ? tr.derivative(s.alpha).evaluate({{s.alpha, Rational(0)}}) : QPoly();
    if (!tr_alpha.is_constant()) throw std::invalid_argument("trace derivative depends on parameters: " + tr_alpha.to_string());
    h.trace_alpha = tr_alpha.is_zero() ? Rational(0) : tr_alpha.constant_value();
    auto nf = normalize_at(vf.bind({{s.alpha, Rational(0)}}), s.px, s.py, s.frame);
    h.radicand = nf.radicand;
    auto lr = lyapunov_quantities(nf, 1);
    h.L1 = lr.quantities[0];
    if (h.L1.is_zero()) {
        h.condition = "L1 vanishes";
        return h;
    }
    if (h.trace_alpha.is_zero()) {
        h.condition = "alpha does not move the trace";
        return h;
    }
    h.kind = HopfReport::Kind::one_cycle;
    h.condition = s.alpha + " * (" + h.L1.to_string() + ") " + (h.trace_alpha.sign() > 0 ? "< 0" : "> 0");
    return h;
}

int mirror_count(const VectorField& field, const Rational& px, const Rational& py, int per_nest, Symmetry symmetry) {
    if (symmetry == Symmetry::none) return per_nest;
    QPoly x = QPoly::variable("x", field.P.vars()), y = QPoly::variable("y", field.P.vars());
    std::map<std::string, QPoly> neg{{"x", -x}, {"y", -y}};
    if (field.P.substitute(neg) != field.P || field.Q.substitute(neg) != field.Q)
        throw std::invalid_argument("field is not invariant under (x, y, t) -> (-x, -y, -t)");
    bool fixed = px.is_zero() && py.is_zero();
    return fixed ? per_nest : 2 * per_nest;
}

int mirror_count(const PerturbationSetup& s, int per_nest, Symmetry symmetry) {
    return mirror_count(s.field, s.px, s.py, per_nest, symmetry);
}

} // namespace cycleforge
