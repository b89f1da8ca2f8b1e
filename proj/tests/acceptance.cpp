#include "cycleforge/bifurcation/ggt.hpp"
#include "cycleforge/centers/certify.hpp"
#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/dynamics/numeric.hpp"
#include "cycleforge/dynamics/singularities.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/lyapunov/normalize.hpp"
#include "cycleforge/lyapunov/quantities.hpp"
#include "cycleforge/resultants/cascade.hpp"
#include "cycleforge/resultants/resultant.hpp"
#include "support/pencil.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>

using namespace cycleforge;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<std::string> notes;
};

QPoly P(const char* s) { return parse_qpoly(s); }
QEPoly PE(const char* s) { return parse_qepoly(s); }

template <class K>
bool same(const Poly<K>& a, const Poly<K>& b) { return (a - b).is_zero(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---- 1

Outcome lyapunov_p4() {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = lyapunov_quantities(to_rational(normalize_at(family_P4(), Rational(0), Rational(0))), 2);
    double t = seconds_since(t0);
    QPoly L1 = P("2/3*a02*a11 - 2/3*b11*b20");
    QPoly L2 = P("-20/9*b20^2*a02*a11 + 14/9*b20^3*b11 + 2/3*a11*a02^3 + 2/5*b11*a11*a02^2 - 14/15*a02*a11^3"
                 " - 26/9*b20*a02*a11^2 + 2/15*b11^2*b20*a02 + 16/15*b11*b20*a11^2 + 106/45*b11*b20^2*a11"
                 " - 2/15*b20*b11^3 - 32/15*a02*a11 + 32/15*b11*b20");
    auto canon = [](const QPoly& p) { return p.with_vars(make_vars({"a11", "a02", "b20", "b11"})).to_string(); };
    bool ok = rep.quantities.size() == 2 && canon(rep.quantities[0]) == canon(L1) &&
              canon(rep.quantities[1]) == canon(L2) && rep.quantities[1].terms().size() == 12 && t < 10;
    return {ok, "L1 = " + canon(rep.quantities[0]) + "; L2 has " + std::to_string(rep.quantities[1].terms().size()) +
                    " terms; " + fmt("%.2f s", t)};
}

// ---- 2

Outcome cascade_p4() {
    auto t0 = std::chrono::steady_clock::now();
    auto L = lyapunov_quantities(to_rational(normalize_at(family_P4(), Rational(0), Rational(0))), 4).quantities;
    auto res = cascade(L, {"a11", "a02", "b20"}, 2);
    double t = seconds_since(t0);
    if (res.stages.size() != 3) return {false, "expected 3 stages, got " + std::to_string(res.stages.size())};
    const auto& s1 = res.stages[0];
    std::vector<QPoly> expected{P("b11"), P("b20"), P("a02"), P("a02 - b20"), P("a02 + b11"), P("a02 + b20")};
    std::vector<QPoly> found = s1.common_factors;
    for (const auto& b : s1.branch_factors) found.insert(found.end(), b.begin(), b.end());
    bool factors = found.size() == expected.size();
    for (const auto& e : expected) {
        bool hit = false;
        for (const auto& f : found) hit = hit || same(f, e) || same(f, -e);
        factors = factors && hit;
    }
    QPoly r12 = P("16/81*a02 - 16/405*b11");
    bool remainder = false;
    for (const auto& n : s1.next_inputs) {
        if (n.degree().value() != 1 || n.size() != 2) continue;
        remainder = remainder || same(n.scale(r12.leading_term().second), r12.scale(n.leading_term().second)) ||
                    same(n.scale(r12.terms().back().second), r12.scale(n.terms().back().second));
    }
    const auto& s3 = res.stages[2];
    bool constant = s3.resultants.size() == 1 && s3.resultants[0].is_constant() && !s3.resultants[0].is_zero();
    bool verified = true;
    for (const auto& s : res.stages) verified = verified && s.verify();
    bool ok = factors && remainder && constant && verified && t < 300;
    std::ostringstream d;
    d << "six linear factors " << (factors ? "recovered" : "missing") << "; remainder "
      << (remainder ? "proportional to 16/81*a02 - 16/405*b11" : "mismatch") << "; stage 3 resultant "
      << (constant ? s3.resultants[0].to_string() : std::string("not a nonzero constant")) << "; " << fmt("%.2f s", t);
    return {ok, d.str()};
}

// ---- 3

Outcome certificates() {
    using Kind = CenterCertificate::Kind;
    auto t0 = std::chrono::steady_clock::now();
    auto exponent = [](const CenterCertificate& c, const QPoly& curve) {
        for (const auto& f : c.factors)
            if (f.curve == curve.with_vars(f.curve.vars())) return f.exponent;
        return Rational(0);
    };
    std::ostringstream d;
    bool ok = true;
    for (const auto& label : center_condition_labels()) {
        auto vf = builtin_family(label);
        auto cert = certify(vf, Rational(0), Rational(0));
        bool good = cert.kind != Kind::none && cert.verify(vf);
        if (label == "C2" || label == "D2")
            good = good && cert.kind == Kind::darboux && exponent(cert, boundary_x()) == Rational(-1) &&
                   exponent(cert, boundary_y()) == Rational(-1);
        if (label == "D7")
            good = good && cert.kind == Kind::darboux && exponent(cert, boundary_x()) == Rational(-2) &&
                   exponent(cert, boundary_y()) == Rational(-2);
        if (label == "C7") good = good && cert.kind == Kind::darboux && exponent(cert, P("1 + a11*x + a02*y")) == Rational(-1);
        if (label == "C3" || label == "D1") good = good && cert.kind == Kind::separable;
        if (label == "C1" || label == "C4" || label == "C5" || label == "C6") good = good && cert.kind == Kind::reversible;
        if (!good) d << label << " failed; ";
        ok = ok && good;
    }
    double t = seconds_since(t0);
    ok = ok && t < 60;
    d << "16 strata certified and verified; " << fmt("%.2f s", t);
    return {ok, d.str()};
}

// ---- 4

Outcome ggt_p7() {
    auto r = ggt_analyze(canned_setup("P7"));
    bool ok = r.k == 2 && r.ell == 1 && same(r.f_poly(0), PE("2/15*(mu + 1)*(mu - 5)")) &&
              same(r.f_poly(1), PE("-2/315*(mu + 1)*(47*mu^3 - 96*mu^2 - 582*mu - 673)")) &&
              r.verdict == GGTReport::Verdict::cycles && r.cycles == 3 && r.mu0 && r.mu0->exact &&
              *r.mu0->exact == Rational(5);
    return {ok, "k=" + std::to_string(r.k) + " ell=" + std::to_string(r.ell) + " cycles=" + std::to_string(r.cycles) +
                    " mu0=" + (r.mu0 && r.mu0->exact ? r.mu0->exact->to_string() : std::string("?"))};
}

// ---- 5

Outcome ggt_p8() {
    auto r = ggt_analyze(canned_setup("P8"));
    bool ok = r.k == 4 && r.ell == 1 &&
              same(r.f_poly(0), PE("mu*(mu - 2)*(mu + 2)*(175*mu^4 + 128520*mu^2 - 44944)/113400"));
    std::vector<MuCandidate> h_roots;
    for (const auto& c : r.candidates)
        if (!c.exact) h_roots.push_back(c);
    ok = ok && h_roots.size() == 2;
    std::ostringstream d;
    d << "k=" << r.k << " ell=" << r.ell << " h roots:";
    for (const auto& c : h_roots) {
        double mid = c.value.mid().to_double();
        double width = (c.value.hi - c.value.lo).to_double();
        bool near = std::abs(std::abs(mid) - 0.5912) < 5e-5;
        ok = ok && width <= 1e-6 && near && c.f_ell_sign != 0 && c.rejection.empty();
        d << " " << fmt("%.7f", mid) << " (width " << fmt("%.1e", width) << ", f1 sign " << c.f_ell_sign << ")";
    }
    ok = ok && r.verdict == GGTReport::Verdict::cycles && r.cycles == 5;
    d << "; cycles=" << r.cycles;
    return {ok, d.str()};
}

// ---- 6

Outcome ggt_p9() {
    auto setup = canned_setup("P9b");
    auto r = ggt_analyze(setup);
    bool ok = r.radicand == 6 && same(r.f_poly(0), PE("sqrt(6)/9*(8*mu + 3)")) && r.mu0 && r.mu0->exact &&
              *r.mu0->exact == Rational(-3, 8) && r.mu0->f_ell_sign != 0 && r.cycles == 2;
    int total = ok ? mirror_count(setup, r.cycles, Symmetry::odd_symmetry) : 0;
    auto hsetup = canned_setup("P9c");
    auto h = hopf_order_one(hsetup, {});
    int htotal = h.kind == HopfReport::Kind::one_cycle ? mirror_count(hsetup, 1, Symmetry::odd_symmetry) : 0;
    ok = ok && total == 4 && htotal == 2;
    return {ok, "f0 = " + r.f_poly(0).to_string() + "; cycles per nest " + std::to_string(r.cycles) +
                    ", with mirror " + std::to_string(total) + "; Hopf case total " + std::to_string(htotal)};
}

// ---- 7

Outcome sign_rule() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> num(-1000, 1000);
    auto nf = to_rational(normalize_at(family_P4(), Rational(0), Rational(0)));
    auto L1 = lyapunov_quantities(nf, 1).quantities[0];
    int matched = 0, tried = 0;
    std::ostringstream d;
    while (tried < 10) {
        std::map<std::string, Rational> b;
        for (const char* p : {"a11", "a02", "b20", "b11"}) b[p] = Rational(num(rng), 1000);
        double l1 = L1.evaluate_all(b).to_double();
        if (std::abs(l1) < 0.05) continue;
        ++tried;
        auto table = return_map(NumericField(family_P4(), b), {0, 0}, {1, 0}, {1e-2});
        const auto& row = table.rows.at(0);
        if (row.displacement && std::signbit(*row.displacement) == std::signbit(l1) && *row.displacement != 0) ++matched;
    }
    double t = seconds_since(t0);
    d << matched << "/10 displacement signs match sgn(L1); " << fmt("%.2f s", t);
    return {matched == 10 && t < 120, d.str()};
}

// ---- 8

struct Sweep {
    int sign_changes = 0;
    double bracket_lo = 0, bracket_hi = 0;
    bool complete = true;
};

std::optional<double> displacement(const NumericField& field, std::array<double, 2> focus, std::array<double, 2> dir,
                                   double r) {
    return return_map(field, focus, dir, {r}).rows.at(0).displacement;
}

Sweep sweep(const NumericField& field, std::array<double, 2> focus, std::array<double, 2> dir) {
    Sweep s;
    auto radii = log_radii(1e-3, 0.2, 48);
    auto table = return_map(field, focus, dir, radii);
    std::optional<double> prev;
    double prev_r = 0;
    for (const auto& row : table.rows) {
        if (!row.displacement) {
            s.complete = false;
            continue;
        }
        if (prev && (*prev > 0) != (*row.displacement > 0)) {
            if (++s.sign_changes == 1) {
                double lo = prev_r, hi = row.radius;
                bool lo_pos = *prev > 0;
                while (hi - lo > 1e-3) {
                    double mid = 0.5 * (lo + hi);
                    auto dm = displacement(field, focus, dir, mid);
                    if (!dm) break;
                    if ((*dm > 0) == lo_pos) lo = mid;
                    else hi = mid;
                }
                s.bracket_lo = lo;
                s.bracket_hi = hi;
            }
        }
        prev = row.displacement;
        prev_r = row.radius;
    }
    return s;
}

std::array<double, 2> antisaddle_near(const VectorField& vf, const std::map<std::string, Rational>& b, double x, double y) {
    auto rep = singularities(vf, b, {});
    std::array<double, 2> best{x, y};
    double dist = 1e9;
    for (const auto& p : rep.points) {
        double dx = p.mid_x() - x, dy = p.mid_y() - y, d = dx * dx + dy * dy;
        if (p.type != SingularityType::saddle && d < dist) {
            dist = d;
            best = {p.mid_x(), p.mid_y()};
        }
    }
    return best;
}

std::string describe(const Sweep& s) {
    std::string out = std::to_string(s.sign_changes);
    if (s.sign_changes >= 1) out += " [" + fmt("%.4f", s.bracket_lo) + ", " + fmt("%.4f", s.bracket_hi) + "]";
    return out;
}

Outcome numeric_cycle() {
    auto vf = family_P9();
    bool ok = true;
    std::ostringstream d, supp;
    d << "mu=lam=0 sign changes around p+/p-:";
    supp << "supplementary lam=-sgn(alpha)/2 sign changes around p+/p-:";
    bool supp_ok = true;
    for (const char* alpha : {"1/1000", "-1/1000", "1/100", "-1/100"}) {
        Rational a = parse_rational_expr(alpha);
        auto run = [&](const Rational& lam, std::ostringstream& out, bool& flag) {
            std::map<std::string, Rational> b{{"mu", Rational(0)}, {"lam", lam}, {"alpha", a}};
            NumericField field(vf, b);
            auto pp = antisaddle_near(vf, b, 0.25, 0.0);
            auto pm = antisaddle_near(vf, b, -0.25, 0.0);
            auto sp = sweep(field, pp, {1, 0});
            auto sm = sweep(field, pm, {-1, 0});
            out << " alpha=" << alpha << ": " << describe(sp) << " / " << describe(sm) << ";";
            flag = flag && sp.sign_changes == 1 && sm.sign_changes == 1 && sp.bracket_hi - sp.bracket_lo <= 1e-3 &&
                   sm.bracket_hi - sm.bracket_lo <= 1e-3;
        };
        run(Rational(0), d, ok);
        run(a.sign() > 0 ? Rational(-1, 2) : Rational(1, 2), supp, supp_ok);
    }
    Outcome o{ok, d.str()};
    o.notes.push_back(supp.str() + (supp_ok ? " one cycle per nest observed" : " not observed"));
    return o;
}

// ---- 9

Outcome berlinskii_suite() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coord(-6, 6), coef(-5, 5);
    SolveOptions plane;
    plane.region = Region::plane;
    int accepted = 0, counterexamples = 0, induced_checked = 0, induced_mismatch = 0, attempts = 0;
    while (accepted < 200 && attempts < 20000) {
        ++attempts;
        QPoly f, g;
        if (attempts % 2) {
            std::vector<std::pair<Rational, Rational>> pts;
            for (int i = 0; i < 4; ++i) pts.push_back({Rational(coord(rng)), Rational(coord(rng))});
            std::tie(f, g) = testing::pencil(pts, rng);
        } else {
            const char* mons[6] = {"x^2", "x*y", "y^2", "x", "y", "1"};
            for (auto* p : {&f, &g}) {
                *p = QPoly();
                for (const char* m : mons) *p += P(m).scale(Rational(coef(rng)));
            }
        }
        if (f.is_zero() || g.is_zero() || f.degree().value() < 2 || g.degree().value() < 2) continue;
        auto rep = solve_system(f, g, plane);
        if (rep.degenerate_family || rep.points.size() != 4) continue;
        bool simple = true;
        for (const auto& p : rep.points) simple = simple && p.det_sign != 0;
        if (!simple) continue;
        ++accepted;
        auto b = berlinskii_check(rep);
        if (b.kind == BerlinskiiKind::counterexample) ++counterexamples;

        // move all zeros inside the square by a positive affine change of coordinates
        double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
        for (const auto& p : rep.points) {
            lo_x = std::min(lo_x, p.mid_x());
            hi_x = std::max(hi_x, p.mid_x());
            lo_y = std::min(lo_y, p.mid_y());
            hi_y = std::max(hi_y, p.mid_y());
        }
        Rational cx(static_cast<long>(std::lround((lo_x + hi_x) * 4)), 8);
        Rational cy(static_cast<long>(std::lround((lo_y + hi_y) * 4)), 8);
        double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-3}) + 1.0;
        Rational s(static_cast<long>(std::ceil(span * 2.5)));
        std::map<std::string, QPoly> map{{"x", P("x").scale(s) + QPoly::constant(cx)},
                                         {"y", P("y").scale(s) + QPoly::constant(cy)}};
        auto fi = f.substitute(map), gi = g.substitute(map);
        auto induced = singularities_in_delta(VectorField::from_factors(fi, gi));
        if (induced.points.size() != 4) {
            ++induced_mismatch;
            continue;
        }
        ++induced_checked;
        if (berlinskii_check(induced).kind != b.kind) ++induced_mismatch;
    }
    double t = seconds_since(t0);
    std::ostringstream d;
    d << accepted << " pairs with four simple zeros, " << counterexamples << " counterexamples; induced fields "
      << induced_checked << " checked, " << induced_mismatch << " mismatches; " << fmt("%.2f s", t);
    return {accepted == 200 && counterexamples == 0 && induced_mismatch == 0 && t < 300, d.str()};
}

// ---- 10

using Dense = std::vector<Rational>;

void trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int gcd_degree(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rational q = a.back() / b.back();
            std::size_t s = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= q * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

Outcome resultant_oracle() {
    std::mt19937 rng(500);
    std::uniform_int_distribution<int> deg(1, 5), c(-9, 9), share(0, 2);
    auto v = make_vars({"x"});
    auto random = [&](int d) {
        Dense a(static_cast<std::size_t>(d + 1));
        for (auto& x : a) x = Rational(c(rng));
        while (a.back().is_zero()) a.back() = Rational(c(rng));
        return a;
    };
    auto mul = [](const Dense& a, const Dense& b) {
        Dense r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto poly = [&](const Dense& a) {
        QPoly x = QPoly::variable("x", v), r(v);
        for (std::size_t i = 0; i < a.size(); ++i) r += x.pow(static_cast<unsigned>(i)).scale(a[i]);
        return r;
    };
    int mismatches = 0, zeros = 0;
    for (int n = 0; n < 500; ++n) {
        Dense f = random(deg(rng)), g = random(deg(rng));
        if (share(rng) == 0 && f.size() <= 5 && g.size() <= 5) {
            Dense h = random(1);
            f = mul(f, h);
            g = mul(g, h);
        }
        QPoly r = resultant(poly(f), poly(g), "x");
        bool zero = r.is_zero();
        zeros += zero;
        if (zero != (gcd_degree(f, g) >= 1)) ++mismatches;
    }
    return {mismatches == 0, "500 pairs, " + std::to_string(zeros) + " with zero resultant, " +
                                 std::to_string(mismatches) + " mismatches"};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {"P4 Lyapunov quantities L1, L2", lyapunov_p4},
    {"P4 elimination cascade", cascade_p4},
    {"center certificates C1-C7, D1-D9", certificates},
    {"P7 bifurcation", ggt_p7},
    {"P8 bifurcation", ggt_p8},
    {"P9 over Q(sqrt 6) and mirror count", ggt_p9},
    {"return map sign versus L1", sign_rule},
    {"P9 numeric limit cycle", numeric_cycle},
    {"Berlinskii configurations", berlinskii_suite},
    {"resultant oracle", resultant_oracle},
};

int run(std::size_t i) {
    Outcome o;
    try {
        o = kCriteria[i].second();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, kCriteria[i].first, o.detail.c_str());
    for (const auto& n : o.notes) std::printf("  note: %s\n", n.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        std::size_t i = std::strtoul(argv[2], nullptr, 10);
        if (i < 1 || i > kCriteria.size()) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
            return 2;
        }
        return run(i - 1);
    }
    if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    int failed = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) failed += run(i);
    return failed ? 1 : 0;
}
