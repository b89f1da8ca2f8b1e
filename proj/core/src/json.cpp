#include "cycleforge/io/json.hpp"
#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace cycleforge::io {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON: " + std::string(e.what()), line, col);
    }
}

// Canonical ring for output: x, y first, then the remaining variables sorted, so the text does not
// depend on how the polynomial was built.
template <class K>
std::string str(const Poly<K>& p) {
    auto used = p.used_variables();
    std::vector<std::string> names;
    for (const char* v : {"x", "y"})
        if (std::find(used.begin(), used.end(), v) != used.end()) names.push_back(v);
    std::vector<std::string> rest;
    for (const auto& v : used)
        if (v != "x" && v != "y") rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    names.insert(names.end(), rest.begin(), rest.end());
    return p.with_vars(make_vars(names)).to_string();
}
std::string str(const Rational& r) { return r.to_string(); }

template <class K>
Poly<K> poly_of(const json& j) {
    if (j.is_number_integer()) return Poly<K>::constant(K(Rational(j.get<long>())));
    return parse_poly<K>(j.get<std::string>());
}
QPoly qpoly(const json& j) { return poly_of<Rational>(j); }
QEPoly qepoly(const json& j) { return poly_of<QuadExt>(j); }

Rational rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) throw std::invalid_argument("expected an exact rational string, got " + j.dump());
    return parse_rational_expr(j.get<std::string>());
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(str(*v)) : json(nullptr);
}

json interval(const RInterval& r) { return {{"lo", str(r.lo)}, {"hi", str(r.hi)}}; }
RInterval interval_of(const json& j) { return RInterval(rational(j.at("lo")), rational(j.at("hi"))); }

template <class K>
json polys(const std::vector<Poly<K>>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(str(p));
    return a;
}
std::vector<QPoly> qpolys(const json& j) {
    std::vector<QPoly> out;
    for (const auto& e : j) out.push_back(qpoly(e));
    return out;
}

template <class K>
json ratfunc(const RatFunc<K>& r) { return {{"num", str(r.num())}, {"den", str(r.den())}}; }
RatFunc<QuadExt> ratfunc_of(const json& j) { return RatFunc<QuadExt>(qepoly(j.at("num")), qepoly(j.at("den"))); }

// ---- Lyapunov

template <class K>
json lyap(const LyapunovReport<K>& r) {
    json H = json::object();
    for (const auto& [k, h] : r.H) H[std::to_string(k)] = str(h);
    return {{"kind", "lyapunov"},
            {"quantities", polys(r.quantities)},
            {"psi_choice", r.psi_choice},
            {"kernel_pinning", r.kernel_pinning},
            {"H", H},
            {"parameters", r.parameters},
            {"radicand", r.radicand},
            {"residual_verified", r.residual_verified}};
}

// ---- cascade

json trace(const EliminationTrace& t) {
    json zero = json::array(), branch = json::array();
    for (bool z : t.zero_resultant) zero.push_back(z);
    for (const auto& b : t.branch_factors) branch.push_back(polys(b));
    return {{"stage", t.stage},
            {"eliminated_variable", t.eliminated_variable},
            {"inputs", polys(t.inputs)},
            {"resultants", polys(t.resultants)},
            {"zero_resultant", zero},
            {"common_factors", polys(t.common_factors)},
            {"cofactor_remainders", polys(t.cofactor_remainders)},
            {"branch_factors", branch},
            {"next_inputs", polys(t.next_inputs)},
            {"side_branch", polys(t.side_branch)},
            {"verified", t.verify()}};
}

EliminationTrace trace_of(const json& j) {
    EliminationTrace t;
    t.stage = j.at("stage").get<int>();
    t.eliminated_variable = j.at("eliminated_variable").get<std::string>();
    t.inputs = qpolys(j.at("inputs"));
    t.resultants = qpolys(j.at("resultants"));
    for (const auto& z : j.at("zero_resultant")) t.zero_resultant.push_back(z.get<bool>());
    t.common_factors = qpolys(j.at("common_factors"));
    t.cofactor_remainders = qpolys(j.at("cofactor_remainders"));
    for (const auto& b : j.at("branch_factors")) t.branch_factors.push_back(qpolys(b));
    t.next_inputs = qpolys(j.at("next_inputs"));
    t.side_branch = qpolys(j.at("side_branch"));
    return t;
}

// ---- certificates

SymmetryLine line_of(const std::string& s) {
    for (auto l : {SymmetryLine::x_zero, SymmetryLine::y_zero, SymmetryLine::y_eq_x, SymmetryLine::y_eq_minus_x})
        if (s == to_string(l)) return l;
    throw std::invalid_argument("unknown symmetry line " + s);
}

CenterCertificate::Kind cert_kind_of(const std::string& s) {
    using K = CenterCertificate::Kind;
    for (auto k : {K::reversible, K::darboux, K::separable, K::none})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown certificate kind " + s);
}

json cert(const CenterCertificate& c) {
    json factors = json::array();
    for (const auto& f : c.factors)
        factors.push_back({{"curve", str(f.curve)}, {"exponent", str(f.exponent)}, {"cofactor", str(f.cofactor)}});
    json split = nullptr;
    if (c.split)
        split = {{"fx", str(c.split->fx)}, {"gy", str(c.split->gy)}, {"hx", str(c.split->hx)}, {"ky", str(c.split->ky)}};
    json j = {{"kind", to_string(c.kind)}, {"factors", factors}, {"split", split}, {"witness", c.witness}};
    j["line"] = c.kind == CenterCertificate::Kind::reversible ? json(to_string(c.line)) : json(nullptr);
    return j;
}

CenterCertificate cert_of(const json& j) {
    CenterCertificate c;
    c.kind = cert_kind_of(j.at("kind").get<std::string>());
    if (!j.at("line").is_null()) c.line = line_of(j.at("line").get<std::string>());
    for (const auto& f : j.at("factors"))
        c.factors.push_back({qpoly(f.at("curve")), rational(f.at("exponent")), qpoly(f.at("cofactor"))});
    if (!j.at("split").is_null()) {
        const auto& s = j.at("split");
        c.split = SeparableSplit{qpoly(s.at("fx")), qpoly(s.at("gy")), qpoly(s.at("hx")), qpoly(s.at("ky"))};
    }
    c.witness = j.at("witness").get<std::string>();
    return c;
}

// ---- singularities

SingularityType type_of(const std::string& s) {
    using T = SingularityType;
    for (auto t : {T::saddle, T::antisaddle_node, T::antisaddle_focus, T::linear_center, T::degenerate})
        if (s == to_string(t)) return t;
    throw std::invalid_argument("unknown singularity type " + s);
}

json point(const Singularity& p) {
    return {{"x", interval(p.x)},
            {"y", interval(p.y)},
            {"exact_x", opt(p.exact_x)},
            {"exact_y", opt(p.exact_y)},
            {"det_sign", p.det_sign},
            {"trace_sign", p.trace_sign},
            {"trace_certified", p.trace_certified},
            {"type", to_string(p.type)},
            {"index", p.index ? json(*p.index) : json(nullptr)},
            {"approx", {p.mid_x(), p.mid_y()}}};
}

Singularity point_of(const json& j) {
    Singularity p;
    p.x = interval_of(j.at("x"));
    p.y = interval_of(j.at("y"));
    if (!j.at("exact_x").is_null()) p.exact_x = rational(j.at("exact_x"));
    if (!j.at("exact_y").is_null()) p.exact_y = rational(j.at("exact_y"));
    p.det_sign = j.at("det_sign").get<int>();
    p.trace_sign = j.at("trace_sign").get<int>();
    p.trace_certified = j.at("trace_certified").get<bool>();
    p.type = type_of(j.at("type").get<std::string>());
    if (!j.at("index").is_null()) p.index = j.at("index").get<int>();
    return p;
}

// ---- bifurcation

json candidate(const MuCandidate& c) {
    return {{"value", interval(c.value)},
            {"exact", opt(c.exact)},
            {"simple", c.simple},
            {"f_ell_sign", c.f_ell_sign},
            {"denominators_ok", c.denominators_ok},
            {"rejection", c.rejection},
            {"approx", c.value.mid().to_double()}};
}

MuCandidate candidate_of(const json& j) {
    MuCandidate c;
    c.value = interval_of(j.at("value"));
    if (!j.at("exact").is_null()) c.exact = rational(j.at("exact"));
    c.simple = j.at("simple").get<bool>();
    c.f_ell_sign = j.at("f_ell_sign").get<int>();
    c.denominators_ok = j.at("denominators_ok").get<bool>();
    c.rejection = j.at("rejection").get<std::string>();
    return c;
}

json row(const ReturnRow& r) {
    return {{"radius", r.radius},
            {"displacement", r.displacement ? json(*r.displacement) : json(nullptr)},
            {"period", r.period},
            {"diagnostic", r.diagnostic}};
}

} // namespace

std::string to_json(const LyapunovReport<Rational>& r) { return dump(lyap(r)); }
std::string to_json(const LyapunovReport<QuadExt>& r) { return dump(lyap(r)); }

template <class K>
LyapunovReport<K> lyapunov_from_json(const std::string& text) {
    json j = parse_text(text);
    LyapunovReport<K> r;
    for (const auto& q : j.at("quantities")) r.quantities.push_back(poly_of<K>(q));
    r.psi_choice = j.at("psi_choice").get<std::string>();
    r.kernel_pinning = j.at("kernel_pinning").get<std::string>();
    for (const auto& [k, h] : j.at("H").items()) r.H[std::stoi(k)] = poly_of<K>(h);
    r.parameters = j.at("parameters").get<std::vector<std::string>>();
    r.radicand = j.at("radicand").get<long>();
    r.residual_verified = j.at("residual_verified").get<bool>();
    return r;
}
template LyapunovReport<Rational> lyapunov_from_json<Rational>(const std::string&);
template LyapunovReport<QuadExt> lyapunov_from_json<QuadExt>(const std::string&);

std::string to_json(const CascadeResult& r) {
    json stages = json::array();
    for (const auto& t : r.stages) stages.push_back(trace(t));
    return dump({{"kind", "cascade"}, {"stages", stages}, {"termination", r.termination}});
}

CascadeResult cascade_from_json(const std::string& text) {
    json j = parse_text(text);
    CascadeResult r;
    for (const auto& t : j.at("stages")) r.stages.push_back(trace_of(t));
    r.termination = j.at("termination").get<std::string>();
    return r;
}

std::string to_json(const CenterCertificate& c) { return dump(cert(c)); }
CenterCertificate certificate_from_json(const std::string& text) { return cert_of(parse_text(text)); }

std::string to_json(const SingularityReport& r) {
    json pts = json::array(), side = json::array();
    for (const auto& p : r.points) pts.push_back(point(p));
    for (const auto& s : r.side_branch) side.push_back(interval(s));
    return dump({{"kind", "singularities"},
                 {"points", pts},
                 {"degenerate_family", r.degenerate_family},
                 {"diagnostic", r.diagnostic},
                 {"common_component", opt(r.common_component)},
                 {"side_branch", side}});
}

SingularityReport singularities_from_json(const std::string& text) {
    json j = parse_text(text);
    SingularityReport r;
    for (const auto& p : j.at("points")) r.points.push_back(point_of(p));
    r.degenerate_family = j.at("degenerate_family").get<bool>();
    r.diagnostic = j.at("diagnostic").get<std::string>();
    if (!j.at("common_component").is_null()) r.common_component = qpoly(j.at("common_component"));
    for (const auto& s : j.at("side_branch")) r.side_branch.push_back(interval_of(s));
    return r;
}

std::string to_json(const BerlinskiiResult& r) {
    return dump({{"kind", to_string(r.kind)},
                 {"inner_antisaddle", r.inner_antisaddle},
                 {"index_sum", r.index_sum},
                 {"hull", r.hull},
                 {"diagnostic", r.diagnostic}});
}

BerlinskiiResult berlinskii_from_json(const std::string& text) {
    json j = parse_text(text);
    BerlinskiiResult r;
    std::string k = j.at("kind").get<std::string>();
    bool known = false;
    for (auto c : {BerlinskiiKind::convex_alternating, BerlinskiiKind::triangle_config, BerlinskiiKind::counterexample,
                   BerlinskiiKind::not_applicable})
        if (k == to_string(c)) {
            r.kind = c;
            known = true;
        }
    if (!known) throw std::invalid_argument("unknown configuration " + k);
    r.inner_antisaddle = j.at("inner_antisaddle").get<bool>();
    r.index_sum = j.at("index_sum").get<int>();
    r.hull = j.at("hull").get<std::vector<std::size_t>>();
    r.diagnostic = j.at("diagnostic").get<std::string>();
    return r;
}

std::string to_json(const std::vector<ContactPoint>& r) {
    json a = json::array();
    for (const auto& c : r) a.push_back({{"x", interval(c.x)}, {"y", interval(c.y)}, {"simple", c.simple}});
    return dump({{"kind", "contact_points"}, {"points", a}});
}

std::vector<ContactPoint> contacts_from_json(const std::string& text) {
    std::vector<ContactPoint> out;
    json j = parse_text(text);
    for (const auto& c : j.at("points"))
        out.push_back({interval_of(c.at("x")), interval_of(c.at("y")), c.at("simple").get<bool>()});
    return out;
}

std::string to_json(const GGTReport& r) {
    json lp = json::array(), M = json::array(), g = json::array(), f = json::array(), fp = json::array(),
         cands = json::array();
    for (std::size_t i = 0; i < r.linear_parts.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.linear_parts.cols(); ++j) row.push_back(str(r.linear_parts(i, j)));
        lp.push_back(row);
    }
    for (std::size_t i = 0; i < r.M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.M.cols(); ++j) row.push_back(ratfunc(r.M(i, j)));
        M.push_back(row);
    }
    for (const auto& row : r.g) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(ratfunc(e));
        g.push_back(jr);
    }
    for (const auto& e : r.f) {
        f.push_back(ratfunc(e));
        fp.push_back(e.is_polynomial() ? json(str(e.as_polynomial())) : json(nullptr));
    }
    for (const auto& c : r.candidates) cands.push_back(candidate(c));
    return dump({{"kind", "ggt"},
                 {"label", r.label},
                 {"radicand", r.radicand},
                 {"mu", r.mu},
                 {"lambda", r.lambda},
                 {"linear_parts", lp},
                 {"linear_parts_shape", {r.linear_parts.rows(), r.linear_parts.cols()}},
                 {"k", r.k},
                 {"ell", r.ell},
                 {"M", M},
                 {"M_shape", {r.M.rows(), r.M.cols()}},
                 {"g", g},
                 {"f", f},
                 {"f_poly", fp},
                 {"candidates", cands},
                 {"mu0", r.mu0 ? candidate(*r.mu0) : json(nullptr)},
                 {"identity_rows_verified", r.identity_rows_verified},
                 {"verdict", to_string(r.verdict)},
                 {"cycles", r.cycles},
                 {"reason", r.reason}});
}

GGTReport ggt_from_json(const std::string& text) {
    json j = parse_text(text);
    GGTReport r;
    r.label = j.at("label").get<std::string>();
    r.radicand = j.at("radicand").get<long>();
    r.mu = j.at("mu").get<std::vector<std::string>>();
    r.lambda = j.at("lambda").get<std::vector<std::string>>();
    auto lps = j.at("linear_parts_shape").get<std::vector<std::size_t>>();
    r.linear_parts = Matrix<QEPoly>(lps.at(0), lps.at(1));
    for (std::size_t i = 0; i < lps[0]; ++i)
        for (std::size_t k = 0; k < lps[1]; ++k) r.linear_parts(i, k) = qepoly(j.at("linear_parts").at(i).at(k));
    r.k = j.at("k").get<int>();
    r.ell = j.at("ell").get<int>();
    auto ms = j.at("M_shape").get<std::vector<std::size_t>>();
    r.M = Matrix<RatFunc<QuadExt>>(ms.at(0), ms.at(1));
    for (std::size_t i = 0; i < ms[0]; ++i)
        for (std::size_t k = 0; k < ms[1]; ++k) r.M(i, k) = ratfunc_of(j.at("M").at(i).at(k));
    for (const auto& row : j.at("g")) {
        std::vector<RatFunc<QuadExt>> v;
        for (const auto& e : row) v.push_back(ratfunc_of(e));
        r.g.push_back(v);
    }
    for (const auto& e : j.at("f")) r.f.push_back(ratfunc_of(e));
    for (const auto& c : j.at("candidates")) r.candidates.push_back(candidate_of(c));
    if (!j.at("mu0").is_null()) r.mu0 = candidate_of(j.at("mu0"));
    r.identity_rows_verified = j.at("identity_rows_verified").get<bool>();
    std::string v = j.at("verdict").get<std::string>();
    if (v == to_string(GGTReport::Verdict::cycles)) r.verdict = GGTReport::Verdict::cycles;
    else if (v == to_string(GGTReport::Verdict::conditions_fail)) r.verdict = GGTReport::Verdict::conditions_fail;
    else throw std::invalid_argument("unknown verdict " + v);
    r.cycles = j.at("cycles").get<int>();
    r.reason = j.at("reason").get<std::string>();
    return r;
}

std::string to_json(const HopfReport& r) {
    return dump({{"kind", "hopf"},
                 {"result", to_string(r.kind)},
                 {"L1", str(r.L1)},
                 {"trace_alpha", str(r.trace_alpha)},
                 {"radicand", r.radicand},
                 {"condition", r.condition}});
}

HopfReport hopf_from_json(const std::string& text) {
    json j = parse_text(text);
    HopfReport r;
    std::string k = j.at("result").get<std::string>();
    if (k == to_string(HopfReport::Kind::one_cycle)) r.kind = HopfReport::Kind::one_cycle;
    else if (k == to_string(HopfReport::Kind::none)) r.kind = HopfReport::Kind::none;
    else throw std::invalid_argument("unknown Hopf result " + k);
    r.L1 = qepoly(j.at("L1"));
    r.trace_alpha = rational(j.at("trace_alpha"));
    r.radicand = j.at("radicand").get<long>();
    r.condition = j.at("condition").get<std::string>();
    return r;
}

std::string to_json(const Trajectory& t) {
    return dump({{"kind", "trajectory"},
                 {"t", t.t},
                 {"x", t.x},
                 {"y", t.y},
                 {"truncated", t.truncated},
                 {"diagnostic", t.diagnostic},
                 {"steps", t.steps}});
}

Trajectory trajectory_from_json(const std::string& text) {
    json j = parse_text(text);
    Trajectory t;
    t.t = j.at("t").get<std::vector<double>>();
    t.x = j.at("x").get<std::vector<double>>();
    t.y = j.at("y").get<std::vector<double>>();
    t.truncated = j.at("truncated").get<bool>();
    t.diagnostic = j.at("diagnostic").get<std::string>();
    t.steps = j.at("steps").get<std::size_t>();
    return t;
}

std::string to_json(const ReturnMapTable& t) {
    json rows = json::array(), sc = json::array();
    for (const auto& r : t.rows) rows.push_back(row(r));
    for (const auto& [a, b] : t.sign_changes) sc.push_back({a, b});
    return dump({{"kind", "return_map"}, {"rows", rows}, {"sign_changes", sc}});
}

ReturnMapTable return_map_from_json(const std::string& text) {
    json j = parse_text(text);
    ReturnMapTable t;
    for (const auto& r : j.at("rows")) {
        ReturnRow row;
        row.radius = r.at("radius").get<double>();
        if (!r.at("displacement").is_null()) row.displacement = r.at("displacement").get<double>();
        row.period = r.at("period").get<double>();
        row.diagnostic = r.at("diagnostic").get<std::string>();
        t.rows.push_back(row);
    }
    for (const auto& s : j.at("sign_changes")) t.sign_changes.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
    return t;
}

std::string to_json(const VectorField& f) {
    json j = {{"P", str(f.P)}, {"Q", str(f.Q)}, {"d", f.d}, {"class", to_string(f.field_class)}};
    if (f.f) {
        j["f"] = str(*f.f);
        j["g"] = str(*f.g);
    }
    return dump(j);
}

namespace {

VectorField field_of(const json& j) {
    if (j.contains("family")) return builtin_family(j.at("family").get<std::string>());
    if (j.contains("f") && j.contains("g")) return VectorField::from_factors(qpoly(j.at("f")), qpoly(j.at("g")));
    if (j.contains("P") && j.contains("Q")) return VectorField::from_components(qpoly(j.at("P")), qpoly(j.at("Q")));
    throw std::invalid_argument("model needs \"family\", \"f\"/\"g\" or \"P\"/\"Q\"");
}

} // namespace

VectorField field_from_json(const std::string& text) { return field_of(parse_text(text)); }

GameModel game_from_json(const std::string& text) {
    json j = parse_text(text);
    auto matrix = [&](const char* key) {
        const json& m = j.at(key);
        if (!m.is_array() || m.size() != 2) throw std::invalid_argument(std::string(key) + " must be a 2x2 matrix");
        PayoffMatrix out;
        for (std::size_t r = 0; r < 2; ++r) {
            if (!m[r].is_array() || m[r].size() != 2)
                throw std::invalid_argument(std::string(key) + " must be a 2x2 matrix");
            for (std::size_t c = 0; c < 2; ++c) {
                const json& e = m[r][c];
                if (e.is_number_float()) throw std::invalid_argument("payoff entries must be exact: " + e.dump());
                out[r][c] = qpoly(e);
            }
        }
        return out;
    };
    std::optional<unsigned> d;
    if (j.contains("d")) d = j.at("d").get<unsigned>();
    return GameModel::make(matrix("A"), matrix("B"), d);
}

PerturbationSetup setup_from_json(const std::string& text) {
    json j = parse_text(text);
    VectorField base = field_of(j);
    std::vector<PerturbationTerm> terms;
    if (j.contains("terms"))
        for (const auto& t : j.at("terms")) {
            PerturbationTerm pt;
            std::string target = t.at("target").get<std::string>();
            if (target != "P" && target != "Q") throw std::invalid_argument("term target must be P or Q");
            pt.target = target == "P" ? Target::P : Target::Q;
            pt.term = qpoly(t.at("term"));
            pt.inner = t.value("inner", true);
            terms.push_back(pt);
        }
    PerturbationSetup s = build_perturbation(base, terms, j.value("alpha", std::string("alpha")));
    s.label = j.value("label", std::string("custom"));
    if (j.contains("point")) {
        s.px = rational(j.at("point").at(0));
        s.py = rational(j.at("point").at(1));
    }
    if (j.contains("frame")) {
        s.frame.frame_a = rational(j.at("frame").at(0));
        s.frame.frame_b = rational(j.at("frame").at(1));
    }
    if (j.contains("N")) s.N = j.at("N").get<int>();
    if (j.contains("fixed"))
        for (const auto& [k, v] : j.at("fixed").items()) s.fixed[k] = rational(v);
    return s;
}

std::string trajectory_csv(const Trajectory& t) {
    std::ostringstream o;
    o << "t,x,y\n";
    char buf[96];
    for (std::size_t i = 0; i < t.t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t.t[i], t.x[i], t.y[i]);
        o << buf;
    }
    return o.str();
}

std::string return_map_csv(const ReturnMapTable& t) {
    std::ostringstream o;
    o << "radius,displacement,period\n";
    char buf[96];
    for (const auto& r : t.rows) {
        if (r.displacement) std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.radius, *r.displacement, r.period);
        else std::snprintf(buf, sizeof buf, "%.17g,,\n", r.radius);
        o << buf;
    }
    return o.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace cycleforge::io
