#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/io/json.hpp"
#include "cycleforge/lyapunov/normalize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>
#include <sstream>

using namespace cycleforge;
using nlohmann::json;

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    std::string family;
    std::string prop;
    std::string setup;
    std::string condition;
    std::string order;
    std::string set;
    std::string point;
    std::string region = "delta";
    std::string radii;
    std::string x0;
    std::string format = "csv";
    std::string out;
    int N = 0;
    int bound = 4;
    double rtol = 1e-10;
    double atol = 1e-12;
    double tmax = 10.0;
    double stride = 0.0;
    bool strict = false;
};

json load_input(const Config& c, const std::set<std::string>& allowed) {
    if (c.input.empty()) return json::object();
    std::string text = io::read_file(c.input);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        // re-parse through the library to get line and column
        io::field_from_json(text);
    }
    if (!j.is_object()) throw InputError(c.input + ": top level must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw InputError(c.input + ": unknown key \"" + k + "\"");
    return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::pair<Rational, Rational> rational_pair(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw InputError("expected x,y but got \"" + s + "\"");
    return {parse_rational_expr(parts[0]), parse_rational_expr(parts[1])};
}

std::array<double, 2> double_pair(const std::string& s) {
    auto [a, b] = rational_pair(s);
    return {a.to_double(), b.to_double()};
}

Rational rational_of(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw InputError("expected an exact rational, got " + v.dump());
    return parse_rational_expr(v.get<std::string>());
}

std::map<std::string, Rational> binding_of(const Config& c, const json& j) {
    std::map<std::string, Rational> b;
    if (j.contains("binding"))
        for (const auto& [k, v] : j.at("binding").items()) b[k] = rational_of(v);
    for (const auto& item : split(c.set, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--set expects name=value, got \"" + item + "\"");
        b[item.substr(0, eq)] = parse_rational_expr(item.substr(eq + 1));
    }
    return b;
}

VectorField field_of(const Config& c, const json& j) {
    if (!c.family.empty()) return builtin_family(c.family);
    if (j.contains("family") || j.contains("f") || j.contains("P")) return io::field_from_json(j.dump());
    throw InputError("no model: pass --family LABEL or an input file");
}

std::pair<Rational, Rational> point_of(const Config& c, const json& j) {
    if (!c.point.empty()) return rational_pair(c.point);
    if (j.contains("point")) return {rational_of(j.at("point").at(0)), rational_of(j.at("point").at(1))};
    return {Rational(0), Rational(0)};
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) std::cout << text;
    else io::write_atomic(c.out, text);
}

int run_lyap(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding", "point", "N"});
    VectorField field = field_of(c, j);
    auto binding = binding_of(c, j);
    if (!binding.empty()) field = field.bind(binding);
    auto [px, py] = point_of(c, j);
    int N = c.N > 0 ? c.N : j.value("N", 2);
    auto nf = normalize_at(field, px, py);
    auto lines = [&](const auto& rep) {
        for (std::size_t i = 0; i < rep.quantities.size(); ++i)
            std::cout << "L" << i + 1 << " = " << rep.quantities[i].to_string() << "\n";
        if (!c.out.empty()) io::write_atomic(c.out, io::to_json(rep));
        for (const auto& q : rep.quantities)
            if (!q.is_zero()) return ok;
        return c.strict ? negative : ok;
    };
    if (nf.radicand == 0) return lines(lyapunov_quantities(to_rational(nf), N));
    return lines(lyapunov_quantities(nf, N));
}

int run_certify(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding", "point", "extra_curves", "condition"});
    VectorField field = field_of(c, j);
    std::string cond = !c.condition.empty() ? c.condition : j.value("condition", std::string());
    if (!cond.empty()) field = field.substitute(center_condition(cond));
    auto binding = binding_of(c, j);
    if (!binding.empty()) field = field.bind(binding);
    std::vector<QPoly> extra;
    if (j.contains("extra_curves"))
        for (const auto& e : j.at("extra_curves")) extra.push_back(parse_qpoly(e.get<std::string>()));
    auto [px, py] = point_of(c, j);
    auto cert = certify(field, px, py, extra);
    emit(c, io::to_json(cert));
    return cert.kind == CenterCertificate::Kind::none && c.strict ? negative : ok;
}

int run_eliminate(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding", "point", "system", "order", "N", "bound"});
    std::vector<QPoly> system;
    if (j.contains("system")) {
        for (const auto& e : j.at("system")) system.push_back(parse_qpoly(e.get<std::string>()));
    } else {
        VectorField field = field_of(c, j);
        auto binding = binding_of(c, j);
        if (!binding.empty()) field = field.bind(binding);
        auto [px, py] = point_of(c, j);
        int N = c.N > 0 ? c.N : j.value("N", 4);
        auto rep = lyapunov_quantities(to_rational(normalize_at(field, px, py)), N);
        system = rep.quantities;
    }
    std::vector<std::string> order = split(c.order, ',');
    if (order.empty() && j.contains("order")) order = j.at("order").get<std::vector<std::string>>();
    if (order.empty()) throw InputError("eliminate needs a variable order (--order a,b,...)");
    int bound = j.value("bound", c.bound);
    auto res = cascade(system, order, bound);
    emit(c, io::to_json(res));
    return ok;
}

int run_bifurcate(const Config& c) {
    PerturbationSetup setup;
    if (!c.setup.empty()) {
        std::string text = io::read_file(c.setup);
        json j = json::parse(text, nullptr, false);
        if (!j.is_discarded() && j.is_object()) {
            static const std::set<std::string> allowed{"family", "f", "g", "P", "Q", "terms", "alpha", "point",
                                                       "frame", "N", "fixed", "label"};
            for (const auto& [k, v] : j.items())
                if (!allowed.count(k)) throw InputError(c.setup + ": unknown key \"" + k + "\"");
        }
        setup = io::setup_from_json(text);
    } else if (c.prop == "T1c") {
        setup = canned_setup("P9b");
    } else if (!c.prop.empty()) {
        setup = canned_setup(c.prop);
    } else {
        throw InputError("bifurcate needs --prop or --setup");
    }
    if (c.N > 0) setup.N = c.N;

    if (c.prop == "P9c") {
        auto h = hopf_order_one(setup, {});
        json j = json::parse(io::to_json(h));
        if (h.kind == HopfReport::Kind::one_cycle)
            j["total_with_mirror"] = mirror_count(setup, 1, Symmetry::odd_symmetry);
        emit(c, j.dump(2) + "\n");
        return h.kind == HopfReport::Kind::none && c.strict ? negative : ok;
    }
    auto r = ggt_analyze(setup);
    std::string text = io::to_json(r);
    if (c.prop == "T1c" && r.verdict == GGTReport::Verdict::cycles) {
        json j = json::parse(text);
        j["total_with_mirror"] = mirror_count(setup, r.cycles, Symmetry::odd_symmetry);
        text = j.dump(2) + "\n";
    }
    emit(c, text);
    return r.verdict == GGTReport::Verdict::conditions_fail && c.strict ? negative : ok;
}

SolveOptions solve_options(const Config& c) {
    SolveOptions o;
    if (c.region == "plane") o.region = Region::plane;
    else if (c.region != "delta") throw InputError("--region must be delta or plane");
    return o;
}

int run_singular(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding"});
    VectorField field = field_of(c, j);
    auto rep = singularities(field, binding_of(c, j), solve_options(c));
    emit(c, io::to_json(rep));
    return rep.degenerate_family && c.strict ? negative : ok;
}

int run_berlinskii(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding"});
    VectorField field = field_of(c, j);
    SolveOptions o = solve_options(c);
    SingularityReport rep;
    if (o.region == Region::plane) {
        auto bound = field.bind(binding_of(c, j));
        if (!bound.f) throw InputError("plane Berlinskii check needs the field in f, g form");
        rep = solve_system(*bound.f, *bound.g, o);
    } else {
        rep = singularities(field, binding_of(c, j), o);
    }
    auto b = berlinskii_check(rep);
    emit(c, io::to_json(b));
    return b.kind == BerlinskiiKind::counterexample && c.strict ? negative : ok;
}

int run_simulate(const Config& c) {
    json j = load_input(c, {"family", "f", "g", "P", "Q", "binding"});
    if (c.rtol <= 0 || c.atol <= 0) throw InputError("tolerances must be positive");
    NumericField field(field_of(c, j), binding_of(c, j));
    IntegrateOptions io_opts;
    io_opts.rtol = c.rtol;
    io_opts.atol = c.atol;
    io_opts.stride = c.stride;
    if (!c.radii.empty()) {
        auto parts = split(c.radii, ',');
        if (parts.size() != 3) throw InputError("--radii expects lo,hi,n");
        ReturnMapOptions rm;
        rm.integrate = io_opts;
        auto focus = c.point.empty() ? std::array<double, 2>{0, 0} : double_pair(c.point);
        auto table = return_map(field, focus, {1.0, 0.0},
                                log_radii(std::stod(parts[0]), std::stod(parts[1]), std::stoul(parts[2])), rm);
        emit(c, c.format == "json" ? io::to_json(table) : io::return_map_csv(table));
        return ok;
    }
    if (c.x0.empty()) throw InputError("simulate needs --x0 x,y or --radii lo,hi,n");
    auto tr = integrate(field, double_pair(c.x0), c.tmax, io_opts);
    emit(c, c.format == "json" ? io::to_json(tr) : io::trajectory_csv(tr));
    if (tr.truncated) std::cerr << "warning: " << tr.diagnostic << "\n";
    return tr.truncated && c.strict ? negative : ok;
}

int run_game(const Config& c) {
    if (c.input.empty()) throw InputError("game-build needs an input file");
    load_input(c, {"A", "B", "d"});
    auto model = io::game_from_json(io::read_file(c.input));
    emit(c, io::to_json(build_from_game(model)));
    return ok;
}

void common(CLI::App* s, Config& c) {
    s->add_option("input", c.input, "model file (JSON)")->check(CLI::ExistingFile);
    s->add_option("--out", c.out, "write the report here (atomically) instead of stdout");
    s->add_flag("--strict", c.strict, "exit 1 on negative analysis results");
}

void model(CLI::App* s, Config& c) {
    s->add_option("--family", c.family, "built-in family or center condition label");
    s->add_option("--set", c.set, "parameter values, e.g. a11=1,a02=-1/2");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact center-focus and limit cycle analysis for quadratic systems"};
    app.require_subcommand(1);
    Config c;
    std::function<int(const Config&)> action;

    auto* lyap = app.add_subcommand("lyap", "Lyapunov quantities at a linear center");
    common(lyap, c);
    model(lyap, c);
    lyap->add_option("--N", c.N, "number of quantities")->check(CLI::PositiveNumber);
    lyap->add_option("--point", c.point, "singular point x,y (default 0,0)");
    lyap->callback([&] { action = run_lyap; });

    auto* cert = app.add_subcommand("center-certify", "center certificate at a linear center");
    common(cert, c);
    model(cert, c);
    cert->add_option("--condition", c.condition, "center condition label, e.g. C5");
    cert->add_option("--point", c.point, "singular point x,y (default 0,0)");
    cert->callback([&] { action = run_certify; });

    auto* elim = app.add_subcommand("eliminate", "resultant cascade on Lyapunov quantities or a given system");
    common(elim, c);
    model(elim, c);
    elim->add_option("--order", c.order, "elimination order, comma separated");
    elim->add_option("--bound", c.bound, "coefficient bound for linear factor search")->check(CLI::PositiveNumber);
    elim->add_option("--N", c.N, "number of quantities")->check(CLI::PositiveNumber);
    elim->add_option("--point", c.point, "singular point x,y (default 0,0)");
    elim->callback([&] { action = run_eliminate; });

    auto* bif = app.add_subcommand("bifurcate", "small-amplitude limit cycle analysis");
    bif->add_option("--out", c.out, "write the report here (atomically) instead of stdout");
    bif->add_flag("--strict", c.strict, "exit 1 on negative analysis results");
    auto* prop = bif->add_option("--prop", c.prop, "canned setup")
                     ->check(CLI::IsMember({"P7", "P8", "P9b", "P9c", "T1c"}));
    bif->add_option("--setup", c.setup, "setup file (JSON)")->check(CLI::ExistingFile)->excludes(prop);
    bif->add_option("--N", c.N, "order of the Lyapunov expansion")->check(CLI::PositiveNumber);
    bif->callback([&] { action = run_bifurcate; });

    auto* sing = app.add_subcommand("singular", "certified singular points");
    common(sing, c);
    model(sing, c);
    sing->add_option("--region", c.region, "delta (open square) or plane");
    sing->callback([&] { action = run_singular; });

    auto* ber = app.add_subcommand("berlinskii", "configuration of four simple singular points");
    common(ber, c);
    model(ber, c);
    ber->add_option("--region", c.region, "delta (open square) or plane");
    ber->callback([&] { action = run_berlinskii; });

    auto* sim = app.add_subcommand("simulate", "trajectory or return map data");
    common(sim, c);
    model(sim, c);
    sim->add_option("--x0", c.x0, "initial point x,y");
    sim->add_option("--tmax", c.tmax, "integration time")->check(CLI::PositiveNumber);
    sim->add_option("--stride", c.stride, "sampling interval, 0 for solver steps")->check(CLI::NonNegativeNumber);
    sim->add_option("--radii", c.radii, "return map radii lo,hi,n (log spaced)");
    sim->add_option("--point", c.point, "focus for the return map x,y");
    sim->add_option("--rtol", c.rtol, "relative tolerance");
    sim->add_option("--atol", c.atol, "absolute tolerance");
    sim->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sim->callback([&] { action = run_simulate; });

    auto* game = app.add_subcommand("game-build", "replicator field of a bimatrix game");
    common(game, c);
    game->callback([&] { action = run_game; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        return action(c);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const NotALinearCenter& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return input_error;
}
