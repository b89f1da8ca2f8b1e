#include "cycleforge/dynamics/numeric.hpp"
#include "cycleforge/parallel.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cycleforge {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

NumericField::NumericField(const VectorField& field, const std::map<std::string, Rational>& binding) {
    VectorField b = binding.empty() ? field : field.bind(binding);
    for (const auto& v : b.P.used_variables())
        if (v != "x" && v != "y") throw std::invalid_argument("unbound parameter " + v);
    for (const auto& v : b.Q.used_variables())
        if (v != "x" && v != "y") throw std::invalid_argument("unbound parameter " + v);
    if (b.f) {
        factored_ = true;
        f_ = compile(*b.f);
        g_ = compile(*b.g);
    }
    P_ = compile(b.P);
    Q_ = compile(b.Q);
    Px_ = compile(b.P.derivative("x"));
    Py_ = compile(b.P.derivative("y"));
    Qx_ = compile(b.Q.derivative("x"));
    Qy_ = compile(b.Q.derivative("y"));
}

std::vector<NumericField::Term> NumericField::compile(const QPoly& p) {
    std::vector<Term> out;
    int ix = var_index(p.vars(), "x"), iy = var_index(p.vars(), "y");
    for (const auto& [m, c] : p.terms())
        out.push_back({c.to_double(), ix < 0 ? 0u : m[static_cast<std::size_t>(ix)],
                       iy < 0 ? 0u : m[static_cast<std::size_t>(iy)]});
    return out;
}

double NumericField::eval(const std::vector<Term>& t, double x, double y) {
    double acc = 0;
    for (const auto& term : t) {
        double v = term.c;
        for (unsigned k = 0; k < term.i; ++k) v *= x;
        for (unsigned k = 0; k < term.j; ++k) v *= y;
        acc += v;
    }
    return acc;
}

std::array<double, 2> NumericField::operator()(double x, double y) const {
    if (factored_) return {(4 * x * x - 1) * eval(f_, x, y), (4 * y * y - 1) * eval(g_, x, y)};
    return {eval(P_, x, y), eval(Q_, x, y)};
}

std::array<double, 4> NumericField::jacobian(double x, double y) const {
    return {eval(Px_, x, y), eval(Py_, x, y), eval(Qx_, x, y), eval(Qy_, x, y)};
}

namespace {

auto make_stepper(const IntegrateOptions& o) {
    return odeint::make_dense_output(o.atol, o.rtol, odeint::runge_kutta_dopri5<State>());
}

auto system_of(const NumericField& f) {
    return [&f](const State& s, State& ds, double) {
        auto v = f(s[0], s[1]);
        ds = v;
    };
}

} // namespace

Trajectory integrate(const NumericField& field, std::array<double, 2> x0, double tmax, const IntegrateOptions& opts) {
    if (!(opts.rtol > 0) || !(opts.atol > 0)) throw std::invalid_argument("tolerances must be positive");
    Trajectory tr;
    auto push = [&](double t, const State& s) {
        tr.t.push_back(t);
        tr.x.push_back(s[0]);
        tr.y.push_back(s[1]);
    };
    push(0, x0);
    if (tmax <= 0) return tr;
    auto stepper = make_stepper(opts);
    auto sys = system_of(field);
    stepper.initialize(x0, 0.0, std::min(opts.h0, tmax));
    double next_sample = opts.stride;
    try {
        while (stepper.current_time() < tmax) {
            if (tr.steps++ >= opts.max_steps) {
                tr.truncated = true;
                tr.diagnostic = "step limit reached";
                break;
            }
            auto [t0, t1] = stepper.do_step(sys);
            if (t1 - t0 < 1e-14 * std::max(1.0, std::abs(t1))) {
                tr.truncated = true;
                tr.diagnostic = "step size underflow at t=" + std::to_string(t1);
                break;
            }
            State s = stepper.current_state();
            if (!std::isfinite(s[0]) || !std::isfinite(s[1])) {
                tr.truncated = true;
                tr.diagnostic = "non-finite state at t=" + std::to_string(t1);
                break;
            }
            if (opts.stride > 0) {
                State c;
                while (next_sample <= std::min(t1, tmax)) {
                    stepper.calc_state(next_sample, c);
                    push(next_sample, c);
                    next_sample += opts.stride;
                }
            } else if (t1 <= tmax) {
                push(t1, s);
            }
            if (t1 >= tmax && (opts.stride <= 0 || tr.t.back() < tmax)) {
                State c;
                stepper.calc_state(tmax, c);
                if (opts.stride > 0 || t1 > tmax) push(tmax, c);
            }
        }
    } catch (const std::exception& e) {
        tr.truncated = true;
        tr.diagnostic = e.what();
    }
    return tr;
}

namespace {

ReturnRow one_return(const NumericField& field, State p, State d, double r, const ReturnMapOptions& o) {
    ReturnRow row;
    row.radius = r;
    auto stepper = make_stepper(o.integrate);
    auto sys = system_of(field);
    State z{p[0] + r * d[0], p[1] + r * d[1]};
    auto rho = [&](const State& s) { return d[0] * (s[0] - p[0]) + d[1] * (s[1] - p[1]); };
    auto psi = [&](const State& s) { return -d[1] * (s[0] - p[0]) + d[0] * (s[1] - p[1]); };
    stepper.initialize(z, 0.0, std::min(o.integrate.h0, r));
    double theta = 0, prev = 0;
    std::size_t steps = 0;
    try {
        while (stepper.current_time() < o.tmax) {
            if (++steps > o.integrate.max_steps) {
                row.diagnostic = "step limit reached";
                return row;
            }
            auto [t0, t1] = stepper.do_step(sys);
            State s = stepper.current_state();
            double dist = std::hypot(s[0] - p[0], s[1] - p[1]);
            if (!std::isfinite(dist) || dist > o.guard) {
                row.diagnostic = "left the guard annulus";
                return row;
            }
            if (dist == 0) {
                row.diagnostic = "reached the focus";
                return row;
            }
            double a = std::atan2(psi(s), rho(s));
            double da = a - prev;
            if (da > std::numbers::pi) da -= 2 * std::numbers::pi;
            if (da < -std::numbers::pi) da += 2 * std::numbers::pi;
            double before = theta;
            theta += da;
            prev = a;
            if (std::abs(theta) >= 2 * std::numbers::pi && std::abs(before) < 2 * std::numbers::pi) {
                // psi changes sign on [t0, t1] with rho > 0; bisect in time
                State c;
                double lo = t0, hi = t1;
                stepper.calc_state(lo, c);
                double slo = psi(c);
                while (hi - lo > o.event_tol) {
                    double mid = 0.5 * (lo + hi);
                    stepper.calc_state(mid, c);
                    double sm = psi(c);
                    if ((sm < 0) == (slo < 0) && sm != 0) {
                        lo = mid;
                        slo = sm;
                    } else {
                        hi = mid;
                    }
                }
                stepper.calc_state(0.5 * (lo + hi), c);
                row.displacement = rho(c) - r;
                row.period = 0.5 * (lo + hi);
                return row;
            }
        }
        row.diagnostic = "no return before tmax";
    } catch (const std::exception& e) {
        row.diagnostic = e.what();
    }
    return row;
}

} // namespace

ReturnMapTable return_map(const NumericField& field, std::array<double, 2> focus, std::array<double, 2> direction,
                          const std::vector<double>& radii, const ReturnMapOptions& opts) {
    double n = std::hypot(direction[0], direction[1]);
    if (!(n > 0)) throw std::invalid_argument("zero ray direction");
    State d{direction[0] / n, direction[1] / n};
    ReturnMapTable tab;
    tab.rows.resize(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) { tab.rows[i] = one_return(field, focus, d, radii[i], opts); });
    for (std::size_t i = 1; i < tab.rows.size(); ++i) {
        const auto &a = tab.rows[i - 1], &b = tab.rows[i];
        if (a.displacement && b.displacement && ((*a.displacement < 0) != (*b.displacement < 0)))
            tab.sign_changes.push_back({a.radius, b.radius});
    }
    return tab;
}

std::vector<double> log_radii(double lo, double hi, std::size_t n) {
    if (!(lo > 0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_radii needs 0 < lo < hi and n >= 2");
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
    return r;
}

} // namespace cycleforge
