#include "cycleforge/resultants/cascade.hpp"
#include "cycleforge/parallel.hpp"
#include "cycleforge/resultants/gcd.hpp"
#include "cycleforge/resultants/linear_factors.hpp"
#include "cycleforge/resultants/resultant.hpp"

#include <algorithm>
#include <set>

namespace cycleforge {

namespace {

QPoly product(const std::vector<QPoly>& fs, const VarList& vars) {
    QPoly r = QPoly::constant(Rational(1), vars);
    for (const auto& f : fs) r = r * f;
    return r;
}

std::set<std::string> variables_of(const std::vector<QPoly>& ps) {
    std::set<std::string> s;
    for (const auto& p : ps)
        for (const auto& v : p.used_variables()) s.insert(v);
    return s;
}

} // namespace

bool EliminationTrace::verify() const {
    for (std::size_t i = 0; i < resultants.size(); ++i) {
        if (zero_resultant[i]) {
            if (!resultants[i].is_zero()) return false;
            continue;
        }
        if (product(common_factors, resultants[i].vars()) * cofactor_remainders[i] != resultants[i]) return false;
        if (!cofactor_remainders[i].divide_exact(product(branch_factors[i], resultants[i].vars()))) return false;
    }
    return true;
}

CascadeResult cascade(const std::vector<QPoly>& system, const std::vector<std::string>& order, int coeff_bound) {
    if (system.size() < 2) throw std::invalid_argument("cascade needs at least two equations");
    std::set<std::string> seen;
    for (const auto& v : order)
        if (!seen.insert(v).second) throw std::invalid_argument("repeated variable in elimination order: " + v);

    CascadeResult out;
    std::vector<QPoly> inputs = system;
    out.termination = "order exhausted";
    for (std::size_t t = 0; t < order.size(); ++t) {
        if (inputs.size() < 2) {
            out.termination = inputs.empty() ? "no equations left" : "single equation left";
            break;
        }
        if (variables_of(inputs).size() <= 1) {
            out.termination = "one variable remains";
            break;
        }
        EliminationTrace tr;
        tr.stage = static_cast<int>(t) + 1;
        tr.eliminated_variable = order[t];
        tr.inputs = inputs;
        const QPoly& first = inputs[0];
        std::size_t n = inputs.size() - 1;
        tr.resultants.assign(n, QPoly());
        parallel_for(n, [&](std::size_t i) { tr.resultants[i] = resultant(first, inputs[i + 1], order[t]); });
        tr.zero_resultant.resize(n);
        std::vector<QPoly> nonzero;
        for (std::size_t i = 0; i < n; ++i) {
            tr.zero_resultant[i] = tr.resultants[i].is_zero();
            if (!tr.zero_resultant[i]) nonzero.push_back(tr.resultants[i]);
        }
        if (nonzero.size() >= 2) {
            QPoly g = multivariate_gcd(nonzero);
            if (!g.is_constant()) {
                auto lf = extract_linear_factors(g, coeff_bound);
                for (const auto& f : lf.factors)
                    for (unsigned k = 0; k < f.multiplicity; ++k) tr.common_factors.push_back(f.form);
                if (!lf.remainder.is_constant()) tr.common_factors.push_back(unit_normal(lf.remainder));
            }
        }
        tr.cofactor_remainders.assign(n, QPoly());
        tr.branch_factors.assign(n, {});
        std::vector<QPoly> rems(n);
        parallel_for(n, [&](std::size_t i) {
            if (tr.zero_resultant[i]) return;
            QPoly c = tr.resultants[i];
            for (const auto& f : tr.common_factors) c = c.exact_quotient(f);
            tr.cofactor_remainders[i] = c;
            auto lf = extract_linear_factors(c, coeff_bound);
            for (const auto& f : lf.factors)
                for (unsigned k = 0; k < f.multiplicity; ++k) tr.branch_factors[i].push_back(f.form);
            rems[i] = lf.remainder;
        });
        bool constant_found = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (tr.zero_resultant[i]) continue;
            if (rems[i].is_constant()) {
                if (tr.branch_factors[i].empty()) constant_found = true;
                continue;
            }
            QPoly u = unit_normal(rems[i]);
            if (std::find(tr.next_inputs.begin(), tr.next_inputs.end(), u) == tr.next_inputs.end())
                tr.next_inputs.push_back(u);
        }
        tr.side_branch = inputs;
        QPoly lc = first.leading_coeff_in(order[t]);
        if (!lc.is_constant()) tr.side_branch.push_back(lc);
        inputs = tr.next_inputs;
        out.stages.push_back(std::move(tr));
        if (nonzero.empty()) {
            out.termination = "all resultants vanish identically";
            break;
        }
        if (constant_found && out.stages.back().common_factors.empty()) {
            out.termination = "nonzero constant resultant";
            break;
        }
    }
    return out;
}

} // namespace cycleforge
