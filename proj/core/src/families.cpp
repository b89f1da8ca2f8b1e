#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/exactalg/parse.hpp"

#include <stdexcept>

namespace cycleforge {

namespace {

QPoly poly(const char* s) { return parse_qpoly(s, make_vars({"x", "y"})); }

std::map<std::string, QPoly> subs(std::initializer_list<std::pair<const char*, const char*>> l) {
    std::map<std::string, QPoly> m;
    for (const auto& [k, v] : l) m.emplace(k, parse_qpoly(v));
    return m;
}

} // namespace

VectorField family_P4() { return VectorField::from_factors(poly("y + a11*x*y + a02*y^2"), poly("-x + b20*x^2 + b11*x*y")); }

VectorField family_P5() {
    return VectorField::from_factors(poly("y + a20*x^2 + a11*x*y + a02*y^2"), poly("-x + b20*x^2 + b11*x*y + b02*y^2"));
}

VectorField family_P7() { return VectorField::from_factors(poly("y + mu*x*y"), poly("-x + x^2")); }

VectorField family_P8() {
    return VectorField::from_factors(poly("y - x^2 + mu*x*y - y^2"), poly("-x - mu/2*x^2 + 2*x*y - mu/2*y^2"));
}

VectorField family_P9() {
    return VectorField::from_factors(poly("x*y + lam*y^2"), poly("1 - 16*x^2 - 4*alpha*x*y + mu*y^2"));
}

const std::vector<std::string>& center_condition_labels() {
    static const std::vector<std::string> labels{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "D1",
                                                 "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9"};
    return labels;
}

std::map<std::string, QPoly> center_condition(const std::string& label) {
    if (label == "C1") return subs({{"a11", "0"}, {"b20", "0"}});
    if (label == "C2") return subs({{"a11", "0"}, {"b11", "0"}});
    if (label == "C3") return subs({{"a02", "0"}, {"b20", "0"}});
    if (label == "C4") return subs({{"a02", "0"}, {"b11", "0"}});
    if (label == "C5") return subs({{"b20", "a02"}, {"b11", "a11"}});
    if (label == "C6") return subs({{"b20", "-a02"}, {"b11", "-a11"}});
    if (label == "C7") return subs({{"b20", "-a11"}, {"b11", "-a02"}});
    if (label == "D1") return subs({{"a20", "0"}, {"a02", "0"}, {"b20", "0"}, {"b02", "0"}});
    if (label == "D2") return subs({{"a20", "0"}, {"a11", "0"}, {"b11", "0"}, {"b02", "0"}});
    if (label == "D3") return subs({{"a20", "0"}, {"a02", "0"}, {"b11", "0"}});
    if (label == "D4") return subs({{"a11", "0"}, {"b20", "0"}, {"b02", "0"}});
    if (label == "D5") return subs({{"b20", "a02"}, {"b11", "a11"}, {"b02", "a20"}});
    if (label == "D6") return subs({{"b20", "-a02"}, {"b11", "-a11"}, {"b02", "-a20"}});
    if (label == "D7") return subs({{"a20", "-b11/2"}, {"a02", "-b11/2"}, {"b20", "-a11/2"}, {"b02", "-a11/2"}});
    if (label == "D8") return subs({{"a11", "2*a20"}, {"b02", "-a20"}, {"b11", "-2*a20"}, {"b20", "-a02"}});
    if (label == "D9") return subs({{"a11", "-2*a20"}, {"b02", "a20"}, {"b11", "-2*a20"}, {"b20", "a02"}});
    throw std::invalid_argument("unknown center condition '" + label + "'");
}

VectorField builtin_family(const std::string& label) {
    if (label == "P4") return family_P4();
    if (label == "P5") return family_P5();
    if (label == "P7") return family_P7();
    if (label == "P8") return family_P8();
    if (label == "P9") return family_P9();
    if (label.size() == 2 && (label[0] == 'C' || label[0] == 'D')) {
        auto cond = center_condition(label);
        return (label[0] == 'C' ? family_P4() : family_P5()).substitute(cond);
    }
    throw std::invalid_argument("unknown family '" + label + "'");
}

std::vector<std::string> builtin_family_labels() {
    std::vector<std::string> out{"P4", "P5", "P7", "P8", "P9"};
    for (const auto& l : center_condition_labels()) out.push_back(l);
    return out;
}

} // namespace cycleforge
