#include "cycleforge/exactalg/monomial.hpp"

#include <algorithm>

namespace cycleforge {

VarList make_vars(std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList empty_vars() {
    static const VarList e = std::make_shared<const std::vector<std::string>>();
    return e;
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

VarList union_vars(const VarList& a, const VarList& b) {
    if (same_vars(a, b)) return a;
    std::vector<std::string> out = *a;
    bool added = false;
    for (const auto& n : *b)
        if (std::find(out.begin(), out.end(), n) == out.end()) {
            out.push_back(n);
            added = true;
        }
    if (!added) return a;
    return make_vars(std::move(out));
}

int var_index(const VarList& v, const std::string& name) {
    for (std::size_t i = 0; i < v->size(); ++i)
        if ((*v)[i] == name) return static_cast<int>(i);
    return -1;
}

} // namespace cycleforge
