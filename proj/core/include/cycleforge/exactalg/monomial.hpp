#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycleforge {

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    std::uint16_t operator[](std::size_t i) const { return e[i]; }
    void set(std::size_t i, std::uint16_t v) {
        deg = deg - e[i] + v;
        e[i] = v;
    }
    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        r.deg = deg + o.deg;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // requires divides(o) on the caller side: returns o / *this
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        r.deg = o.deg - deg;
        return r;
    }
};

// graded lexicographic, variable 0 most significant
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : m.e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
VarList empty_vars();
bool same_vars(const VarList& a, const VarList& b);
// a's variables first, then b's variables not already present
VarList union_vars(const VarList& a, const VarList& b);
int var_index(const VarList& v, const std::string& name);

// Total degree of a polynomial; the zero polynomial has degree -infinity.
class Degree {
public:
    static Degree neg_infinity() { return Degree(); }
    static Degree of(unsigned v) {
        Degree d;
        d.finite_ = true;
        d.v_ = v;
        return d;
    }
    bool is_finite() const { return finite_; }
    bool is_neg_infinity() const { return !finite_; }
    unsigned value() const {
        if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
        return v_;
    }
    friend bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
    friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
    friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
    std::string to_string() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    Degree() = default;
    bool finite_ = false;
    unsigned v_ = 0;
};

} // namespace cycleforge
