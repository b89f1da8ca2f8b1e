#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <map>
#include <string>

namespace cycleforge {

// Closed interval with exact rational endpoints.
struct RInterval {
    Rational lo;
    Rational hi;

    RInterval() = default;
    RInterval(const Rational& v) : lo(v), hi(v) {}
    RInterval(const Rational& a, const Rational& b) : lo(a), hi(b) {
        if (hi < lo) throw std::invalid_argument("empty interval");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    // +1 / -1 when the whole interval has that sign, 0 when undecided
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    friend RInterval operator+(const RInterval& a, const RInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend RInterval operator-(const RInterval& a, const RInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend RInterval operator*(const RInterval& a, const RInterval& b) {
        Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rational mn = p[0], mx = p[0];
        for (const auto& v : p) {
            if (v < mn) mn = v;
            if (mx < v) mx = v;
        }
        return {mn, mx};
    }
    RInterval operator-() const { return {-hi, -lo}; }
    RInterval pow(unsigned e) const;
    friend bool operator==(const RInterval&, const RInterval&) = default;
};

// Enclosure of sqrt(d) of width at most 2^-bits.
RInterval sqrt_enclosure(long d, unsigned bits = 96);
RInterval enclose(const Rational& c);
RInterval enclose(const QuadExt& c);

template <class K>
RInterval eval_interval(const Poly<K>& p, const std::map<std::string, RInterval>& box) {
    std::vector<const RInterval*> at(p.vars()->size(), nullptr);
    for (std::size_t i = 0; i < at.size(); ++i) {
        auto it = box.find((*p.vars())[i]);
        if (it != box.end()) at[i] = &it->second;
    }
    RInterval acc(Rational(0));
    for (const auto& [m, c] : p.terms()) {
        RInterval t = enclose(c);
        for (std::size_t i = 0; i < at.size(); ++i) {
            if (m[i] == 0) continue;
            if (!at[i]) throw std::invalid_argument("no interval for variable " + (*p.vars())[i]);
            t = t * at[i]->pow(m[i]);
        }
        acc = acc + t;
    }
    return acc;
}

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

} // namespace cycleforge
