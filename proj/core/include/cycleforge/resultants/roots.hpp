#pragma once

#include "cycleforge/exactalg/interval.hpp"
#include "cycleforge/exactalg/poly.hpp"

#include <optional>
#include <vector>

namespace cycleforge {

// Dense univariate polynomial with integer coefficients, low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
    // p must involve at most one variable; coefficients are cleared to a primitive integer vector.
    static UPoly from(const QPoly& p);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lead() const { return c_.back(); }

    int sign_at(const Rational& x) const;
    Rational eval(const Rational& x) const;
    UPoly derivative() const;
    UPoly primitive() const;
    QPoly to_qpoly(const std::string& var) const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// Pseudo-remainder of a by b scaled by a positive factor (sign-preserving).
UPoly signed_prem(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);

struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int sign_lo = 0;  // signs of the square-free part at the endpoints
    int sign_hi = 0;
    std::optional<Rational> exact;  // set when the root is known to be this rational

    RInterval interval() const { return RInterval(lo, hi); }
    double midpoint() const { return ((lo + hi) / Rational(2)).to_double(); }
    Rational width() const { return hi - lo; }
};

// Disjoint isolating intervals sorted increasingly; one simple root of the square-free part each.
std::vector<IsolatingInterval> isolate_real_roots(const QPoly& p);
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);
// Number of distinct real roots in the open interval (lo, hi) (endpoints must not be roots).
int count_roots_between(const UPoly& p, const Rational& lo, const Rational& hi);
// Bisect until hi - lo <= width.
IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& width);
IsolatingInterval refine(const QPoly& p, IsolatingInterval iv, const Rational& width);
// Exact rational value of the isolated root when its denominator is below 2^32.
std::optional<Rational> rational_root(const UPoly& p, IsolatingInterval& iv);
// Rational roots with denominator at most max_den.
std::vector<Rational> small_rational_roots(const UPoly& p, long max_den);

// Real roots of f = A + B sqrt(d): isolated from the norm A^2 - d B^2 and kept where f changes sign.
std::vector<IsolatingInterval> isolate_real_roots(const QEPoly& f);
int sign_at(const QEPoly& f, const Rational& x);

} // namespace cycleforge
