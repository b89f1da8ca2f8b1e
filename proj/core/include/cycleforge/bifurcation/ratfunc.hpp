#pragma once

#include "cycleforge/exactalg/poly.hpp"
#include "cycleforge/resultants/gcd.hpp"

#include <stdexcept>

namespace cycleforge {

// Quotient of polynomials, kept reduced when the scalars are rational.
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::constant(K(1))) {}
    RatFunc(Poly<K> n) : num_(std::move(n)), den_(Poly<K>::constant(K(1))) {}
    RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Poly<K> as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
        return num_.scale(K(1) / den_.constant_value());
    }
    std::string to_string() const {
        if (den_.is_constant() && den_.constant_value() == K(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a.num_ * b.den_ - b.num_ * a.den_).is_zero(); }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(K(1), num_.vars());
            return;
        }
        if (!den_.is_constant()) {
            if (auto q = num_.divide_exact(den_)) {
                num_ = *q;
                den_ = Poly<K>::constant(K(1), num_.vars());
                return;
            }
            if constexpr (std::is_same_v<K, Rational>) {
                Poly<K> g = multivariate_gcd(num_, den_);
                if (!g.is_constant()) {
                    num_ = num_.exact_quotient(g);
                    den_ = den_.exact_quotient(g);
                }
            }
        }
        K lc = den_.leading_term().second;
        if (!(lc == K(1))) {
            num_ = num_.scale(K(1) / lc);
            den_ = den_.scale(K(1) / lc);
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

} // namespace cycleforge
