#pragma once

#include "cycleforge/exactalg/rational.hpp"

#include <stdexcept>
#include <string>

namespace cycleforge {

struct RadicandMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// a + b*sqrt(d) with d square-free. Values with b = 0 carry d = 0 and combine with any radicand.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int v) : a_(v) {}
    QuadExt(long v) : a_(v) {}
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(const Rational& a, const Rational& b, long d);

    static QuadExt sqrt_of(long d) { return QuadExt(Rational(0), Rational(1), d); }
    // sqrt of a positive rational, when the result lies in some Q(sqrt d).
    static QuadExt sqrt_of(const Rational& q);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }
    bool is_rational() const { return b_.is_zero(); }
    int sign() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    QuadExt conj() const;
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    QuadExt inverse() const;
    QuadExt pow(unsigned e) const;
    double to_double() const;
    std::string to_string() const;

private:
    static long join(long d1, long d2);
    void fix();

    Rational a_;
    Rational b_;
    long d_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

long squarefree_part(long n, long* square_root_of_rest = nullptr);

} // namespace cycleforge
