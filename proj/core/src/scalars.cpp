#include "cycleforge/exactalg/quadext.hpp"
#include "cycleforge/exactalg/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace cycleforge {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!digits(n, true) || !digits(d, false)) throw bad();
    if (n[0] == '+') n = n.substr(1);
    mpz_class zn(n), zd(d);
    if (zd == 0) throw std::domain_error("zero denominator in '" + s + "'");
    return Rational(zn, zd);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational Rational::from_double(double x) {
    mpq_class q(x);
    return Rational(q);
}

long squarefree_part(long n, long* square_root_of_rest) {
    if (n <= 0) throw std::domain_error("radicand must be positive");
    long f = 1, r = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) r *= p;
    }
    r *= m;
    if (square_root_of_rest) *square_root_of_rest = f;
    return r;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    long f = 1;
    d_ = squarefree_part(d, &f);
    b_ *= Rational(f);
    if (d_ == 1) {
        a_ += b_;
        b_ = Rational(0);
        d_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Rational& q) {
    if (q.sign() < 0) throw std::domain_error("square root of a negative number");
    if (q.is_zero()) return QuadExt();
    // sqrt(n/m) = sqrt(n*m)/m
    mpz_class nm = q.num() * q.den();
    if (!nm.fits_slong_p()) throw std::domain_error("radicand too large");
    long f = 1;
    long d = squarefree_part(nm.get_si(), &f);
    Rational coef(mpz_class(f), q.den());
    if (d == 1) return QuadExt(coef);
    return QuadExt(Rational(0), coef, d);
}

long QuadExt::join(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw RadicandMismatch("mixing sqrt(" + std::to_string(d1) + ") and sqrt(" +
                           std::to_string(d2) + ")");
}

void QuadExt::fix() {
    if (b_.is_zero()) d_ = 0;
}

int QuadExt::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = a_ * a_, rhs = Rational(d_) * b_ * b_;
    return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    fix();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    fix();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = join(d_, o.d_);
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
    fix();
    return *this;
}

QuadExt QuadExt::conj() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = norm();
    QuadExt c = conj();
    c.a_ /= n;
    c.b_ /= n;
    return c;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.b_.is_zero()) {
        if (o.a_.is_zero()) throw std::domain_error("division by zero");
        join(d_, o.d_);
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

QuadExt QuadExt::pow(unsigned e) const {
    QuadExt r(1), base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string bs;
    if (b_.is_one())
        bs = root;
    else if ((-b_).is_one())
        bs = "-" + root;
    else
        bs = b_.to_string() + "*" + root;
    if (a_.is_zero()) return bs;
    if (bs[0] == '-') return a_.to_string() + bs;
    return a_.to_string() + "+" + bs;
}

} // namespace cycleforge
