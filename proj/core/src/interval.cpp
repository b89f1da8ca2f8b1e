#include "cycleforge/exactalg/interval.hpp"

namespace cycleforge {

RInterval RInterval::pow(unsigned e) const {
    if (e == 0) return RInterval(Rational(1));
    if (e % 2 == 1 || lo.sign() >= 0) {
        Rational a = lo.pow(e), b = hi.pow(e);
        return a < b ? RInterval(a, b) : RInterval(b, a);
    }
    if (hi.sign() <= 0) return RInterval(hi.pow(e), lo.pow(e));
    Rational a = lo.pow(e), b = hi.pow(e);
    return RInterval(Rational(0), a < b ? b : a);
}

RInterval sqrt_enclosure(long d, unsigned bits) {
    mpz_class scale = mpz_class(1) << bits;
    mpz_class n = mpz_class(d) * scale * scale;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    Rational lo(r, scale);
    if (r * r == n) return RInterval(lo);
    return RInterval(lo, Rational(mpz_class(r + 1), scale));
}

RInterval enclose(const Rational& c) { return RInterval(c); }

RInterval enclose(const QuadExt& c) {
    if (c.is_rational()) return RInterval(c.a());
    return RInterval(c.a()) + RInterval(c.b()) * sqrt_enclosure(c.radicand());
}

Rational simplest_between(Rational lo, Rational hi) {
    if (hi < lo) std::swap(lo, hi);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_between(-hi, -lo);
    // continued-fraction descent on 0 < lo <= hi
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    Rational f(fl);
    if (f == lo) return f;
    if (Rational(mpz_class(fl + 1)) <= hi) return Rational(mpz_class(fl + 1));
    // lo and hi share the integer part f
    Rational inner = simplest_between((hi - f).inverse(), (lo - f).inverse());
    return f + inner.inverse();
}

} // namespace cycleforge
