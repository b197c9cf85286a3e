#include "canal/mp.hpp"

#include <cstdlib>
#include <vector>

namespace canal {

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Interval::Interval(const Rat& q) {
    mpfr_set_q(lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::operator+(const Interval& o) const {
    Interval r;
    mpfr_add(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r;
    mpfr_sub(r.lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    BigFloat cand[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    Interval r;
    // Recompute the extremal products with directed rounding.
    int imin = 0, imax = 0;
    for (int i = 1; i < 4; ++i) {
        if (cand[i] < cand[imin]) imin = i;
        if (cand[i] > cand[imax]) imax = i;
    }
    const BigFloat* a[4] = {&lo_, &lo_, &hi_, &hi_};
    const BigFloat* b[4] = {&o.lo_, &o.hi_, &o.lo_, &o.hi_};
    mpfr_mul(r.lo_.raw(), a[imin]->raw(), b[imin]->raw(), MPFR_RNDD);
    mpfr_mul(r.hi_.raw(), a[imax]->raw(), b[imax]->raw(), MPFR_RNDU);
    return r;
}

BigFloat Interval::mag() const {
    BigFloat a = lo_.abs(), b = hi_.abs();
    return a > b ? a : b;
}

BigFloat Interval::width() const {
    BigFloat r;
    mpfr_sub(r.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
}

Rat rational_reconstruct(const BigFloat& x, const mpz_class& max_den) {
    // Continued-fraction expansion of x, truncated when the denominator
    // exceeds the bound.
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.raw());
    q.canonicalize();
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpq_class rest = q;
    for (int iter = 0; iter < 512; ++iter) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class frac = rest - mpq_class(a);
        if (frac == 0) break;
        rest = 1 / frac;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    r.canonicalize();
    return r;
}

} // namespace canal
