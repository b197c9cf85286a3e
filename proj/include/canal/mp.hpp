#ifndef CANAL_MP_HPP
#define CANAL_MP_HPP

#include <mpfr.h>

#include <string>

#include "canal/rat.hpp"

namespace canal {

// Fixed-precision MPFR value with value semantics.  256 bits is the working
// precision of the numeric certification path.
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(x_, kPrec); mpfr_set_zero(x_, 1); }
    explicit BigFloat(double d) : BigFloat() { mpfr_set_d(x_, d, MPFR_RNDN); }
    explicit BigFloat(const Rat& q) : BigFloat() { mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(x_, o.x_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    BigFloat operator+(const BigFloat& o) const { BigFloat r; mpfr_add(r.x_, x_, o.x_, MPFR_RNDN); return r; }
    BigFloat operator-(const BigFloat& o) const { BigFloat r; mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN); return r; }
    BigFloat operator*(const BigFloat& o) const { BigFloat r; mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN); return r; }
    BigFloat operator/(const BigFloat& o) const { BigFloat r; mpfr_div(r.x_, x_, o.x_, MPFR_RNDN); return r; }
    BigFloat operator-() const { BigFloat r; mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }
    BigFloat abs() const { BigFloat r; mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(x_, o.x_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(x_, o.x_) > 0; }
    bool operator==(const BigFloat& o) const { return mpfr_cmp(x_, o.x_) == 0; }

    std::string to_string(int digits = 40) const;

private:
    mpfr_t x_;
};

// Closed interval [lo, hi] with outward-rounded arithmetic, used to certify
// numeric residuals rigorously.
class Interval {
public:
    Interval() = default;
    Interval(const BigFloat& lo, const BigFloat& hi) : lo_(lo), hi_(hi) {}
    explicit Interval(const Rat& q);  // thin (possibly 1-ulp wide) enclosure
    static Interval exact(const BigFloat& v) { return Interval(v, v); }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator-() const { return Interval(-hi_, -lo_); }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    // Upper bound on |x| over the interval.
    BigFloat mag() const;
    BigFloat width() const;

private:
    BigFloat lo_, hi_;
};

// Attempts to recover the nearest rational with denominator <= max_den using
// continued fractions.  The result is a candidate only; callers must verify
// exactly before trusting it.
Rat rational_reconstruct(const BigFloat& x, const mpz_class& max_den);

} // namespace canal

#endif
