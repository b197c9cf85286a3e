#include "canal/ratfunc.hpp"

#include <algorithm>

#include "canal/errors.hpp"

namespace canal {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly::constant(Rat(1));
        return;
    }
    UniPoly g = gcd(num, den);
    num = num.div_exact(g);
    den = den.div_exact(g);
    Rat lead = den.lead();
    num_ = num * Rat(1 / lead);
    den_ = den * Rat(1 / lead);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw PoleAtInput("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

double RatFunc::eval_d(double x) const { return num_.eval_d(x) / den_.eval_d(x); }

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::derivative(int k) const {
    RatFunc r = *this;
    for (int i = 0; i < k; ++i) r = r.derivative();
    return r;
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    const UniPoly& p = inner.num();
    const UniPoly& q = inner.den();
    int d = std::max(num_.degree(), den_.degree());
    if (d < 0) return RatFunc(Rat(0));
    // Homogenized substitution: sum a_i p^i q^(d-i), sharing the common q^d.
    auto lift = [&](const UniPoly& poly) {
        std::vector<UniPoly> ppow(static_cast<std::size_t>(d) + 1), qpow(static_cast<std::size_t>(d) + 1);
        ppow[0] = UniPoly::constant(Rat(1));
        qpow[0] = UniPoly::constant(Rat(1));
        for (int i = 1; i <= d; ++i) {
            ppow[i] = ppow[i - 1] * p;
            qpow[i] = qpow[i - 1] * q;
        }
        UniPoly acc;
        for (int i = 0; i <= poly.degree(); ++i) {
            if (poly.coeff(i) == 0) continue;
            acc += ppow[i] * qpow[d - i] * poly.coeff(i);
        }
        return acc;
    };
    return RatFunc(lift(num_), lift(den_));
}

Rat RatFunc::value_at_infinity() const {
    if (is_zero()) return Rat(0);
    if (num_.degree() > den_.degree())
        throw PoleAtInput("rational function unbounded at infinity");
    if (num_.degree() < den_.degree()) return Rat(0);
    return num_.lead() / den_.lead();
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace canal
