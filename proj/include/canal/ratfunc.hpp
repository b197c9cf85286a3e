#ifndef CANAL_RATFUNC_HPP
#define CANAL_RATFUNC_HPP

#include <string>

#include "canal/unipoly.hpp"

namespace canal {

// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::constant(Rat(1))) {}
    RatFunc(UniPoly num, UniPoly den);  // normalizes
    explicit RatFunc(const UniPoly& p) : RatFunc(p, UniPoly::constant(Rat(1))) {}
    explicit RatFunc(const Rat& a) : RatFunc(UniPoly::constant(a)) {}

    static RatFunc t() { return RatFunc(UniPoly::t()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Rat& a) const { return RatFunc(num_ * a, den_); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool defined_at(const Rat& x) const { return den_.eval(x) != 0; }
    Rat eval(const Rat& x) const;  // PoleAtInput at poles
    double eval_d(double x) const;

    RatFunc derivative() const;
    RatFunc derivative(int k) const;

    // Substitution t -> inner(t), exact with reduction.
    RatFunc compose(const RatFunc& inner) const;

    // Value at t = infinity: num.lead/den.lead if degrees match, 0 if
    // deg num < deg den; throws PoleAtInput when deg num > deg den.
    Rat value_at_infinity() const;

    RatFunc squared() const { return *this * *this; }

    std::string to_string(const std::string& var = "t") const;

private:
    UniPoly num_, den_;
};

inline RatFunc operator*(const Rat& a, const RatFunc& f) { return f * a; }

} // namespace canal

#endif
