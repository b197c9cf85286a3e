#ifndef CANAL_RAT_HPP
#define CANAL_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "canal/errors.hpp"

namespace canal {

// Exact rational scalar.  mpq_class keeps the canonical form we require:
// gcd(|num|, den) = 1 and den > 0, as long as values are built through the
// helpers below (raw mpq_class(int,int) does not canonicalize).
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" in base 10.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int rat_sign(const Rat& q) { return sgn(q); }

// Exact square root: returns the rational r >= 0 with r*r == q, or nullopt
// if q is negative or not a perfect square in Q.
std::optional<Rat> rat_sqrt(const Rat& q);

// 2^e as an exact rational (e may be negative).
Rat rat_pow2(long e);

} // namespace canal

#endif
