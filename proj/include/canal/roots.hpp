#ifndef CANAL_ROOTS_HPP
#define CANAL_ROOTS_HPP

#include <vector>

#include "canal/unipoly.hpp"

namespace canal {

// Certified real-root isolation via Sturm sequences with exact rational
// bisection.  A root is reported once per distinct real root, carrying the
// multiplicity it has in the original polynomial.  The interval is closed;
// endpoints are never roots except for the degenerate case lo == hi, which
// pins a rational root exactly.
struct IsolatedRoot {
    Rat lo, hi;
    int multiplicity = 1;
    UniPoly part;  // square-free factor owning this root, used for refinement

    bool is_exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    double approx() const { return rat_to_double(mid()); }

    // Shrinks the interval by sign bisection until width <= max_width.
    void refine(const Rat& max_width);
    void refine_steps(int steps);
};

// All real roots of p, each isolated to width <= max_width (default 2^-53).
// Throws DegenerateInput on the zero polynomial.
std::vector<IsolatedRoot> real_roots(const UniPoly& p, const Rat& max_width = rat_pow2(-53));

// True iff p has a real root in the closed interval [a, b].
bool has_root_in(const UniPoly& p, const Rat& a, const Rat& b);

} // namespace canal

#endif
