#ifndef CANAL_CURVES_HPP
#define CANAL_CURVES_HPP

#include <vector>

#include "canal/linalg.hpp"
#include "canal/moebius.hpp"
#include "canal/ratfunc.hpp"

namespace canal {

// Rational space curve (x(t), y(t), z(t)).  Properness (injectivity up to
// finitely many parameters) is a caller responsibility; it is assumed, not
// verified.
struct SpaceCurve {
    RatFunc x, y, z;

    SpaceCurve() = default;
    SpaceCurve(RatFunc xx, RatFunc yy, RatFunc zz)
        : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}
    static SpaceCurve from_polynomials(const UniPoly& px, const UniPoly& py, const UniPoly& pz) {
        return SpaceCurve(RatFunc(px), RatFunc(py), RatFunc(pz));
    }

    bool defined_at(const Rat& t) const {
        return x.defined_at(t) && y.defined_at(t) && z.defined_at(t);
    }
    RVec3 eval(const Rat& t) const { return {x.eval(t), y.eval(t), z.eval(t)}; }
    DVec3 eval_d(double t) const { return {x.eval_d(t), y.eval_d(t), z.eval_d(t)}; }

    SpaceCurve derivative(int k = 1) const {
        return {x.derivative(k), y.derivative(k), z.derivative(k)};
    }
    RVec3 derivative_at(const Rat& t, int k) const { return derivative(k).eval(t); }

    SpaceCurve compose(const Moebius& phi) const {
        RatFunc m = phi.as_ratfunc();
        return {x.compose(m), y.compose(m), z.compose(m)};
    }

    // Limit point as t -> infinity; throws PoleAtInput if unbounded.
    RVec3 value_at_infinity() const {
        return {x.value_at_infinity(), y.value_at_infinity(), z.value_at_infinity()};
    }
    bool bounded_at_infinity() const;

    bool is_constant() const { return x.is_constant() && y.is_constant() && z.is_constant(); }
    // True iff the image lies on a straight line (vanishing curvature).
    bool is_linear() const;

    bool operator==(const SpaceCurve& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const SpaceCurve& o) const { return !(*this == o); }
};

// ||c'(t)||^2 as an exact rational function.
RatFunc speed_sq(const SpaceCurve& c);

// Squared curvature ||c' x c''||^2 / ||c'||^6; throws LinearSpine on lines.
RatFunc kappa_sq(const SpaceCurve& c);

// Torsion det(c', c'', c''') / ||c' x c''||^2; throws LinearSpine on lines.
RatFunc torsion(const SpaceCurve& c);

// Componentwise Q c + b, exact.
SpaceCurve apply_isometry(const Isometry& f, const SpaceCurve& c);

// Candidate reparametrizations for curve symmetries, from pointwise
// invariance of curvature and torsion.  When both invariants are constant
// (circles, helices) the symmetries form a continuous family that is
// reported as such instead of being enumerated.
struct InvariantCandidates {
    bool continuous_family = false;
    std::vector<Moebius> candidates;
};
InvariantCandidates candidate_moebius_from_invariants(const SpaceCurve& c);

// Numeric Frenet frame at t (unit tangent, principal normal, binormal).
struct FrenetFrame {
    DVec3 t, n, b;
};
FrenetFrame frenet_frame_d(const SpaceCurve& c, double t);

} // namespace canal

#endif
