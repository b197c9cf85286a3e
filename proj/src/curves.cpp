#include "canal/curves.hpp"

#include <algorithm>
#include <cmath>

#include "canal/errors.hpp"

namespace canal {

namespace {

using FVec3 = Vec3<RatFunc>;

FVec3 components(const SpaceCurve& c) { return {c.x, c.y, c.z}; }

FVec3 diff(const FVec3& v) { return {v.x.derivative(), v.y.derivative(), v.z.derivative()}; }

RatFunc det3(const FVec3& a, const FVec3& b, const FVec3& c) { return dot(a, cross(b, c)); }

} // namespace

bool SpaceCurve::bounded_at_infinity() const {
    return x.num().degree() <= x.den().degree() && y.num().degree() <= y.den().degree() &&
           z.num().degree() <= z.den().degree();
}

bool SpaceCurve::is_linear() const {
    FVec3 d1 = diff(components(*this));
    FVec3 d2 = diff(d1);
    FVec3 cr = cross(d1, d2);
    return cr.x.is_zero() && cr.y.is_zero() && cr.z.is_zero();
}

RatFunc speed_sq(const SpaceCurve& c) {
    FVec3 d1 = diff(components(c));
    return dot(d1, d1);
}

RatFunc kappa_sq(const SpaceCurve& c) {
    FVec3 d1 = diff(components(c));
    FVec3 d2 = diff(d1);
    FVec3 cr = cross(d1, d2);
    RatFunc cr2 = dot(cr, cr);
    if (cr2.is_zero()) throw LinearSpine();
    RatFunc sp = dot(d1, d1);
    return cr2 / (sp * sp * sp);
}

RatFunc torsion(const SpaceCurve& c) {
    FVec3 d1 = diff(components(c));
    FVec3 d2 = diff(d1);
    FVec3 d3 = diff(d2);
    FVec3 cr = cross(d1, d2);
    RatFunc cr2 = dot(cr, cr);
    if (cr2.is_zero()) throw LinearSpine();
    return det3(d1, d2, d3) / cr2;
}

SpaceCurve apply_isometry(const Isometry& f, const SpaceCurve& c) {
    auto lin = [&](int i) {
        return c.x * f.Q.m[i][0] + c.y * f.Q.m[i][1] + c.z * f.Q.m[i][2];
    };
    return {lin(0) + RatFunc(f.b.x), lin(1) + RatFunc(f.b.y), lin(2) + RatFunc(f.b.z)};
}

namespace {

// Numerator of g(t) - sign * g(u) as a bivariate polynomial.
BiPoly pointwise_condition(const RatFunc& g, int sign) {
    BiPoly lhs = BiPoly::separable_product(g.num(), g.den());
    BiPoly rhs = BiPoly::separable_product(g.den(), g.num());
    return sign > 0 ? lhs - rhs : lhs + rhs;
}

} // namespace

InvariantCandidates candidate_moebius_from_invariants(const SpaceCurve& c) {
    RatFunc k2 = kappa_sq(c);
    RatFunc tau = torsion(c);
    InvariantCandidates out;
    if (k2.is_constant() && tau.is_constant()) {
        out.continuous_family = true;
        return out;
    }
    if (!k2.is_constant()) {
        BiPoly K = pointwise_condition(k2, +1);
        std::vector<Moebius> from_k = exact_moebius_factors(K);
        if (tau.is_constant() || tau.is_zero()) {
            // Torsion imposes no finite condition; curvature decides.
            out.candidates = std::move(from_k);
        } else {
            BiPoly Tm = pointwise_condition(tau, +1);
            BiPoly Tp = pointwise_condition(tau, -1);
            for (const auto& phi : from_k) {
                BiPoly F = phi.to_bilinear();
                if (bipoly_divides(F, Tm) || bipoly_divides(F, Tp))
                    out.candidates.push_back(phi);
            }
        }
    } else {
        // Constant curvature, nonconstant torsion.
        BiPoly Tm = pointwise_condition(tau, +1);
        BiPoly Tp = pointwise_condition(tau, -1);
        out.candidates = exact_moebius_factors(Tm);
        for (const auto& phi : exact_moebius_factors(Tp))
            if (std::find(out.candidates.begin(), out.candidates.end(), phi) == out.candidates.end())
                out.candidates.push_back(phi);
    }
    std::sort(out.candidates.begin(), out.candidates.end());
    return out;
}

FrenetFrame frenet_frame_d(const SpaceCurve& c, double t) {
    auto evald = [&](const SpaceCurve& k) { return k.eval_d(t); };
    SpaceCurve d1c = c.derivative();
    SpaceCurve d2c = d1c.derivative();
    DVec3 d1 = evald(d1c), d2 = evald(d2c);
    auto norm = [](const DVec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); };
    double n1 = norm(d1);
    if (!(n1 > 0)) throw FrameDegenerate("vanishing tangent");
    DVec3 tg{d1.x / n1, d1.y / n1, d1.z / n1};
    // Principal normal via Gram-Schmidt of c'' against the tangent.
    double proj = d2.x * tg.x + d2.y * tg.y + d2.z * tg.z;
    DVec3 nr{d2.x - proj * tg.x, d2.y - proj * tg.y, d2.z - proj * tg.z};
    double n2 = norm(nr);
    if (!(n2 > 0)) throw FrameDegenerate("vanishing curvature at this parameter");
    nr = {nr.x / n2, nr.y / n2, nr.z / n2};
    DVec3 bn = cross(tg, nr);
    return {tg, nr, bn};
}

} // namespace canal
