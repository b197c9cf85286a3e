#ifndef CANAL_TEST_DATA_HPP
#define CANAL_TEST_DATA_HPP

#include "canal/blend.hpp"
#include "canal/canal.hpp"
#include "canal/dupin.hpp"

namespace canal::testdata {

// Crunode curve (t, t^2, t^3) / (t^4 + 1) with radius t^2 / (t^4 + 1).
inline CanalSurface crunode_canal(const UniPoly& radius_num = UniPoly::monomial(2)) {
    UniPoly den({rat(1), rat(0), rat(0), rat(0), rat(1)});
    SpaceCurve spine(RatFunc(UniPoly::monomial(1), den), RatFunc(UniPoly::monomial(2), den),
                     RatFunc(UniPoly::monomial(3), den));
    return {spine, RatFunc(radius_num, den)};
}

// Cubic Bezier reparametrization of the twisted cubic: c((s+1)/2) = (s, s^2, s^3).
inline BezierCurve3 twisted_bezier() {
    return BezierCurve3{{RVec3(rat(-1), rat(1), rat(-1)), RVec3(rat(-1, 3), rat(-1, 3), rat(1)),
                         RVec3(rat(1, 3), rat(-1, 3), rat(-1)), RVec3(rat(1), rat(1), rat(1))}};
}

// The symmetric canal surface on the twisted-cubic spine with r = t - 1/2.
inline CanalSurface twisted_canal() {
    return {twisted_bezier().to_space_curve(), RatFunc(UniPoly({rat(-1, 2), rat(1)}))};
}

inline Isometry half_turn_y() {
    return Isometry(RMat3::diag(rat(-1), rat(1), rat(-1)), RVec3(rat(0), rat(0), rat(0)));
}

inline Isometry reflection_x() {
    return Isometry(RMat3::diag(rat(-1), rat(1), rat(1)), RVec3(rat(0), rat(0), rat(0)));
}

// Reflections in the planes x - z = 0 and x + z = 0.
inline Isometry reflection_xz_swap(int sign) {
    RMat3 q;
    q.m[0] = {rat(0), rat(0), rat(sign)};
    q.m[1] = {rat(0), rat(1), rat(0)};
    q.m[2] = {rat(sign), rat(0), rat(0)};
    return Isometry(q, RVec3(rat(0), rat(0), rat(0)));
}

// Rational rotation from an integer quaternion, optionally with a mirror and
// translation; exact orthogonal by construction.
inline Isometry rational_isometry(long q0, long q1, long q2, long q3, bool mirror,
                                  const RVec3& shift) {
    Rat n = rat(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    RMat3 m;
    m.m[0] = {(rat(q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3)) / n, rat(2 * (q1 * q2 - q0 * q3)) / n,
              rat(2 * (q1 * q3 + q0 * q2)) / n};
    m.m[1] = {rat(2 * (q1 * q2 + q0 * q3)) / n, rat(q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3) / n,
              rat(2 * (q2 * q3 - q0 * q1)) / n};
    m.m[2] = {rat(2 * (q1 * q3 - q0 * q2)) / n, rat(2 * (q2 * q3 + q0 * q1)) / n,
              rat(q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3) / n};
    if (mirror) {
        for (int i = 0; i < 3; ++i) m.m[i][2] = -m.m[i][2];
    }
    return Isometry(m, shift);
}

inline CanalSurface transformed(const Isometry& g, const CanalSurface& S) {
    return {apply_isometry(g, S.spine), S.radius};
}

} // namespace canal::testdata

#endif
