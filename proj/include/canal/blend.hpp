#ifndef CANAL_BLEND_HPP
#define CANAL_BLEND_HPP

#include <vector>

#include "canal/canal.hpp"

namespace canal {

// Polynomial Bezier curve in R^3 with exact rational control points.
struct BezierCurve3 {
    std::vector<RVec3> control_points;  // b_0 ... b_n, n >= 1

    int degree() const { return static_cast<int>(control_points.size()) - 1; }
    RVec3 eval(const Rat& t) const;
    SpaceCurve to_space_curve() const;  // exact power-basis conversion
    BezierCurve3 reversed() const;
};

// Scalar polynomial in Bernstein form.
struct BezierScalar {
    std::vector<Rat> coeffs;  // a_0 ... a_n

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rat eval(const Rat& t) const;
    UniPoly to_unipoly() const;
};

// B_{i,n}(t) = C(n,i) t^i (1-t)^(n-i), exact.
Rat bernstein_eval(int n, int i, const Rat& t);
UniPoly bernstein_poly(int n, int i);
Rat binomial(int n, int k);

// k-th forward difference of a coefficient sequence.
std::vector<Rat> forward_difference(const std::vector<Rat>& seq, int k);
std::vector<RVec3> forward_difference(const std::vector<RVec3>& seq, int k);

// Completes free coefficients to the full sequence with a_i = (-1)^n a_{n-i}
// (symmetric for even n, antisymmetric for odd n), so that the resulting
// polynomial satisfies r(1-t) = (-1)^n r(t) and hence r^2(t) = r^2(1-t).
BezierScalar symmetric_radius_coeffs(int n, const std::vector<Rat>& free);

// Degree 2N+1 Bezier spine with C^N contact to c1 at t1 (left end) and to c2
// at t2 (right end).
BezierCurve3 hermite_spine(const SpaceCurve& c1, const Rat& t1, const SpaceCurve& c2,
                           const Rat& t2, int N);

struct HermiteRadius {
    BezierScalar coeffs;
    int sign = +1;  // chosen sign in the symmetric compatibility condition
};

// Bernstein radius with C^N endpoint contact.  With enforce_symmetry the
// coefficients additionally satisfy a_i = (-1)^n a_{n-i}, which reduces the
// degree to 2N when the data is compatible with the '+' sign (and keeps
// 2N+1 for the '-' sign).
HermiteRadius hermite_radius(const RatFunc& r1, const Rat& t1, const RatFunc& r2, const Rat& t2,
                             int N, bool enforce_symmetry);

struct BlendResult {
    CanalSurface surface;       // radius orientation normalized (see below)
    BezierCurve3 spine_bezier;
    BezierScalar radius_bezier;  // as solved, before orientation normalization
    int symmetry_case = 0;       // 1: f fixes the control polygon; 2: f mirrors it
    int sign = +1;               // radius compatibility sign (case 2)
    bool orientation_flipped = false;
};

// G^N blend between the characteristic circles S1(t1) and S2(t2), invariant
// under the isometry f.  The spine control polygon is classified against f:
// pointwise-fixed polygons (f restricted to the spine plane is the identity)
// leave the radius unconstrained; mirrored polygons force the symmetric
// radius pattern.  The packaged surface's radius sign is normalized to be
// nonnegative at the patch midpoint (the canal surface itself only depends
// on r^2, so this is pure orientation bookkeeping).
BlendResult symmetric_blend(const CanalSurface& S1, const Rat& t1, const CanalSurface& S2,
                            const Rat& t2, const Isometry& f, int N);

// Plain Hermite blend without any symmetry requirement.
BlendResult hermite_blend(const CanalSurface& S1, const Rat& t1, const CanalSurface& S2,
                          const Rat& t2, int N);

} // namespace canal

#endif
