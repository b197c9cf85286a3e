#ifndef CANAL_DUPIN_HPP
#define CANAL_DUPIN_HPP

#include <array>
#include <optional>
#include <vector>

#include "canal/canal.hpp"

namespace canal {

enum class ConicKind { Circle, Ellipse, Hyperbola, Parabola, Line };

// Exact classification of a rational conic (or line) parametrization.  All
// metric data (centers, vertices, foci) is exact; inputs whose metric frame
// is not rationally representable are rejected with
// NotRationallyRepresentable.
struct ConicInfo {
    ConicKind kind;
    Plane plane;              // for a line: some plane containing it
    RVec3 center_or_vertex;   // center, or parabola vertex, or point on line
    std::vector<RVec3> foci;  // ellipse/hyperbola: 2; parabola: 1; else none
    std::vector<RVec3> axis_dirs;   // unnormalized rational directions
    std::vector<Rat> semi_axes_sq;  // {a^2, b^2} / {r^2}; empty for parabola/line

    // Implicit conic matrix [[A,B/2,D/2],[B/2,C,E/2],[D/2,E/2,F]] in the
    // scaled in-plane coordinates u = <p - origin, e1>, v = <p - origin, e2>.
    std::array<std::array<Rat, 3>, 3> conic_matrix{};
    RVec3 frame_origin, frame_e1, frame_e2;

    // Exact membership test via the implicit conic.
    bool on_conic(const RVec3& p) const;
};

ConicInfo classify_conic(const SpaceCurve& c);

enum class CyclideType { I, II, III };

struct CyclideParams {
    Rat a, b, c, f, g;  // unused entries zero
};

// Canonical spine curve and radius function pairs; which is 1 or 2.
CanalSurface canonical_cyclide_pair(CyclideType type, int which, const CyclideParams& p);

// Exact evaluation of the canonical implicit form F^I, F^II or F^III.
Rat implicit_eval(CyclideType type, const CyclideParams& p, const RVec3& point);

// Canonical frame of a cyclide given by two (spine, radius) pairs in general
// position: type, parameters, center O, the symmetry planes, and the exact
// pose isometry mapping the input data to canonical position.
struct DupinFrame {
    CyclideType type;
    CyclideParams params;
    RVec3 O;
    std::vector<Plane> planes;  // Pi0, Pi1, Pi2 (+ Pi3, Pi4 for Type III)
    Isometry pose;              // world -> canonical

    // Parametrization alignment: pose o c_i = c_canonical(role_i) o mu_i and
    // r_i = radius_sign_i * (r_canonical(role_i) o mu_i); index per input pair.
    std::array<Moebius, 2> mu;
    std::array<int, 2> canonical_role;  // 1 or 2
    std::array<int, 2> radius_sign;     // +1 / -1
};

struct DupinCyclide {
    CanalSurface pair1, pair2;
    ConicInfo conic1, conic2;
    DupinFrame frame;
};

DupinFrame dupin_frame(const CanalSurface& pair1, const CanalSurface& pair2);
DupinCyclide classify_dupin(const CanalSurface& pair1, const CanalSurface& pair2);

// Global extrema of a rational function over R u {inf}.
struct ExtScalar {
    enum Kind { Finite, NegInf, PosInf } kind = Finite;
    bool exact = true;  // meaningful for Finite
    Rat value;          // when exact
    double approx = 0;  // always set for Finite

    static ExtScalar finite(const Rat& v) { return {Finite, true, v, rat_to_double(v)}; }
};
struct Extrema {
    ExtScalar min, max;
};
Extrema ratfunc_extrema(const RatFunc& r);

// Super-symmetry test: Type II via the extrema of the ellipse radius
// function; Type III via the exact identity r1 + r2 = 0 after alignment.
bool is_super_symmetric(const DupinCyclide& d);

// Full symmetry set per the canonical classification, conjugated back into
// the input frame.  Type I yields the continuous rotation family.
SymmetryReport dupin_symmetries(const DupinCyclide& d);

// A member of the Type I rotation family in the input frame: rotation about
// the axis by the angle with the given exact cosine/sine, composed with the
// optional reflections (eps1: circle-plane mirror, eps2: axial mirror).
Isometry torus_family_member(const DupinFrame& frame, const Rat& cos_theta, const Rat& sin_theta,
                             int eps1, int eps2);

} // namespace canal

#endif
