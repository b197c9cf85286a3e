#ifndef CANAL_CANAL_HPP
#define CANAL_CANAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "canal/curves.hpp"
#include "canal/roots.hpp"

namespace canal {

// Envelope of the sphere family centered at spine(t) with radius radius(t).
// The symmetry pipeline requires a non-linear spine and a surface that is
// not a Dupin cyclide (two-spine inputs go through the dupin module).
struct CanalSurface {
    SpaceCurve spine;
    RatFunc radius;
};

struct Plane {
    RVec3 normal;  // nonzero, not normalized
    Rat offset;    // plane = { x : <normal, x> = offset }

    bool contains(const RVec3& p) const { return dot(normal, p) == offset; }
    bool operator==(const Plane& o) const;
};

struct Circle3 {
    RVec3 center;
    Rat radius_sq;  // exact; the radius itself is generally irrational
    RVec3 plane_normal;

    double radius() const;
};

struct SymmetryEntry {
    Isometry f;
    Moebius phi;                  // spine reparametrization associated with f
    std::optional<Moebius> phi2;  // second spine's reparametrization (cyclides)
    bool swaps_spines = false;    // cyclide case B
    std::string description;
};

// Symmetry certified only numerically (irrational Moebius factor path).
struct NumericSymmetryEntry {
    std::array<BigFloat, 4> moebius;
    std::array<std::array<double, 3>, 3> Q;
    std::array<double, 3> b;
    double residual = 0.0;
};

// One-parameter family of symmetries (rotations about an axis together with
// the discrete mirror choices), reported symbolically.
struct ContinuousFamily {
    std::string kind;  // "axis-rotations" or "constant-invariant-spine"
    RVec3 axis_point, axis_dir;
    std::optional<Plane> mirror;  // plane of the circle spine, torus case
    Isometry pose;                // maps input data to the canonical frame
};

struct SymmetryReport {
    std::vector<SymmetryEntry> symmetries;  // contains the identity; a group
    std::vector<NumericSymmetryEntry> numeric_symmetries;
    std::optional<ContinuousFamily> continuous_family;
    std::string group_label;

    bool contains(const Isometry& f) const;
};

// A_i^2(t) B_j^2(u) - A_j^2(u) B_i^2(t) for r_i = A_i/B_i, r_j = A_j/B_j.
// Vanishes identically for constant equal radii (pipe surfaces).
BiPoly radius_condition_poly(const RatFunc& r_i, const RatFunc& r_j);

// Reconstructs the isometries f with f o c_src = c_dst o phi by solving for
// Q on the frame {c', c'', c' x c''} at a regular parameter and trying both
// determinant signs.  At most two isometries exist (two only for planar
// curves); each returned isometry is verified exactly.
std::vector<Isometry> isometry_from_moebius(const SpaceCurve& c_src, const SpaceCurve& c_dst,
                                            const Moebius& phi);

// Exact test of f o c_src = c_dst o phi.
bool verify_conjugation(const Isometry& f, const SpaceCurve& c_src, const SpaceCurve& c_dst,
                        const Moebius& phi);

struct RegularityReport {
    bool pass = false;
    RatFunc margin;                            // ||c'||^2 - r'^2
    std::vector<IsolatedRoot> degenerate_params;  // real roots of the margin
    std::vector<IsolatedRoot> pinch_points;       // real roots of the radius
};

// Envelope regularity: margin must be positive for all parameters.  Pinch
// points (r = 0) are reported but do not fail the check.
RegularityReport check_regularity(const CanalSurface& S);

// Contact circle of the sphere at parameter t with the envelope.
Circle3 characteristic_circle(const CanalSurface& S, const Rat& t);

// All Euclidean symmetries of the canal surface (single-spine algorithm):
// Moebius candidates come from the bilinear factors of the radius condition
// (or from curve invariants for pipe surfaces); each candidate is lifted to
// an isometry and kept only if the spine conjugation verifies exactly.
SymmetryReport sym_canal(const CanalSurface& S);

// Group label ("trivial", "Z2", "Z2^2", "Z4", "D4", ...) for a finite set of
// isometries closed under composition.
std::string classify_group(const std::vector<Isometry>& elements);

} // namespace canal

#endif
