#include <doctest.h>

#include <random>

#include "canal/blend.hpp"
#include "canal/errors.hpp"
#include "test_data.hpp"

using namespace canal;
using namespace canal::testdata;

namespace {

std::mt19937_64 rng(0x5eed0005);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return rat(num(rng), den(rng));
}

// The two cylinders with intersecting axes and their blend request.
struct Cylinders {
    CanalSurface s1{SpaceCurve(RatFunc(rat(0)), RatFunc(rat(0)),
                               RatFunc(UniPoly({rat(1), rat(-2)}))),
                    RatFunc(rat(1, 2))};
    CanalSurface s2{SpaceCurve(RatFunc(rat(0)), RatFunc(UniPoly({rat(-1), rat(2)})),
                               RatFunc(rat(0))),
                    RatFunc(rat(1, 4))};
};

} // namespace

TEST_SUITE_BEGIN("blend");

TEST_CASE("bernstein basics") {
    CHECK(bernstein_eval(4, 0, rat(0)) == rat(1));
    CHECK(bernstein_eval(3, 1, rat(1, 2)) == rat(3, 8));
    CHECK_THROWS_AS(bernstein_eval(2, 3, rat(0)), InvalidParams);

    auto d1 = forward_difference({rat(1), rat(4)}, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == rat(3));
    CHECK_THROWS_AS(forward_difference(std::vector<Rat>{rat(1)}, 2), InvalidParams);

    // mirror identity B_{i,n}(1-t) = B_{n-i,n}(t), symbolically for n <= 5
    for (int n = 0; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(bernstein_poly(n, i).compose_affine(rat(-1), rat(1)) == bernstein_poly(n, n - i));

    // partition of unity
    for (int n = 1; n <= 5; ++n) {
        UniPoly sum;
        for (int i = 0; i <= n; ++i) sum += bernstein_poly(n, i);
        CHECK(sum == UniPoly::constant(rat(1)));
    }
}

TEST_CASE("symmetric radius coefficient completion") {
    BezierScalar r1 = symmetric_radius_coeffs(1, {rat(-1, 2)});
    REQUIRE(r1.coeffs.size() == 2);
    CHECK(r1.coeffs[0] == rat(-1, 2));
    CHECK(r1.coeffs[1] == rat(1, 2));
    CHECK(r1.to_unipoly() == UniPoly({rat(-1, 2), rat(1)}));  // t - 1/2

    BezierScalar r2 = symmetric_radius_coeffs(2, {rat(1), rat(5)});
    CHECK(r2.coeffs == std::vector<Rat>{rat(1), rat(5), rat(1)});

    BezierScalar r3 = symmetric_radius_coeffs(3, {rat(0), rat(0)});
    CHECK(r3.to_unipoly().is_zero());

    CHECK_THROWS_AS(symmetric_radius_coeffs(3, {rat(1)}), InconsistentConstraint);
}

TEST_CASE("symmetric coefficient pattern is equivalent to r^2(t) = r^2(1-t)") {
    // 200 random sequences per parity for n <= 6, both directions
    for (int n = 1; n <= 6; ++n) {
        int trials = 200;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<Rat> free_coeffs;
            for (int i = 0; i < (n + 2) / 2; ++i) free_coeffs.push_back(random_rat());
            UniPoly r = symmetric_radius_coeffs(n, free_coeffs).to_unipoly();
            UniPoly mirrored = r.compose_affine(rat(-1), rat(1));
            CHECK(r * r == mirrored * mirrored);
        }
        for (int trial = 0; trial < trials; ++trial) {
            // random coefficients; skip those accidentally matching a pattern
            std::vector<Rat> a;
            for (int i = 0; i <= n; ++i) a.push_back(random_rat());
            bool sym = true, antisym = true;
            for (int i = 0; i <= n; ++i) {
                if (a[i] != a[n - i]) sym = false;
                if (a[i] != -a[n - i]) antisym = false;
            }
            bool pattern = (n % 2 == 0) ? sym : antisym;
            // the polynomial must have full degree n for the claim
            UniPoly r = BezierScalar{a}.to_unipoly();
            if (r.degree() != n) continue;
            UniPoly mirrored = r.compose_affine(rat(-1), rat(1));
            bool identity_holds = (r * r == mirrored * mirrored);
            CHECK(identity_holds == pattern);
        }
    }
}

TEST_CASE("hermite spine reproduces the cylinder blend control points") {
    Cylinders cy;
    BezierCurve3 spine = hermite_spine(cy.s1.spine, rat(0), cy.s2.spine, rat(1), 1);
    REQUIRE(spine.degree() == 3);
    CHECK(spine.control_points[0] == RVec3(rat(0), rat(0), rat(1)));
    CHECK(spine.control_points[1] == RVec3(rat(0), rat(0), rat(1, 3)));
    CHECK(spine.control_points[2] == RVec3(rat(0), rat(1, 3), rat(0)));
    CHECK(spine.control_points[3] == RVec3(rat(0), rat(1), rat(0)));
    // the cubic reduces to the quadratic (0, t^2, (t-1)^2)
    SpaceCurve c = spine.to_space_curve();
    CHECK(c.x.is_zero());
    CHECK(c.y == RatFunc(UniPoly::monomial(2)));
    CHECK(c.z == RatFunc(UniPoly({rat(1), rat(-2), rat(1)})));

    // N = 0: straight segment between the junction points
    BezierCurve3 seg = hermite_spine(cy.s1.spine, rat(0), cy.s2.spine, rat(1), 0);
    REQUIRE(seg.degree() == 1);
    CHECK(seg.control_points[0] == RVec3(rat(0), rat(0), rat(1)));
    CHECK(seg.control_points[1] == RVec3(rat(0), rat(1), rat(0)));

    // swapping the inputs reverses the control polygon; the endpoint
    // derivative conditions are direction-sensitive, so the swap must also
    // reverse each input's parameter
    BezierCurve3 rev0 = hermite_spine(cy.s2.spine, rat(1), cy.s1.spine, rat(0), 0);
    CHECK(rev0.control_points == seg.reversed().control_points);
    Moebius neg = Moebius::negation();
    BezierCurve3 rev = hermite_spine(cy.s2.spine.compose(neg), rat(-1),
                                     cy.s1.spine.compose(neg), rat(0), 1);
    CHECK(rev.control_points == spine.reversed().control_points);
}

TEST_CASE("hermite radius reproduces the cylinder blend radius") {
    Cylinders cy;
    HermiteRadius hr = hermite_radius(cy.s1.radius, rat(0), cy.s2.radius, rat(1), 1, false);
    // r(t) = (2 - 3t^2 + 2t^3) / 4
    CHECK(hr.coeffs.to_unipoly() == UniPoly({rat(1, 2), rat(0), rat(-3, 4), rat(1, 2)}));

    // equal constant radii stay constant
    HermiteRadius hc = hermite_radius(RatFunc(rat(2)), rat(0), RatFunc(rat(2)), rat(1), 1, false);
    CHECK(hc.coeffs.to_unipoly() == UniPoly::constant(rat(2)));
}

TEST_CASE("symmetric hermite radius for the pinch replacement") {
    // replace r(t) = t - 1/2 on [0, 1] against its negated copy
    RatFunc r1(UniPoly({rat(-1, 2), rat(1)}));
    RatFunc r2 = -r1;
    HermiteRadius hr = hermite_radius(r1, rat(0), r2, rat(1), 1, true);
    CHECK(hr.sign == +1);
    REQUIRE(hr.coeffs.degree() == 2);  // quadratic, one below the generic cubic
    // solved coefficients (-1/2, 0, -1/2): r = -(t^2 - t + 1/2)
    CHECK(hr.coeffs.coeffs == std::vector<Rat>{rat(-1, 2), rat(0), rat(-1, 2)});
    UniPoly expected({rat(1, 2), rat(-1), rat(1)});
    CHECK(hr.coeffs.to_unipoly() == -expected);
    // r^2 symmetry holds exactly
    UniPoly p = hr.coeffs.to_unipoly();
    UniPoly m = p.compose_affine(rat(-1), rat(1));
    CHECK(p * p == m * m);

    // incompatible data names the failing order
    CHECK_THROWS_AS(hermite_radius(r1, rat(0), RatFunc(rat(1, 3)), rat(1), 1, true),
                    InconsistentConstraint);
}

TEST_CASE("symmetric blend: planar reflection case leaves the radius free") {
    Cylinders cy;
    // both axes lie in the plane x = 0; the reflection fixes the spine pointwise
    BlendResult res = symmetric_blend(cy.s1, rat(0), cy.s2, rat(1), reflection_x(), 1);
    CHECK(res.symmetry_case == 1);
    CHECK(!res.orientation_flipped);
    CHECK(res.surface.radius == RatFunc(UniPoly({rat(1, 2), rat(0), rat(-3, 4), rat(1, 2)})));
    // the blend spine is invariant under the reflection
    CHECK(apply_isometry(reflection_x(), res.surface.spine) == res.surface.spine);
}

TEST_CASE("symmetric blend: half-turn case forces the symmetric radius") {
    CanalSurface base = twisted_canal();
    CanalSurface flipped{base.spine, -base.radius};
    Isometry f(RMat3::diag(rat(-1), rat(1), rat(-1)), RVec3(rat(0), rat(0), rat(0)));
    BlendResult res = symmetric_blend(base, rat(0), flipped, rat(1), f, 1);
    CHECK(res.symmetry_case == 2);
    CHECK(res.sign == +1);
    // the spine Hermite data reproduces the cubic itself
    CHECK(res.surface.spine == base.spine);
    // control polygon mirrors under f
    int n = res.spine_bezier.degree();
    for (int i = 0; i <= n; ++i)
        CHECK(f.apply(res.spine_bezier.control_points[i]) ==
              res.spine_bezier.control_points[n - i]);
    // f o c = c o (1 - t) exactly
    CHECK(apply_isometry(f, res.surface.spine) ==
          res.surface.spine.compose(Moebius::one_minus_t()));
    // the packaged radius is the positively-oriented t^2 - t + 1/2
    CHECK(res.orientation_flipped);
    CHECK(res.surface.radius == RatFunc(UniPoly({rat(1, 2), rat(-1), rat(1)})));
    // the patch is regular: no pinch inside [0, 1]
    RegularityReport reg = check_regularity(res.surface);
    CHECK(reg.pass);
    CHECK(reg.pinch_points.empty());
    // and the blend's own symmetry group contains the prescribed half-turn
    SymmetryReport rep = sym_canal(res.surface);
    CHECK(rep.contains(f));
}

TEST_CASE("incompatible symmetry data is rejected with the failing order") {
    Cylinders cy;
    Isometry bad_turn(RMat3::diag(rat(-1), rat(-1), rat(1)), RVec3(rat(0), rat(0), rat(0)));
    try {
        symmetric_blend(cy.s1, rat(0), cy.s2, rat(1), bad_turn, 1);
        FAIL("expected SymmetryIncompatible");
    } catch (const SymmetryIncompatible& e) {
        CHECK(e.failing_order == 1);
    }
}

TEST_CASE("degenerate blend requests are rejected") {
    CanalSurface base = twisted_canal();
    CHECK_THROWS_AS(symmetric_blend(base, rat(1, 4), base, rat(1, 4), Isometry::identity(), 1),
                    DegenerateBlend);
}

TEST_CASE("blends meet the endpoint jets exactly up to order N") {
    Cylinders cy;
    for (int N : {0, 1, 2, 3}) {
        BlendResult res = hermite_blend(cy.s1, rat(0), cy.s2, rat(1), N);
        SpaceCurve c = res.surface.spine;
        RatFunc r(res.radius_bezier.to_unipoly());
        SpaceCurve c1 = cy.s1.spine, c2 = cy.s2.spine;
        RatFunc r1 = cy.s1.radius, r2 = cy.s2.radius;
        for (int k = 0; k <= N; ++k) {
            CHECK(c.derivative(k).eval(rat(0)) == c1.derivative(k).eval(rat(0)));
            CHECK(c.derivative(k).eval(rat(1)) == c2.derivative(k).eval(rat(1)));
            CHECK(r.derivative(k).eval(rat(0)) == r1.derivative(k).eval(rat(0)));
            CHECK(r.derivative(k).eval(rat(1)) == r2.derivative(k).eval(rat(1)));
        }
    }
}

TEST_SUITE_END();
