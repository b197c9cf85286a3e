#include <doctest.h>

#include <cmath>
#include <random>

#include "canal/curves.hpp"
#include "canal/dupin.hpp"
#include "canal/errors.hpp"
#include "test_data.hpp"

using namespace canal;
using namespace canal::testdata;

namespace {

std::mt19937_64 rng(0x5eed0003);

Moebius random_moebius() {
    std::uniform_int_distribution<long> d(-3, 3);
    for (;;) {
        Rat a(d(rng)), b(d(rng)), c(d(rng)), e(d(rng));
        if (a * e - b * c != 0) return Moebius(a, b, c, e);
    }
}

SpaceCurve twisted_cubic() {
    return SpaceCurve::from_polynomials(UniPoly::monomial(1), UniPoly::monomial(2),
                                        UniPoly::monomial(3));
}

double length(const DVec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

} // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("componentwise derivatives") {
    // cylinder axis from the blending example
    SpaceCurve line(RatFunc(rat(0)), RatFunc(rat(0)), RatFunc(UniPoly({rat(1), rat(-2)})));
    SpaceCurve d = line.derivative();
    CHECK(d.x.is_zero());
    CHECK(d.y.is_zero());
    CHECK(d.z == RatFunc(rat(-2)));

    SpaceCurve c = twisted_cubic();
    CHECK(c.derivative(0) == c);
    SpaceCurve d2 = c.derivative(2);
    CHECK(d2.x.is_zero());
    CHECK(d2.y == RatFunc(rat(2)));
    CHECK(d2.z == RatFunc(UniPoly({rat(0), rat(6)})));
}

TEST_CASE("curvature and torsion of canonical curves") {
    // circle of radius 2: kappa^2 = 1/4, tau = 0
    CanalSurface circle = canonical_cyclide_pair(CyclideType::I, 1, {rat(2), rat(0), rat(1), rat(0), rat(0)});
    CHECK(kappa_sq(circle.spine) == RatFunc(rat(1, 4)));
    CHECK(torsion(circle.spine).is_zero());

    // planar curve has zero torsion
    SpaceCurve planar(RatFunc(UniPoly::monomial(1)), RatFunc(UniPoly::monomial(2)), RatFunc(rat(3)));
    CHECK(torsion(planar).is_zero());

    // twisted cubic: closed forms
    SpaceCurve c = twisted_cubic();
    UniPoly q({rat(1), rat(0), rat(4), rat(0), rat(9)});   // 9t^4 + 4t^2 + 1
    UniPoly p({rat(1), rat(0), rat(9), rat(0), rat(9)});   // 9t^4 + 9t^2 + 1
    CHECK(kappa_sq(c) == RatFunc(p * rat(4), q * q * q));
    CHECK(torsion(c) == RatFunc(UniPoly::constant(rat(3)), p));

    CHECK_THROWS_AS(kappa_sq(SpaceCurve(RatFunc(UniPoly::monomial(1)), RatFunc(rat(0)),
                                        RatFunc(rat(0)))),
                    LinearSpine);
}

TEST_CASE("curvature and torsion against finite differences") {
    SpaceCurve c = twisted_cubic();
    RatFunc k2 = kappa_sq(c), tau = torsion(c);
    for (double t : {0.3, 0.7, -0.4, 1.2}) {
        // independent numeric route: finite-difference derivatives
        const double h = 1e-5;
        auto at = [&](double x) { return c.eval_d(x); };
        DVec3 p0 = at(t - h), p1 = at(t), p2 = at(t + h);
        DVec3 d1{(at(t + h).x - at(t - h).x) / (2 * h), (at(t + h).y - at(t - h).y) / (2 * h),
                 (at(t + h).z - at(t - h).z) / (2 * h)};
        DVec3 d2{(p2.x - 2 * p1.x + p0.x) / (h * h), (p2.y - 2 * p1.y + p0.y) / (h * h),
                 (p2.z - 2 * p1.z + p0.z) / (h * h)};
        DVec3 cr = cross(d1, d2);
        double k2_num = (length(cr) * length(cr)) / std::pow(length(d1), 6.0);
        CHECK(k2.eval_d(t) == doctest::Approx(k2_num).epsilon(1e-4));
    }
    // torsion of the twisted cubic at t=0: det(c',c'',c''') / ||c' x c''||^2 = 12/4
    CHECK(tau.eval_d(0.0) == doctest::Approx(3.0));
}

TEST_CASE("isometries act exactly on curves") {
    CanalSurface cr = crunode_canal();
    CHECK(apply_isometry(Isometry::identity(), cr.spine) == cr.spine);
    // diag(-1,1,-1) sends the crunode curve to its t -> -t reparametrization
    CHECK(apply_isometry(half_turn_y(), cr.spine) == cr.spine.compose(Moebius::negation()));

    // the map (x,y,z) -> (-x,z,y) carries the first canonical parabola pair
    // onto the second
    CyclideParams p{rat(0), rat(0), rat(0), rat(0), rat(1)};
    SpaceCurve c1 = canonical_cyclide_pair(CyclideType::III, 1, p).spine;
    SpaceCurve c2 = canonical_cyclide_pair(CyclideType::III, 2, p).spine;
    RMat3 q;
    q.m[0] = {rat(-1), rat(0), rat(0)};
    q.m[1] = {rat(0), rat(0), rat(1)};
    q.m[2] = {rat(0), rat(1), rat(0)};
    Isometry f(q, RVec3(rat(0), rat(0), rat(0)));
    CHECK(apply_isometry(f, c1) == c2);
}

TEST_CASE("speed is preserved by isometries") {
    CanalSurface cr = crunode_canal();
    for (int i = 0; i < 5; ++i) {
        Isometry g = rational_isometry(1, i, 2, 1 - i, i % 2 == 0, RVec3(rat(i), rat(1), rat(-2)));
        CHECK(speed_sq(apply_isometry(g, cr.spine)) == speed_sq(cr.spine));
    }
}

TEST_CASE("invariants are reparametrization covariant") {
    SpaceCurve c = twisted_cubic();
    RatFunc k2 = kappa_sq(c), tau = torsion(c);
    for (int i = 0; i < 20; ++i) {
        Moebius phi = random_moebius();
        SpaceCurve cphi = c.compose(phi);
        RatFunc m = phi.as_ratfunc();
        CHECK(kappa_sq(cphi) == k2.compose(m));
        CHECK(torsion(cphi) == tau.compose(m));
    }
}

TEST_CASE("isometries preserve kappa^2 and flip tau by the determinant sign") {
    CanalSurface cr = crunode_canal();
    RatFunc k2 = kappa_sq(cr.spine), tau = torsion(cr.spine);
    Isometry rot = rational_isometry(2, 1, 1, 0, false, RVec3(rat(1), rat(0), rat(3)));
    Isometry mir = rational_isometry(2, 1, 1, 0, true, RVec3(rat(0), rat(0), rat(0)));
    CHECK(kappa_sq(apply_isometry(rot, cr.spine)) == k2);
    CHECK(torsion(apply_isometry(rot, cr.spine)) == tau);
    CHECK(kappa_sq(apply_isometry(mir, cr.spine)) == k2);
    CHECK(torsion(apply_isometry(mir, cr.spine)) == -tau);
}

TEST_CASE("Frenet frames transport through isometries") {
    CanalSurface cr = crunode_canal();
    Isometry g = rational_isometry(1, 2, 2, 0, false, RVec3(rat(1), rat(-1), rat(2)));
    Isometry m = rational_isometry(3, 1, 0, 1, true, RVec3(rat(0), rat(2), rat(0)));
    for (const Isometry& f : {g, m}) {
        SpaceCurve moved = apply_isometry(f, cr.spine);
        std::uniform_real_distribution<double> td(-1.2, 1.2);
        int checked = 0;
        for (int i = 0; i < 40 && checked < 10; ++i) {
            double t = td(rng);
            FrenetFrame a, b;
            try {
                a = frenet_frame_d(cr.spine, t);
                b = frenet_frame_d(moved, t);
            } catch (const FrameDegenerate&) {
                continue;
            }
            ++checked;
            double dQ[3][3];
            for (int r = 0; r < 3; ++r)
                for (int c2 = 0; c2 < 3; ++c2) dQ[r][c2] = rat_to_double(f.Q.m[r][c2]);
            auto apply = [&](const DVec3& v) {
                return DVec3{dQ[0][0] * v.x + dQ[0][1] * v.y + dQ[0][2] * v.z,
                             dQ[1][0] * v.x + dQ[1][1] * v.y + dQ[1][2] * v.z,
                             dQ[2][0] * v.x + dQ[2][1] * v.y + dQ[2][2] * v.z};
            };
            DVec3 qt = apply(a.t), qn = apply(a.n), qb = apply(a.b);
            double det = f.det_sign;
            CHECK(length(qt - b.t) < 1e-9);
            CHECK(length(qn - b.n) < 1e-9);
            CHECK(length(DVec3{det * qb.x - b.b.x, det * qb.y - b.b.y, det * qb.z - b.b.z}) < 1e-9);
        }
        CHECK(checked == 10);
    }
}

TEST_CASE("invariant-based Moebius candidates") {
    // circle: constant invariants -> continuous family
    CanalSurface circle = canonical_cyclide_pair(CyclideType::I, 1, {rat(2), rat(0), rat(1), rat(0), rat(0)});
    auto inv = candidate_moebius_from_invariants(circle.spine);
    CHECK(inv.continuous_family);
    CHECK(inv.candidates.empty());

    // reparametrized twisted cubic: the control-polygon half-turn shows up as
    // t -> 1 - t; brute-force confirmation of the invariance first.
    SpaceCurve c = twisted_bezier().to_space_curve();
    RatFunc k2 = kappa_sq(c), tau = torsion(c);
    Moebius flip = Moebius::one_minus_t();
    RatFunc mf = flip.as_ratfunc();
    CHECK(k2.compose(mf) == k2);
    CHECK(tau.compose(mf) == tau);
    auto cand = candidate_moebius_from_invariants(c);
    CHECK(!cand.continuous_family);
    REQUIRE(cand.candidates.size() == 2);
    CHECK(std::find(cand.candidates.begin(), cand.candidates.end(), Moebius::identity()) !=
          cand.candidates.end());
    CHECK(std::find(cand.candidates.begin(), cand.candidates.end(), flip) !=
          cand.candidates.end());

    // crunode curve: candidates include the four confirmed symmetries
    CanalSurface cr = crunode_canal();
    auto cc = candidate_moebius_from_invariants(cr.spine);
    for (const Moebius& phi : {Moebius::identity(), Moebius::negation(), Moebius::reciprocal(),
                               Moebius::negated_reciprocal()})
        CHECK(std::find(cc.candidates.begin(), cc.candidates.end(), phi) != cc.candidates.end());
}

TEST_SUITE_END();
