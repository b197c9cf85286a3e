#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "canal/dupin.hpp"
#include "canal/errors.hpp"
#include "canal/mesh.hpp"
#include "test_data.hpp"

using namespace canal;
using namespace canal::testdata;

namespace {

std::mt19937_64 rng(0x5eed0006);

double length(const DVec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

} // namespace

TEST_SUITE_BEGIN("mesh");

TEST_CASE("surface normals are unit and satisfy the envelope condition") {
    CanalSurface cr = crunode_canal();
    SpaceCurve d1 = cr.spine.derivative();
    RatFunc rdot = cr.radius.derivative();
    std::uniform_real_distribution<double> td(0.2, 1.6), sd(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        double t = td(rng), s = sd(rng);
        DVec3 n = surface_normal(cr, t, s);
        CHECK(std::abs(length(n) - 1.0) < 1e-12);
        DVec3 v = d1.eval_d(t);
        double lhs = n.x * v.x + n.y * v.y + n.z * v.z;
        CHECK(std::abs(lhs + rdot.eval_d(t)) < 1e-9);
    }
    // pipe surfaces: normals perpendicular to the spine tangent
    CanalSurface pipe{cr.spine, RatFunc(rat(1, 3))};
    for (int i = 0; i < 20; ++i) {
        double t = td(rng);
        DVec3 n = surface_normal(pipe, t, sd(rng));
        DVec3 v = d1.eval_d(t);
        CHECK(std::abs(n.x * v.x + n.y * v.y + n.z * v.z) < 1e-9);
    }
}

TEST_CASE("normal transport under a known symmetry") {
    CanalSurface cr = crunode_canal();
    Isometry f = half_turn_y();  // symmetry with phi = -t, det +1
    CanalSurface moved{apply_isometry(f, cr.spine), cr.radius};
    std::uniform_real_distribution<double> td(0.2, 1.4), sd(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        double t = td(rng), s = sd(rng);
        DVec3 n = surface_normal(cr, t, s);
        DVec3 m = surface_normal(moved, t, f.det_sign * s);
        DVec3 qn{-n.x, n.y, -n.z};
        CHECK(length(qn - m) < 1e-9);
    }
    // orientation-reversing case: reflection in x - z = 0
    Isometry g = reflection_xz_swap(1);
    CanalSurface refl{apply_isometry(g, cr.spine), cr.radius};
    for (int i = 0; i < 20; ++i) {
        double t = td(rng), s = sd(rng);
        DVec3 n = surface_normal(cr, t, s);
        DVec3 m = surface_normal(refl, t, g.det_sign * s);
        DVec3 qn{n.z, n.y, n.x};
        CHECK(length(qn - m) < 1e-9);
    }
}

TEST_CASE("torus mesh vertices satisfy the implicit quartic") {
    CyclideParams p{rat(2), rat(0), rat(1), rat(0), rat(0)};
    CanalSurface torus = canonical_cyclide_pair(CyclideType::I, 1, p);
    TriMesh m = sample_surface(torus, rat(-4), rat(4), 48, 24);
    REQUIRE(m.vertices.size() == 48u * 24u);
    double a = 2.0, c = 1.0;
    for (const auto& v : m.vertices) {
        double s = v.x * v.x + v.y * v.y + v.z * v.z;
        double t = s + a * a - c * c;
        double F = t * t - 4 * a * a * (v.x * v.x + v.y * v.y);
        double scale = std::max(1.0, t * t);
        CHECK(std::abs(F) / scale < 1e-6);
    }
    for (const auto& n : m.normals) CHECK(std::abs(length(n) - 1.0) < 1e-9);
    for (const auto& f : m.faces)
        for (int k = 0; k < 3; ++k) {
            CHECK(f[k] >= 0);
            CHECK(f[k] < static_cast<int>(m.vertices.size()));
        }
}

TEST_CASE("applying a reported symmetry maps sampled points back onto the surface") {
    CanalSurface cr = crunode_canal();
    // reflection in x - z = 0, associated with phi = 1/t
    std::uniform_real_distribution<double> td(0.3, 1.8), sd(-2.0, 2.0);
    for (int i = 0; i < 40; ++i) {
        double t = td(rng), s = sd(rng);
        DVec3 p = surface_point(cr, t, s);
        DVec3 image{p.z, p.y, p.x};
        // the image lies on the surface: it equals the surface point at
        // parameter 1/t with the circle coordinate possibly reversed
        DVec3 q1 = surface_point(cr, 1.0 / t, s);
        DVec3 q2 = surface_point(cr, 1.0 / t, -s);
        double d = std::min(length(image - q1), length(image - q2));
        CHECK(d < 1e-9);
    }
}

TEST_CASE("pole screening rejects bad windows") {
    CyclideParams p{rat(2), rat(0), rat(1), rat(0), rat(0)};
    CanalSurface line_pair = canonical_cyclide_pair(CyclideType::I, 2, p);
    // the line-pair parametrization has poles at t = +-1
    CHECK_THROWS_AS(sample_surface(line_pair, rat(0), rat(2), 8, 8), KernelError);
}

TEST_CASE("obj export format") {
    TriMesh empty;
    std::ostringstream out;
    export_obj(empty, out);
    CHECK(out.str() == "# canal surface mesh\n");

    TriMesh quad;
    quad.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    quad.normals = {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
    quad.faces = {{0, 1, 2}, {0, 2, 3}};
    std::ostringstream o2;
    export_obj(quad, o2);
    std::string s = o2.str();
    int v_count = 0, vn_count = 0, f_count = 0;
    std::istringstream lines(s);
    std::string line;
    std::vector<std::string> parsed;
    while (std::getline(lines, line)) {
        if (line.rfind("v ", 0) == 0) ++v_count;
        if (line.rfind("vn ", 0) == 0) ++vn_count;
        if (line.rfind("f ", 0) == 0) ++f_count;
        parsed.push_back(line);
    }
    CHECK(v_count == 4);
    CHECK(vn_count == 4);
    CHECK(f_count == 2);
    CHECK(parsed[1] == "v 0 0 0");
    CHECK(parsed.back() == "f 1//1 3//3 4//4");

    // re-import reproduces the vertex count
    TriMesh torus_mesh = sample_surface(canonical_cyclide_pair(CyclideType::I, 1,
                                                               {rat(2), rat(0), rat(1), rat(0), rat(0)}),
                                        rat(-1), rat(1), 8, 8);
    std::ostringstream o3;
    export_obj(torus_mesh, o3);
    std::istringstream in(o3.str());
    int reimported = 0;
    while (std::getline(in, line))
        if (line.rfind("v ", 0) == 0) ++reimported;
    CHECK(reimported == static_cast<int>(torus_mesh.vertices.size()));
}

TEST_SUITE_END();
