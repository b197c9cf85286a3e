#include "canal/mesh.hpp"

#include <cmath>
#include <ostream>

#include "canal/errors.hpp"

namespace canal {

namespace {

DVec3 normal_combination(const CanalSurface& S, double t, double circ_n, double circ_b) {
    FrenetFrame fr = frenet_frame_d(S.spine, t);
    SpaceCurve d1 = S.spine.derivative();
    DVec3 v = d1.eval_d(t);
    double speed = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    double rdot = S.radius.derivative().eval_d(t);
    // <N, c'> + r' = 0 pins the tangential share to -r'/||c'||.
    double tangential = -rdot / speed;
    double radial_sq = 1.0 - tangential * tangential;
    if (radial_sq < 0) {
        if (radial_sq < -1e-12) throw DegenerateCircle("envelope condition fails at sample");
        radial_sq = 0;
    }
    double radial = std::sqrt(radial_sq);
    return {tangential * fr.t.x + radial * (circ_n * fr.n.x + circ_b * fr.b.x),
            tangential * fr.t.y + radial * (circ_n * fr.n.y + circ_b * fr.b.y),
            tangential * fr.t.z + radial * (circ_n * fr.n.z + circ_b * fr.b.z)};
}

} // namespace

DVec3 surface_normal(const CanalSurface& S, double t, double s) {
    double w = 1.0 + s * s;
    return normal_combination(S, t, (1.0 - s * s) / w, 2.0 * s / w);
}

DVec3 surface_normal_antipode(const CanalSurface& S, double t) {
    return normal_combination(S, t, -1.0, 0.0);
}

DVec3 surface_point(const CanalSurface& S, double t, double s) {
    DVec3 c = S.spine.eval_d(t);
    DVec3 n = surface_normal(S, t, s);
    double r = S.radius.eval_d(t);
    return {c.x + r * n.x, c.y + r * n.y, c.z + r * n.z};
}

TriMesh sample_surface(const CanalSurface& S, const Rat& t_lo, const Rat& t_hi, int nt, int ns) {
    if (nt < 2 || ns < 2) throw InvalidParams("grid must be at least 2 x 2");
    if (!(t_lo < t_hi)) throw InvalidParams("empty parameter window");

    // Exact pole/degeneracy screening over the window.
    auto screen = [&](const UniPoly& den, const char* what) {
        if (den.degree() > 0 && has_root_in(den, t_lo, t_hi))
            throw PoleInWindow(std::string("window contains a ") + what);
    };
    screen(S.spine.x.den(), "pole of the spine");
    screen(S.spine.y.den(), "pole of the spine");
    screen(S.spine.z.den(), "pole of the spine");
    screen(S.radius.den(), "pole of the radius");
    RatFunc k2_num_check = speed_sq(S.spine);
    screen(k2_num_check.num(), "vanishing spine speed");
    // Frame degeneracy: ||c' x c''||^2 must stay positive.
    {
        SpaceCurve d1 = S.spine.derivative(), d2 = d1.derivative();
        RatFunc cx = d1.y * d2.z - d1.z * d2.y;
        RatFunc cy = d1.z * d2.x - d1.x * d2.z;
        RatFunc cz = d1.x * d2.y - d1.y * d2.x;
        RatFunc cr2 = cx * cx + cy * cy + cz * cz;
        if (cr2.is_zero()) throw LinearSpine();
        screen(cr2.num(), "Frenet frame degeneracy");
    }

    TriMesh mesh;
    const double lo = rat_to_double(t_lo), hi = rat_to_double(t_hi);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < nt; ++i) {
        double t = lo + (hi - lo) * i / (nt - 1);
        for (int j = 0; j < ns; ++j) {
            double theta = 2.0 * pi * j / ns;
            DVec3 n, p;
            DVec3 c = S.spine.eval_d(t);
            double r = S.radius.eval_d(t);
            if (ns % 2 == 0 && j == ns / 2) {
                n = surface_normal_antipode(S, t);
            } else {
                double s = std::tan(theta / 2.0);
                n = surface_normal(S, t, s);
            }
            p = {c.x + r * n.x, c.y + r * n.y, c.z + r * n.z};
            mesh.vertices.push_back(p);
            mesh.normals.push_back(n);
        }
    }
    for (int i = 0; i + 1 < nt; ++i)
        for (int j = 0; j < ns; ++j) {
            int jn = (j + 1) % ns;
            int a = i * ns + j, b = i * ns + jn, c = (i + 1) * ns + j, d = (i + 1) * ns + jn;
            mesh.faces.push_back({a, b, d});
            mesh.faces.push_back({a, d, c});
        }
    return mesh;
}

void export_obj(const TriMesh& m, std::ostream& sink) {
    sink << "# canal surface mesh\n";
    char buf[128];
    for (const auto& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        sink << buf;
    }
    for (const auto& n : m.normals) {
        std::snprintf(buf, sizeof buf, "vn %.17g %.17g %.17g\n", n.x, n.y, n.z);
        sink << buf;
    }
    for (const auto& f : m.faces)
        sink << "f " << f[0] + 1 << "//" << f[0] + 1 << ' ' << f[1] + 1 << "//" << f[1] + 1 << ' '
             << f[2] + 1 << "//" << f[2] + 1 << '\n';
}

} // namespace canal
