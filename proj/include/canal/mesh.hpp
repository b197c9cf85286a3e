#ifndef CANAL_MESH_HPP
#define CANAL_MESH_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "canal/canal.hpp"

namespace canal {

struct TriMesh {
    std::vector<DVec3> vertices;
    std::vector<DVec3> normals;                 // parallel to vertices, unit
    std::vector<std::array<int, 3>> faces;      // vertex indices
};

// Unit surface normal at (t, s): the tangential share r'/||c'|| plus the
// normal-plane circle in the Frenet frame, with s the rational chart of the
// circle (s = infinity handled by the caller via normal_at_infinity).
DVec3 surface_normal(const CanalSurface& S, double t, double s);
DVec3 surface_normal_antipode(const CanalSurface& S, double t);  // s = infinity

// Surface point c(t) + r(t) N(t, s).
DVec3 surface_point(const CanalSurface& S, double t, double s);

// Grid sampling over t in [t_lo, t_hi] and the full circle in s, closing the
// tube through the antipodal point the rational chart misses.  The window
// must stay clear of poles and frame degeneracies (checked exactly).
TriMesh sample_surface(const CanalSurface& S, const Rat& t_lo, const Rat& t_hi, int nt, int ns);

// Wavefront OBJ with v/vn/f records, deterministic order, LF endings.
void export_obj(const TriMesh& m, std::ostream& sink);

} // namespace canal

#endif
