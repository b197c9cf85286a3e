#include "canal/canal.hpp"

#include <algorithm>
#include <cmath>

#include "canal/errors.hpp"

namespace canal {

bool Plane::operator==(const Plane& o) const {
    // Projective comparison of (normal, offset).
    RVec3 cr = cross(normal, o.normal);
    if (cr != RVec3(Rat(0), Rat(0), Rat(0))) return false;
    // normals parallel; match scale via a nonzero component
    Rat s, t;
    if (o.normal.x != 0) { s = normal.x; t = o.normal.x; }
    else if (o.normal.y != 0) { s = normal.y; t = o.normal.y; }
    else { s = normal.z; t = o.normal.z; }
    if (t == 0) return false;
    Rat k = s / t;
    if (k == 0) return false;
    return normal == o.normal * k && offset == o.offset * k;
}

double Circle3::radius() const { return std::sqrt(rat_to_double(radius_sq)); }

bool SymmetryReport::contains(const Isometry& f) const {
    for (const auto& e : symmetries)
        if (e.f == f) return true;
    return false;
}

BiPoly radius_condition_poly(const RatFunc& r_i, const RatFunc& r_j) {
    const UniPoly Ai = r_i.num(), Bi = r_i.den();
    const UniPoly Aj = r_j.num(), Bj = r_j.den();
    return BiPoly::separable_product(Ai * Ai, Bj * Bj) -
           BiPoly::separable_product(Bi * Bi, Aj * Aj);
}

namespace {

// Parameter search order 0, 1, -1, 2, -2, ...
Rat probe_parameter(int k) {
    if (k == 0) return Rat(0);
    int m = (k + 1) / 2;
    return (k % 2 == 1) ? Rat(m) : Rat(-m);
}

} // namespace

std::vector<Isometry> isometry_from_moebius(const SpaceCurve& c_src, const SpaceCurve& c_dst,
                                            const Moebius& phi) {
    SpaceCurve target = c_dst.compose(phi);
    SpaceCurve s1 = c_src.derivative(), s2 = s1.derivative();
    SpaceCurve t1 = target.derivative(), t2 = t1.derivative();

    std::optional<Rat> t0;
    for (int k = 0; k < 60; ++k) {
        Rat t = probe_parameter(k);
        if (!c_src.defined_at(t) || !s1.defined_at(t) || !s2.defined_at(t)) continue;
        if (!target.defined_at(t) || !t1.defined_at(t) || !t2.defined_at(t)) continue;
        if (cross(s1.eval(t), s2.eval(t)) == RVec3(Rat(0), Rat(0), Rat(0))) continue;
        t0 = t;
        break;
    }
    if (!t0) throw FrameDegenerate();

    RVec3 v1 = s1.eval(*t0), v2 = s2.eval(*t0), v3 = cross(v1, v2);
    RVec3 w1 = t1.eval(*t0), w2 = t2.eval(*t0), w3 = cross(w1, w2);
    RMat3 V = RMat3::from_columns(v1, v2, v3);
    RMat3 Vinv = V.inverse();

    std::vector<Isometry> out;
    for (int s : {1, -1}) {
        RMat3 W = RMat3::from_columns(w1, w2, w3 * Rat(s));
        RMat3 Q = W * Vinv;
        if (!Q.is_orthogonal() || Q.det() != s) continue;
        RVec3 b = target.eval(*t0) - Q * c_src.eval(*t0);
        Isometry f(Q, b);
        if (verify_conjugation(f, c_src, c_dst, phi)) out.push_back(f);
    }
    return out;
}

bool verify_conjugation(const Isometry& f, const SpaceCurve& c_src, const SpaceCurve& c_dst,
                        const Moebius& phi) {
    return apply_isometry(f, c_src) == c_dst.compose(phi);
}

RegularityReport check_regularity(const CanalSurface& S) {
    RegularityReport rep;
    if (S.radius.is_zero()) throw DegenerateInput("identically zero radius function");
    RatFunc rdot = S.radius.derivative();
    rep.margin = speed_sq(S.spine) - rdot * rdot;
    if (rep.margin.is_zero()) throw DegenerateEnvelope();
    rep.degenerate_params = real_roots(rep.margin.num());
    rep.pinch_points = real_roots(S.radius.num());
    bool positive = false;
    for (int k = 0; k < 40; ++k) {
        Rat t = probe_parameter(k);
        if (!rep.margin.defined_at(t)) continue;
        positive = rep.margin.eval(t) > 0;
        break;
    }
    rep.pass = rep.degenerate_params.empty() && positive;
    return rep;
}

Circle3 characteristic_circle(const CanalSurface& S, const Rat& t) {
    RatFunc rdot = S.radius.derivative();
    RatFunc sp = speed_sq(S.spine);
    if (!S.spine.defined_at(t) || !S.radius.defined_at(t) || !rdot.defined_at(t) ||
        !sp.defined_at(t) || sp.eval(t) == 0)
        throw DegenerateCircle("parameter hits a pole of the surface data");
    Rat speed = sp.eval(t);
    Rat r = S.radius.eval(t), rd = rdot.eval(t);
    Rat margin = speed - rd * rd;
    if (margin < 0) throw DegenerateCircle("envelope condition fails at this parameter");
    RVec3 c = S.spine.eval(t);
    RVec3 cdot = S.spine.derivative().eval(t);
    Circle3 out;
    out.center = c - cdot * (r * rd / speed);
    out.radius_sq = r * r * margin / speed;
    out.plane_normal = cdot;
    return out;
}

std::string classify_group(const std::vector<Isometry>& elements) {
    const std::size_t n = elements.size();
    if (n == 0) return "empty";
    if (n == 1) return "trivial";
    bool abelian = true;
    int max_order = 1;
    for (const auto& a : elements) {
        int o = a.order();
        max_order = std::max(max_order, o);
        for (const auto& b : elements)
            if (!(a.compose(b) == b.compose(a))) abelian = false;
    }
    if (max_order == 2 || n == 2) {
        // Elementary abelian 2-group Z2^k.
        int k = 0;
        std::size_t m = n;
        while (m > 1 && m % 2 == 0) { m /= 2; ++k; }
        if (m == 1) return k == 1 ? "Z2" : "Z2^" + std::to_string(k);
    }
    if (abelian && max_order == static_cast<int>(n)) return "Z" + std::to_string(n);
    if (!abelian && n == 8 && max_order == 4) return "D4";
    if (abelian && n == 8 && max_order == 4) return "Z4xZ2";
    if (!abelian && max_order > 0 && 2 * static_cast<std::size_t>(max_order) == n)
        return "D" + std::to_string(max_order);
    return "order-" + std::to_string(n);
}

namespace {

void check_group_closure(const std::vector<SymmetryEntry>& entries) {
    auto find = [&](const Isometry& f) {
        for (const auto& e : entries)
            if (e.f == f) return true;
        return false;
    };
    for (const auto& a : entries)
        for (const auto& b : entries)
            if (!find(a.f.compose(b.f)))
                throw KernelError("internal: verified symmetry set is not closed under composition");
    for (const auto& a : entries)
        if (!find(a.f.inverse()))
            throw KernelError("internal: verified symmetry set is not closed under inverse");
}

std::string describe_isometry(const Isometry& f) {
    if (f.is_identity()) return "identity";
    bool no_shift = f.is_translation_free();
    int ord = f.order();
    if (f.det_sign == 1) {
        if (ord == 2 && no_shift) return "half-turn";
        if (no_shift) return "rotation";
        return "rigid motion";
    }
    if (ord == 2 && no_shift) {
        // Reflection iff Q has eigenvalue pattern {1,1,-1}: trace = 1.
        Rat tr = f.Q.m[0][0] + f.Q.m[1][1] + f.Q.m[2][2];
        if (tr == 1) return "reflection";
        if (tr == -3) return "central symmetry";
        return "rotatory reflection";
    }
    return "orientation-reversing motion";
}

// Numeric fallback for candidates whose coefficients are irrational: solve Q
// on the frame in double precision and keep it when the conjugation residual
// is tiny at many samples.
std::optional<NumericSymmetryEntry> numeric_symmetry(const CanalSurface& S,
                                                     const MoebiusLikeFactor& fac) {
    double a = fac.numeric[0].to_double(), bb = fac.numeric[1].to_double();
    double c = fac.numeric[2].to_double(), d = fac.numeric[3].to_double();
    auto phi = [&](double t) { return (a * t + bb) / (c * t + d); };
    auto phi1 = [&](double t) {  // derivative of phi
        double den = c * t + d;
        return (a * d - bb * c) / (den * den);
    };
    const SpaceCurve& cs = S.spine;
    SpaceCurve d1 = cs.derivative(), d2 = d1.derivative();
    double t0 = 0.37;
    DVec3 v1 = d1.eval_d(t0), v2 = d2.eval_d(t0);
    double u0 = phi(t0), du = phi1(t0);
    // Chain rule for the target derivatives; phi'' in closed form.
    DVec3 e1 = d1.eval_d(u0), e2 = d2.eval_d(u0);
    double den0 = c * t0 + d;
    double ddu = -2.0 * c * (a * d - bb * c) / (den0 * den0 * den0);
    DVec3 w1{e1.x * du, e1.y * du, e1.z * du};
    DVec3 w2{e2.x * du * du + e1.x * ddu, e2.y * du * du + e1.y * ddu,
             e2.z * du * du + e1.z * ddu};
    DVec3 v3 = cross(v1, v2);
    if (std::abs(v3.x) + std::abs(v3.y) + std::abs(v3.z) < 1e-12) return std::nullopt;
    for (int s : {1, -1}) {
        DVec3 w3 = cross(w1, w2);
        w3 = {w3.x * s, w3.y * s, w3.z * s};
        // Q = W V^-1 via Cramer columns.
        double M[3][3];
        DVec3 wc[3] = {w1, w2, w3}, vc[3] = {v1, v2, v3};
        // Solve Q vc_i = wc_i.
        double V[3][3] = {{vc[0].x, vc[1].x, vc[2].x},
                          {vc[0].y, vc[1].y, vc[2].y},
                          {vc[0].z, vc[1].z, vc[2].z}};
        double W[3][3] = {{wc[0].x, wc[1].x, wc[2].x},
                          {wc[0].y, wc[1].y, wc[2].y},
                          {wc[0].z, wc[1].z, wc[2].z}};
        // invert V
        double inv[3][3];
        double dv = V[0][0] * (V[1][1] * V[2][2] - V[1][2] * V[2][1]) -
                    V[0][1] * (V[1][0] * V[2][2] - V[1][2] * V[2][0]) +
                    V[0][2] * (V[1][0] * V[2][1] - V[1][1] * V[2][0]);
        if (std::abs(dv) < 1e-14) return std::nullopt;
        inv[0][0] = (V[1][1] * V[2][2] - V[1][2] * V[2][1]) / dv;
        inv[0][1] = (V[0][2] * V[2][1] - V[0][1] * V[2][2]) / dv;
        inv[0][2] = (V[0][1] * V[1][2] - V[0][2] * V[1][1]) / dv;
        inv[1][0] = (V[1][2] * V[2][0] - V[1][0] * V[2][2]) / dv;
        inv[1][1] = (V[0][0] * V[2][2] - V[0][2] * V[2][0]) / dv;
        inv[1][2] = (V[0][2] * V[1][0] - V[0][0] * V[1][2]) / dv;
        inv[2][0] = (V[1][0] * V[2][1] - V[1][1] * V[2][0]) / dv;
        inv[2][1] = (V[0][1] * V[2][0] - V[0][0] * V[2][1]) / dv;
        inv[2][2] = (V[0][0] * V[1][1] - V[0][1] * V[1][0]) / dv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                M[i][j] = 0;
                for (int k = 0; k < 3; ++k) M[i][j] += W[i][k] * inv[k][j];
            }
        // orthogonality residual
        double dev = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double dotij = 0;
                for (int k = 0; k < 3; ++k) dotij += M[i][k] * M[j][k];
                dev = std::max(dev, std::abs(dotij - (i == j ? 1.0 : 0.0)));
            }
        if (dev > 1e-9) continue;
        DVec3 p0 = cs.eval_d(t0), q0 = cs.eval_d(u0);
        std::array<double, 3> bvec{q0.x - (M[0][0] * p0.x + M[0][1] * p0.y + M[0][2] * p0.z),
                                   q0.y - (M[1][0] * p0.x + M[1][1] * p0.y + M[1][2] * p0.z),
                                   q0.z - (M[2][0] * p0.x + M[2][1] * p0.y + M[2][2] * p0.z)};
        // conjugation residual at fresh samples
        double worst = 0;
        for (int k = 1; k <= 10; ++k) {
            double t = 0.1 * k + 0.05;
            DVec3 p = cs.eval_d(t), q = cs.eval_d(phi(t));
            double rx = M[0][0] * p.x + M[0][1] * p.y + M[0][2] * p.z + bvec[0] - q.x;
            double ry = M[1][0] * p.x + M[1][1] * p.y + M[1][2] * p.z + bvec[1] - q.y;
            double rz = M[2][0] * p.x + M[2][1] * p.y + M[2][2] * p.z + bvec[2] - q.z;
            worst = std::max({worst, std::abs(rx), std::abs(ry), std::abs(rz)});
        }
        if (worst > 1e-9) continue;
        NumericSymmetryEntry e;
        e.moebius = fac.numeric;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e.Q[i][j] = M[i][j];
        e.b = bvec;
        e.residual = std::max(worst, fac.residual_bound);
        return e;
    }
    return std::nullopt;
}

} // namespace

SymmetryReport sym_canal(const CanalSurface& S) {
    if (S.spine.is_linear()) throw LinearSpine();
    SymmetryReport rep;

    std::vector<Moebius> cands;
    std::vector<MoebiusLikeFactor> numeric_factors;
    if (S.radius.is_constant()) {
        // Pipe surface: symmetries of the surface are the symmetries of the
        // spine curve, with candidates from curvature/torsion invariance.
        InvariantCandidates inv = candidate_moebius_from_invariants(S.spine);
        if (inv.continuous_family) {
            rep.continuous_family = ContinuousFamily{"constant-invariant-spine",
                                                     RVec3(Rat(0), Rat(0), Rat(0)),
                                                     RVec3(Rat(0), Rat(0), Rat(0)),
                                                     std::nullopt, Isometry::identity()};
            rep.symmetries.push_back({Isometry::identity(), Moebius::identity(),
                                      std::nullopt, false, "identity"});
            rep.group_label = "continuous-family";
            return rep;
        }
        cands = inv.candidates;
    } else {
        BiPoly R = radius_condition_poly(S.radius, S.radius);
        for (auto& fac : moebius_like_factors(R)) {
            if (fac.is_exact())
                cands.push_back(*fac.moebius);
            else
                numeric_factors.push_back(fac);
        }
    }

    for (const Moebius& phi : cands)
        for (const Isometry& f : isometry_from_moebius(S.spine, S.spine, phi)) {
            bool dup = false;
            for (const auto& e : rep.symmetries)
                if (e.f == f) { dup = true; break; }
            if (!dup)
                rep.symmetries.push_back({f, phi, std::nullopt, false, describe_isometry(f)});
        }

    for (const auto& fac : numeric_factors)
        if (auto e = numeric_symmetry(S, fac)) rep.numeric_symmetries.push_back(*e);

    std::sort(rep.symmetries.begin(), rep.symmetries.end(),
              [](const SymmetryEntry& a, const SymmetryEntry& b) { return a.f < b.f; });
    check_group_closure(rep.symmetries);

    std::vector<Isometry> elems;
    for (const auto& e : rep.symmetries) elems.push_back(e.f);
    rep.group_label = classify_group(elems);
    return rep;
}

} // namespace canal
