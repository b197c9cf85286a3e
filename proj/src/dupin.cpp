#include "canal/dupin.hpp"

#include <algorithm>

#include "canal/errors.hpp"

namespace canal {

namespace {

Rat probe(int k) {
    if (k == 0) return Rat(0);
    int m = (k + 1) / 2;
    return (k % 2 == 1) ? Rat(m) : Rat(-m);
}

std::vector<Rat> sample_params(const SpaceCurve& c, std::size_t count) {
    std::vector<Rat> out;
    for (int k = 0; k < 200 && out.size() < count; ++k) {
        Rat t = probe(k);
        if (c.defined_at(t)) out.push_back(t);
    }
    if (out.size() < count) throw DegenerateInput("curve undefined at too many probe parameters");
    return out;
}

// Rational unit vector along v; requires ||v||^2 to be a perfect square.
RVec3 rational_unit(const RVec3& v) {
    auto n = rat_sqrt(norm_sq(v));
    if (!n || *n == 0) throw NotRationallyRepresentable(
        "direction has irrational length; no exact orthonormal frame exists for this input");
    return v * Rat(1 / *n);
}

// Makes the first nonzero component positive (deterministic orientation).
RVec3 lex_positive(const RVec3& v) {
    Rat lead = v.x != 0 ? v.x : (v.y != 0 ? v.y : v.z);
    return lead < 0 ? -v : v;
}

// Nullspace basis of an m x n rational matrix.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat inv = 1 / m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = Rat(1);
        for (int cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = -m[pivot_of_col[cc]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct UV {
    RatFunc u, v;  // in-plane coordinate functions of the curve
};

} // namespace

bool ConicInfo::on_conic(const RVec3& p) const {
    if (!plane.contains(p)) return false;
    Rat u = dot(p - frame_origin, frame_e1);
    Rat v = dot(p - frame_origin, frame_e2);
    const auto& M = conic_matrix;
    Rat q = M[0][0] * u * u + 2 * M[0][1] * u * v + M[1][1] * v * v + 2 * M[0][2] * u +
            2 * M[1][2] * v + M[2][2];
    return q == 0;
}

ConicInfo classify_conic(const SpaceCurve& c) {
    if (c.is_constant()) throw DegenerateConic("constant curve");
    ConicInfo info;

    if (c.is_linear()) {
        info.kind = ConicKind::Line;
        auto params = sample_params(c, 2);
        RVec3 p0 = c.eval(params[0]);
        RVec3 dir;
        for (int k = 0; k < 60; ++k) {
            Rat t = probe(k);
            if (!c.derivative().defined_at(t)) continue;
            dir = c.derivative().eval(t);
            if (dir != RVec3(Rat(0), Rat(0), Rat(0))) break;
        }
        if (dir == RVec3(Rat(0), Rat(0), Rat(0)))
            throw DegenerateConic("line with vanishing derivative at all probes");
        info.center_or_vertex = p0;
        info.axis_dirs = {dir};
        RVec3 helper = (cross(dir, RVec3(Rat(1), Rat(0), Rat(0))) == RVec3(Rat(0), Rat(0), Rat(0)))
                           ? RVec3(Rat(0), Rat(1), Rat(0))
                           : RVec3(Rat(1), Rat(0), Rat(0));
        RVec3 n = cross(dir, helper);
        info.plane = Plane{n, dot(n, p0)};
        return info;
    }

    // Supporting plane from three non-collinear sample points, verified
    // against the whole parametrization.
    auto params = sample_params(c, 9);
    RVec3 p0 = c.eval(params[0]);
    RVec3 n;
    bool have_normal = false;
    RVec3 e1;
    for (std::size_t i = 1; i < params.size() && !have_normal; ++i)
        for (std::size_t j = i + 1; j < params.size() && !have_normal; ++j) {
            RVec3 v1 = c.eval(params[i]) - p0, v2 = c.eval(params[j]) - p0;
            RVec3 cr = cross(v1, v2);
            if (cr != RVec3(Rat(0), Rat(0), Rat(0))) {
                n = cr;
                e1 = v1;
                have_normal = true;
            }
        }
    if (!have_normal) throw DegenerateConic("all sampled points collinear");
    {
        RatFunc lhs = c.x * n.x + c.y * n.y + c.z * n.z - RatFunc(dot(n, p0));
        if (!lhs.is_zero()) throw NotPlanar();
    }

    // Orthogonal in-plane frame with equal-length axes: e2 = n_hat x e1.
    RVec3 n_hat = rational_unit(lex_positive(n));
    RVec3 e2 = cross(n_hat, e1);
    Rat len_sq = norm_sq(e1);  // == norm_sq(e2)

    info.plane = Plane{n_hat, dot(n_hat, p0)};
    info.frame_origin = p0;
    info.frame_e1 = e1;
    info.frame_e2 = e2;

    UV uv{(c.x - RatFunc(p0.x)) * e1.x + (c.y - RatFunc(p0.y)) * e1.y + (c.z - RatFunc(p0.z)) * e1.z,
          (c.x - RatFunc(p0.x)) * e2.x + (c.y - RatFunc(p0.y)) * e2.y + (c.z - RatFunc(p0.z)) * e2.z};

    // Implicit conic through sampled points: nullspace of the design matrix.
    std::vector<std::vector<Rat>> rows;
    for (const Rat& t : params) {
        Rat u = uv.u.eval(t), v = uv.v.eval(t);
        rows.push_back({u * u, u * v, v * v, u, v, Rat(1)});
    }
    auto basis = nullspace(std::move(rows), 6);
    if (basis.empty()) throw DegenerateConic("sampled points do not lie on a conic");
    if (basis.size() > 1) throw DegenerateConic("conic through samples is not unique (degenerate)");
    const auto& q = basis[0];
    const Rat A = q[0], B = q[1], C = q[2], D = q[3], E = q[4], F = q[5];

    // Verify the implicit equation holds identically along the curve.
    {
        RatFunc qc = RatFunc(A) * uv.u * uv.u + RatFunc(B) * uv.u * uv.v +
                     RatFunc(C) * uv.v * uv.v + RatFunc(D) * uv.u + RatFunc(E) * uv.v + RatFunc(F);
        if (!qc.is_zero())
            throw DegenerateConic("parametrization does not satisfy a quadratic equation");
    }

    info.conic_matrix = {{{A, B / 2, D / 2}, {B / 2, C, E / 2}, {D / 2, E / 2, F}}};

    Rat delta = A * C - B * B / 4;  // quadratic-part determinant
    Rat Delta =  // full 3x3 determinant
        A * (C * F - E * E / 4) - (B / 2) * (B / 2 * F - (E / 2) * (D / 2)) +
        (D / 2) * ((B / 2) * (E / 2) - C * (D / 2));
    if (Delta == 0) throw DegenerateConic("singular conic (product of lines)");

    auto to3d = [&](const Rat& u, const Rat& v) {
        return p0 + e1 * (u / len_sq) + e2 * (v / len_sq);
    };

    if (delta != 0) {
        // Central conic: ellipse/circle (delta > 0) or hyperbola (delta < 0).
        Rat det2 = delta;
        Rat uc = (-(D / 2) * C + (E / 2) * (B / 2)) / det2;
        Rat vc = (-(E / 2) * A + (D / 2) * (B / 2)) / det2;
        info.center_or_vertex = to3d(uc, vc);
        Rat kappa = A * uc * uc + B * uc * vc + C * vc * vc + D * uc + E * vc + F;
        if (kappa == 0) throw DegenerateConic("conic degenerates to a point or line pair");

        if (delta > 0 && A == C && B == 0) {
            info.kind = ConicKind::Circle;
            Rat r_sq = -kappa / (A * len_sq);
            if (r_sq <= 0) throw DegenerateConic("imaginary circle");
            info.semi_axes_sq = {r_sq};
            return info;
        }

        auto disc = rat_sqrt((A - C) * (A - C) + B * B);
        if (!disc)
            throw NotRationallyRepresentable("conic axes are not rational for this input");
        Rat l1 = ((A + C) + *disc) / 2, l2 = ((A + C) - *disc) / 2;
        auto eigvec = [&](const Rat& l) -> std::pair<Rat, Rat> {
            if (B != 0) return {B / 2, l - A};
            return (l == A) ? std::pair<Rat, Rat>{Rat(1), Rat(0)}
                            : std::pair<Rat, Rat>{Rat(0), Rat(1)};
        };
        auto [w1u, w1v] = eigvec(l1);
        auto [w2u, w2v] = eigvec(l2);
        Rat s1 = -kappa / (l1 * len_sq);  // squared semi-axis along eigvec 1
        Rat s2 = -kappa / (l2 * len_sq);

        if (delta > 0) {
            info.kind = ConicKind::Ellipse;
            // Major axis = larger squared semi-axis.
            Rat a_sq = s1, b_sq = s2;
            Rat wu = w1u, wv = w1v;
            if (s2 > s1) { a_sq = s2; b_sq = s1; wu = w2u; wv = w2v; }
            if (a_sq <= 0 || b_sq <= 0) throw DegenerateConic("imaginary ellipse");
            info.semi_axes_sq = {a_sq, b_sq};
            RVec3 w_major = e1 * wu + e2 * wv;
            RVec3 w_minor = cross(n_hat, w_major);
            info.axis_dirs = {w_major, w_minor};
            Rat f_sq = a_sq - b_sq;
            auto beta = rat_sqrt(f_sq * len_sq / (wu * wu + wv * wv));
            if (!beta) throw NotRationallyRepresentable("ellipse foci are irrational");
            info.foci = {to3d(uc + *beta * wu, vc + *beta * wv),
                         to3d(uc - *beta * wu, vc - *beta * wv)};
        } else {
            info.kind = ConicKind::Hyperbola;
            // Transverse axis: direction with positive squared semi-axis.
            Rat a_sq, b_sq, wu, wv;
            if (s1 > 0) { a_sq = s1; b_sq = -s2; wu = w1u; wv = w1v; }
            else        { a_sq = s2; b_sq = -s1; wu = w2u; wv = w2v; }
            if (a_sq <= 0 || b_sq <= 0) throw DegenerateConic("degenerate hyperbola");
            info.semi_axes_sq = {a_sq, b_sq};
            RVec3 w_t = e1 * wu + e2 * wv;
            info.axis_dirs = {w_t, cross(n_hat, w_t)};
            Rat f_sq = a_sq + b_sq;
            auto beta = rat_sqrt(f_sq * len_sq / (wu * wu + wv * wv));
            if (!beta) throw NotRationallyRepresentable("hyperbola foci are irrational");
            info.foci = {to3d(uc + *beta * wu, vc + *beta * wv),
                         to3d(uc - *beta * wu, vc - *beta * wv)};
        }
        return info;
    }

    // Parabola: delta == 0, nondegenerate.
    info.kind = ConicKind::Parabola;
    Rat ku, kv, mu, mv;
    if (A != 0 || B != 0) {
        if (A == 0) throw DegenerateConic("degenerate parabola quadratic part");
        ku = -B / 2; kv = A;
        mu = A; mv = B / 2;
    } else {
        // A == 0 and B == 0, so C != 0
        ku = Rat(1); kv = Rat(0);
        mu = Rat(0); mv = Rat(1);
    }
    Rat lambda = A + C;  // the nonzero eigenvalue
    Rat m_sq = mu * mu + mv * mv;
    Rat Dm = D * mu + E * mv;
    Rat Dk = D * ku + E * kv;
    if (Dk == 0) throw DegenerateConic("parabola without vertex (parallel lines)");
    Rat xi_v = -Dm / (2 * lambda);
    Rat eta_v = (Dm * Dm / (4 * lambda) - F * m_sq) / Dk;
    Rat u_vert = (xi_v * mu + eta_v * ku) / m_sq;
    Rat v_vert = (xi_v * mv + eta_v * kv) / m_sq;
    info.center_or_vertex = to3d(u_vert, v_vert);
    RVec3 K3 = e1 * ku + e2 * kv;
    Rat c_P = -Dk / (4 * lambda * m_sq * len_sq);
    info.foci = {info.center_or_vertex + K3 * c_P};
    // Axis oriented toward the opening (same side as the focus).
    int open_sign = rat_sign(c_P);
    info.axis_dirs = {K3 * Rat(open_sign)};
    return info;
}

CanalSurface canonical_cyclide_pair(CyclideType type, int which, const CyclideParams& p) {
    UniPoly one_plus({Rat(1), Rat(0), Rat(1)});    // 1 + t^2
    UniPoly one_minus({Rat(1), Rat(0), Rat(-1)});  // 1 - t^2
    UniPoly two_t({Rat(0), Rat(2)});
    RatFunc zero(Rat(0));
    switch (type) {
        case CyclideType::I:
            if (p.a == 0 || p.c == 0) throw InvalidParams("Type I requires a, c != 0");
            if (which == 1)
                return {SpaceCurve(RatFunc(one_minus * p.a, one_plus), RatFunc(two_t * p.a, one_plus), zero),
                        RatFunc(p.c)};
            return {SpaceCurve(zero, zero, RatFunc(two_t * p.a, one_minus)),
                    RatFunc(UniPoly({p.c - p.a, Rat(0), -(p.c + p.a)}), one_minus)};
        case CyclideType::II: {
            if (p.a == 0 || p.b == 0 || p.f <= 0) throw InvalidParams("Type II requires a, b != 0 and f > 0");
            if (p.f * p.f != p.a * p.a - p.b * p.b)
                throw InvalidParams("Type II requires f^2 = a^2 - b^2");
            if (which == 1)
                return {SpaceCurve(RatFunc(one_minus * p.a, one_plus), RatFunc(two_t * p.b, one_plus), zero),
                        RatFunc(UniPoly({p.c - p.f, Rat(0), p.c + p.f}), one_plus)};
            return {SpaceCurve(RatFunc(one_plus * p.f, one_minus), zero, RatFunc(two_t * p.b, one_minus)),
                    RatFunc(UniPoly({p.c - p.a, Rat(0), -(p.c + p.a)}), one_minus)};
        }
        case CyclideType::III: {
            if (p.g == 0) throw InvalidParams("Type III requires g != 0");
            UniPoly x1({-p.g / 2, Rat(0), p.g});
            UniPoly y1({Rat(0), 2 * p.g});
            if (which == 1)
                return {SpaceCurve(RatFunc(x1), RatFunc(y1), zero),
                        RatFunc(UniPoly({p.c + p.g / 2, Rat(0), p.g}))};
            return {SpaceCurve(RatFunc(UniPoly({p.g / 2, Rat(0), -p.g})), zero, RatFunc(y1)),
                    RatFunc(UniPoly({p.c - p.g / 2, Rat(0), -p.g}))};
        }
    }
    throw InvalidParams("unknown cyclide type");
}

Rat implicit_eval(CyclideType type, const CyclideParams& p, const RVec3& pt) {
    const Rat &x = pt.x, &y = pt.y, &z = pt.z;
    Rat s = x * x + y * y + z * z;
    switch (type) {
        case CyclideType::I: {
            if (p.a == 0 || p.c == 0) throw InvalidParams("Type I requires a, c != 0");
            Rat t = s + p.a * p.a - p.c * p.c;
            return t * t - 4 * p.a * p.a * (x * x + y * y);
        }
        case CyclideType::II: {
            if (p.a == 0 || p.b == 0 || p.f <= 0 || p.f * p.f != p.a * p.a - p.b * p.b)
                throw InvalidParams("Type II parameter constraints violated");
            Rat t = s + p.a * p.a - p.f * p.f - p.c * p.c;
            Rat ax_cf = p.a * x - p.c * p.f;
            return t * t - 4 * ax_cf * ax_cf - 4 * y * y * (p.a * p.a - p.f * p.f);
        }
        case CyclideType::III: {
            if (p.g == 0) throw InvalidParams("Type III requires g != 0");
            return (x + p.c) * s + (y * y - z * z) * p.g - (p.g * p.g + p.c * p.c) * x +
                   (p.g * p.g - p.c * p.c) * p.c;
        }
    }
    throw InvalidParams("unknown cyclide type");
}

namespace {

// Builds the Moebius transformation mu with canonical_spine o mu == posed,
// where `raw` is the rational inverse of the canonical parametrization
// evaluated along `posed`.  Returns nullopt if the match fails.
std::optional<Moebius> match_reparametrization(const RatFunc& raw, const SpaceCurve& canonical,
                                               const SpaceCurve& posed) {
    if (raw.num().degree() > 1 || raw.den().degree() > 1) return std::nullopt;
    Rat alpha = raw.num().coeff(1), beta = raw.num().coeff(0);
    Rat gamma = raw.den().coeff(1), delta = raw.den().coeff(0);
    if (alpha * delta - beta * gamma == 0) return std::nullopt;
    Moebius mu(alpha, beta, gamma, delta);
    if (canonical.compose(mu) != posed) return std::nullopt;
    return mu;
}

// Extracts c from s == sign*(c + shape); returns (c, sign).
std::optional<std::pair<Rat, int>> parse_radius(const RatFunc& s, const RatFunc& shape) {
    RatFunc plus = s - shape;
    if (plus.is_constant()) return std::pair{plus.is_zero() ? Rat(0) : plus.num().coeff(0), +1};
    RatFunc minus = -s - shape;
    if (minus.is_constant()) return std::pair{minus.is_zero() ? Rat(0) : minus.num().coeff(0), -1};
    return std::nullopt;
}

struct PoseCandidate {
    Isometry pose;
    Rat g_signed;          // Type III only
    int role_of_first = 1; // canonical role of user pair 1
};

Isometry pose_from_axes(const RVec3& x_hat, const RVec3& z_hat, const RVec3& O) {
    RVec3 y_hat = cross(z_hat, x_hat);
    RMat3 Q = RMat3::from_rows(x_hat, y_hat, z_hat);
    return Isometry(Q, -(Q * O));
}

DupinFrame frame_type_I(const CanalSurface* pairs[2], const ConicInfo* infos[2], int circle_idx) {
    const ConicInfo& C = *infos[circle_idx];
    const ConicInfo& L = *infos[1 - circle_idx];
    const CanalSurface& circle_pair = *pairs[circle_idx];
    const CanalSurface& line_pair = *pairs[1 - circle_idx];

    RVec3 O = C.center_or_vertex;
    if (cross(L.axis_dirs[0], C.plane.normal) != RVec3(Rat(0), Rat(0), Rat(0)))
        throw NotADupinConfiguration("line is not the axis of the circle");
    if (cross(L.axis_dirs[0], O - L.center_or_vertex) != RVec3(Rat(0), Rat(0), Rat(0)))
        throw NotADupinConfiguration("axis line does not pass through the circle center");
    if (!circle_pair.radius.is_constant())
        throw NotADupinConfiguration("circle-spine radius function is not constant");
    Rat c = circle_pair.radius.is_zero() ? Rat(0) : circle_pair.radius.num().coeff(0);
    if (c == 0) throw NotADupinConfiguration("zero radius");

    auto a_opt = rat_sqrt(C.semi_axes_sq[0]);
    if (!a_opt) throw NotRationallyRepresentable("circle radius is irrational");
    Rat a = *a_opt;
    if (a == 0 || rat_abs(c) == a)
        throw NotADupinConfiguration("degenerate torus (a = 0 or |c| = a)");

    RVec3 z_hat = rational_unit(lex_positive(C.plane.normal));
    // Radius compatibility of the line pair: (c -+ r)^2 = a^2 + h^2 with h the
    // axial coordinate.
    RatFunc h = (line_pair.spine.x - RatFunc(O.x)) * z_hat.x +
                (line_pair.spine.y - RatFunc(O.y)) * z_hat.y +
                (line_pair.spine.z - RatFunc(O.z)) * z_hat.z;
    RatFunc target = RatFunc(a * a) + h * h;
    RatFunc dplus = (RatFunc(c) - line_pair.radius) * (RatFunc(c) - line_pair.radius) - target;
    RatFunc dminus = (RatFunc(c) + line_pair.radius) * (RatFunc(c) + line_pair.radius) - target;
    int line_sign;
    if (dplus.is_zero()) line_sign = +1;
    else if (dminus.is_zero()) line_sign = -1;
    else throw NotADupinConfiguration("line-pair radius does not match the torus");

    // In-plane x axis from a rational circle point.
    RVec3 x_hat;
    bool found = false;
    for (int k = 0; k < 60 && !found; ++k) {
        Rat t = probe(k);
        if (!circle_pair.spine.defined_at(t)) continue;
        RVec3 d = circle_pair.spine.eval(t) - O;
        if (d == RVec3(Rat(0), Rat(0), Rat(0))) continue;
        x_hat = d * Rat(1 / a);
        found = true;
    }
    if (!found) throw NotADupinConfiguration("no usable circle point");

    Isometry pose = pose_from_axes(x_hat, z_hat, O);
    SpaceCurve posed = apply_isometry(pose, circle_pair.spine);
    RatFunc raw = posed.y / (RatFunc(a) + posed.x);
    auto mu = match_reparametrization(raw, canonical_cyclide_pair(CyclideType::I, 1, {a, Rat(0), c, Rat(0), Rat(0)}).spine, posed);
    if (!mu) throw NotADupinConfiguration("circle spine does not match the canonical circle");

    DupinFrame fr;
    fr.type = CyclideType::I;
    fr.params = {a, Rat(0), c, Rat(0), Rat(0)};
    fr.O = O;
    fr.planes = {C.plane};
    fr.pose = pose;
    fr.mu[circle_idx] = *mu;
    fr.mu[1 - circle_idx] = Moebius::identity();  // line pair alignment unused
    fr.canonical_role[circle_idx] = 1;
    fr.canonical_role[1 - circle_idx] = 2;
    fr.radius_sign[circle_idx] = +1;
    fr.radius_sign[1 - circle_idx] = line_sign;
    return fr;
}

RatFunc shape_II_ellipse(const Rat& f) {
    // r1 = c - f(1-t^2)/(1+t^2) = c + shape with shape = (f t^2 - f)/(1+t^2)
    return RatFunc(UniPoly({-f, Rat(0), f}), UniPoly({Rat(1), Rat(0), Rat(1)}));
}

RatFunc shape_II_hyperbola(const Rat& a) {
    // r2 = c - a(1+t^2)/(1-t^2) = c + shape with shape = -a(1+t^2)/(1-t^2)
    return RatFunc(UniPoly({-a, Rat(0), -a}), UniPoly({Rat(1), Rat(0), Rat(-1)}));
}

DupinFrame frame_type_II(const CanalSurface* pairs[2], const ConicInfo* infos[2], int ell_idx) {
    const ConicInfo& E = *infos[ell_idx];
    const ConicInfo& H = *infos[1 - ell_idx];
    const CanalSurface& pe = *pairs[ell_idx];
    const CanalSurface& ph = *pairs[1 - ell_idx];

    RVec3 O = E.center_or_vertex;
    if (H.center_or_vertex != O)
        throw NotADupinConfiguration("ellipse and hyperbola centers differ");
    if (dot(E.plane.normal, H.plane.normal) != 0)
        throw NotADupinConfiguration("spine planes are not perpendicular");
    for (const auto& fp : E.foci)
        if (!H.on_conic(fp)) throw NotADupinConfiguration("hyperbola misses an ellipse focus");
    for (const auto& fp : H.foci)
        if (!E.on_conic(fp)) throw NotADupinConfiguration("ellipse misses a hyperbola focus");

    Rat a_sq = E.semi_axes_sq[0], b_sq = E.semi_axes_sq[1];
    auto a_opt = rat_sqrt(a_sq), b_opt = rat_sqrt(b_sq);
    if (!a_opt || !b_opt) throw NotRationallyRepresentable("ellipse semi-axes are irrational");
    Rat a = *a_opt, b = *b_opt;
    Rat f_sq = a_sq - b_sq;
    auto f_opt = rat_sqrt(f_sq);
    if (!f_opt) throw NotRationallyRepresentable("linear eccentricity is irrational");
    Rat f = *f_opt;
    if (f == 0) throw NotADupinConfiguration("circular ellipse cannot pair with a hyperbola");
    if (!(H.semi_axes_sq[0] == f_sq && H.semi_axes_sq[1] == b_sq))
        throw NotADupinConfiguration("hyperbola semi-axes inconsistent with the ellipse");

    RVec3 ez = rational_unit(lex_positive(E.plane.normal));
    SpaceCurve can_e = canonical_cyclide_pair(CyclideType::II, 1, {a, b, Rat(0), f, Rat(0)}).spine;
    SpaceCurve can_h = canonical_cyclide_pair(CyclideType::II, 2, {a, b, Rat(0), f, Rat(0)}).spine;

    std::vector<DupinFrame> valid;
    for (const RVec3& focus : E.foci)
        for (int zs : {1, -1}) try {
            RVec3 x_hat = (focus - O) * Rat(1 / f);
            RVec3 z_hat = ez * Rat(zs);
            Isometry pose = pose_from_axes(x_hat, z_hat, O);

            SpaceCurve pe_posed = apply_isometry(pose, pe.spine);
            RatFunc raw_e = pe_posed.y * RatFunc(a) / ((RatFunc(a) + pe_posed.x) * RatFunc(b));
            auto mu_e = match_reparametrization(raw_e, can_e, pe_posed);
            if (!mu_e) continue;
            RatFunc s_e = pe.radius.compose(mu_e->inverse().as_ratfunc());
            auto ce = parse_radius(s_e, shape_II_ellipse(f));
            if (!ce) continue;

            SpaceCurve ph_posed = apply_isometry(pose, ph.spine);
            RatFunc raw_h = ph_posed.z * RatFunc(f) / ((ph_posed.x + RatFunc(f)) * RatFunc(b));
            auto mu_h = match_reparametrization(raw_h, can_h, ph_posed);
            if (!mu_h) continue;
            RatFunc s_h = ph.radius.compose(mu_h->inverse().as_ratfunc());
            auto ch = parse_radius(s_h, shape_II_hyperbola(a));
            if (!ch) continue;

            if (ce->first != ch->first) continue;
            Rat c = ce->first;

            DupinFrame fr;
            fr.type = CyclideType::II;
            fr.params = {a, b, c, f, Rat(0)};
            fr.O = O;
            fr.planes = {Plane{x_hat, dot(x_hat, O)}, E.plane, H.plane};
            fr.pose = pose;
            fr.mu[ell_idx] = *mu_e;
            fr.mu[1 - ell_idx] = *mu_h;
            fr.canonical_role[ell_idx] = 1;
            fr.canonical_role[1 - ell_idx] = 2;
            fr.radius_sign[ell_idx] = ce->second;
            fr.radius_sign[1 - ell_idx] = ch->second;
            valid.push_back(std::move(fr));
        } catch (const DivisionByZero&) {
            continue;
        }
    if (valid.empty()) throw NotADupinConfiguration("no exact canonical match for the spine pairs");
    for (const auto& fr : valid)
        if (fr.pose.is_identity()) return fr;
    for (const auto& fr : valid)
        if (fr.pose.Q == RMat3::identity()) return fr;
    return valid.front();
}

RatFunc shape_III(const Rat& g) {
    // g*(t^2 + 1/2); r1 = c + shape, r2 = c - shape
    return RatFunc(UniPoly({g / 2, Rat(0), g}));
}

DupinFrame frame_type_III(const CanalSurface* pairs[2], const ConicInfo* infos[2]) {
    const ConicInfo& P1 = *infos[0];
    const ConicInfo& P2 = *infos[1];
    if (dot(P1.plane.normal, P2.plane.normal) != 0)
        throw NotADupinConfiguration("parabola planes are not perpendicular");
    RVec3 focus1 = P1.foci[0], vertex1 = P1.center_or_vertex;
    RVec3 focus2 = P2.foci[0], vertex2 = P2.center_or_vertex;
    if (!(vertex1 == focus2 && vertex2 == focus1))
        throw NotADupinConfiguration("parabolas do not pass through each other's foci");
    RVec3 O = (focus1 + focus2) * Rat(1, 2);
    Rat g_sq = norm_sq(focus1 - focus2);
    auto g_abs = rat_sqrt(g_sq);
    if (!g_abs) throw NotRationallyRepresentable("focal distance is irrational");
    if (*g_abs == 0) throw NotADupinConfiguration("coincident parabola foci");

    std::vector<DupinFrame> valid;
    for (int first_role : {1, 2})
        for (int gs : {1, -1})
            for (int zs : {1, -1}) {
                Rat g = *g_abs * gs;
                int role[2] = {first_role, 3 - first_role};
                const ConicInfo* role1_info = (role[0] == 1) ? &P1 : &P2;
                int idx_role1 = (role[0] == 1) ? 0 : 1;
                int idx_role2 = 1 - idx_role1;
                // canonical role-1 parabola has focus at (g/2, 0, 0)
                RVec3 x_hat = (role1_info->foci[0] - O) * (Rat(2) / g);
                RVec3 z_hat = rational_unit(lex_positive(role1_info->plane.normal)) * Rat(zs);
                if (norm_sq(x_hat) != 1) continue;
                Isometry pose = pose_from_axes(x_hat, z_hat, O);

                CyclideParams par{Rat(0), Rat(0), Rat(0), Rat(0), g};
                SpaceCurve can1 = canonical_cyclide_pair(CyclideType::III, 1, par).spine;
                SpaceCurve can2 = canonical_cyclide_pair(CyclideType::III, 2, par).spine;

                SpaceCurve posed1 = apply_isometry(pose, pairs[idx_role1]->spine);
                auto mu1 = match_reparametrization(posed1.y / RatFunc(2 * g), can1, posed1);
                if (!mu1) continue;
                RatFunc s1 = pairs[idx_role1]->radius.compose(mu1->inverse().as_ratfunc());
                auto c1 = parse_radius(s1, shape_III(g));
                if (!c1) continue;

                SpaceCurve posed2 = apply_isometry(pose, pairs[idx_role2]->spine);
                auto mu2 = match_reparametrization(posed2.z / RatFunc(2 * g), can2, posed2);
                if (!mu2) continue;
                RatFunc s2 = pairs[idx_role2]->radius.compose(mu2->inverse().as_ratfunc());
                auto c2 = parse_radius(s2, shape_III(g) * Rat(-1));
                if (!c2) continue;

                if (c1->first != c2->first) continue;

                DupinFrame fr;
                fr.type = CyclideType::III;
                fr.params = {Rat(0), Rat(0), c1->first, Rat(0), g};
                fr.O = O;
                RVec3 y_hat = cross(z_hat, x_hat);
                fr.planes = {Plane{x_hat, dot(x_hat, O)},
                             (idx_role1 == 0 ? P1 : P2).plane,
                             (idx_role2 == 0 ? P1 : P2).plane,
                             Plane{z_hat - y_hat, dot(z_hat - y_hat, O)},
                             Plane{z_hat + y_hat, dot(z_hat + y_hat, O)}};
                fr.pose = pose;
                fr.mu[idx_role1] = *mu1;
                fr.mu[idx_role2] = *mu2;
                fr.canonical_role[idx_role1] = 1;
                fr.canonical_role[idx_role2] = 2;
                fr.radius_sign[idx_role1] = c1->second;
                fr.radius_sign[idx_role2] = c2->second;
                valid.push_back(std::move(fr));
            }
    if (valid.empty()) throw NotADupinConfiguration("no exact canonical match for the parabola pair");
    for (const auto& fr : valid)
        if (fr.pose.is_identity()) return fr;
    for (const auto& fr : valid)
        if (fr.pose.Q == RMat3::identity()) return fr;
    return valid.front();
}

} // namespace

DupinFrame dupin_frame(const CanalSurface& pair1, const CanalSurface& pair2) {
    ConicInfo i1 = classify_conic(pair1.spine);
    ConicInfo i2 = classify_conic(pair2.spine);
    const CanalSurface* pairs[2] = {&pair1, &pair2};
    const ConicInfo* infos[2] = {&i1, &i2};

    auto kinds = std::pair{i1.kind, i2.kind};
    if ((kinds.first == ConicKind::Circle && kinds.second == ConicKind::Line) ||
        (kinds.first == ConicKind::Line && kinds.second == ConicKind::Circle))
        return frame_type_I(pairs, infos, kinds.first == ConicKind::Circle ? 0 : 1);
    if ((kinds.first == ConicKind::Ellipse && kinds.second == ConicKind::Hyperbola) ||
        (kinds.first == ConicKind::Hyperbola && kinds.second == ConicKind::Ellipse))
        return frame_type_II(pairs, infos, kinds.first == ConicKind::Ellipse ? 0 : 1);
    if (kinds.first == ConicKind::Parabola && kinds.second == ConicKind::Parabola)
        return frame_type_III(pairs, infos);
    throw NotADupinConfiguration("spine conics do not form a legal cyclide pair");
}

DupinCyclide classify_dupin(const CanalSurface& pair1, const CanalSurface& pair2) {
    DupinCyclide d;
    d.pair1 = pair1;
    d.pair2 = pair2;
    d.conic1 = classify_conic(pair1.spine);
    d.conic2 = classify_conic(pair2.spine);
    d.frame = dupin_frame(pair1, pair2);
    return d;
}

namespace {

struct ValueCandidate {
    bool exact;
    Rat value;       // when exact
    BigFloat approx; // always set
};

bool value_less(const ValueCandidate& a, const ValueCandidate& b) {
    if (a.exact && b.exact) return a.value < b.value;
    return a.approx < b.approx;
}

ExtScalar to_ext(const ValueCandidate& v) {
    ExtScalar e;
    e.kind = ExtScalar::Finite;
    e.exact = v.exact;
    if (v.exact) {
        e.value = v.value;
        e.approx = rat_to_double(v.value);
    } else {
        e.approx = v.approx.to_double();
    }
    return e;
}

} // namespace

Extrema ratfunc_extrema(const RatFunc& r) {
    Extrema out;
    if (r.is_constant()) {
        Rat v = r.is_zero() ? Rat(0) : r.num().coeff(0);
        out.min = out.max = ExtScalar::finite(v);
        return out;
    }

    bool unbounded_above = false, unbounded_below = false;
    std::vector<ValueCandidate> candidates;

    const int dn = r.num().degree(), dd = r.den().degree();
    if (dn > dd) {
        int lead_sign = rat_sign(r.num().lead());  // den monic
        (lead_sign > 0 ? unbounded_above : unbounded_below) = true;
        int sign_neg = lead_sign * (((dn - dd) % 2 == 0) ? 1 : -1);
        (sign_neg > 0 ? unbounded_above : unbounded_below) = true;
    } else {
        Rat v = r.value_at_infinity();
        candidates.push_back({true, v, BigFloat(v)});
    }

    // Poles make r unbounded; determine the blow-up signs on each side.
    if (r.den().degree() > 0) {
        for (auto& pole : real_roots(r.den())) {
            int left_sign, right_sign;
            if (pole.is_exact()) {
                Rat p = pole.lo;
                UniPoly lin({-p, Rat(1)});
                UniPoly g = r.den();
                int m = 0;
                while (g.eval(p) == 0) { g = g.div_exact(lin); ++m; }
                int gs = rat_sign(g.eval(p)), ns = rat_sign(r.num().eval(p));
                right_sign = ns * gs;
                left_sign = ns * gs * ((m % 2 == 0) ? 1 : -1);
            } else {
                while (has_root_in(r.num(), pole.lo, pole.hi)) pole.refine_steps(4);
                left_sign = rat_sign(r.num().eval(pole.lo)) * rat_sign(r.den().eval(pole.lo));
                right_sign = rat_sign(r.num().eval(pole.hi)) * rat_sign(r.den().eval(pole.hi));
            }
            if (left_sign > 0 || right_sign > 0) unbounded_above = true;
            if (left_sign < 0 || right_sign < 0) unbounded_below = true;
        }
    }

    // Critical values.
    RatFunc dr = r.derivative();
    if (!dr.is_zero()) {
        UniPoly crit = dr.num();
        UniPoly shared = gcd(crit, r.den());
        if (shared.degree() > 0) crit = crit.div_exact(shared);
        if (crit.degree() > 0) {
            for (auto& root : real_roots(crit)) {
                if (root.is_exact()) {
                    if (r.den().eval(root.lo) == 0) continue;  // pole, handled above
                    Rat v = r.eval(root.lo);
                    candidates.push_back({true, v, BigFloat(v)});
                } else {
                    while (has_root_in(r.den(), root.lo, root.hi)) root.refine_steps(4);
                    root.refine(rat_pow2(-200));
                    BigFloat num_v(r.num().eval(root.mid()));
                    BigFloat den_v(r.den().eval(root.mid()));
                    candidates.push_back({false, Rat(0), num_v / den_v});
                }
            }
        }
    }

    if (unbounded_below)
        out.min.kind = ExtScalar::NegInf;
    if (unbounded_above)
        out.max.kind = ExtScalar::PosInf;
    if (!candidates.empty()) {
        auto mn = *std::min_element(candidates.begin(), candidates.end(), value_less);
        auto mx = *std::max_element(candidates.begin(), candidates.end(), value_less);
        if (!unbounded_below) out.min = to_ext(mn);
        if (!unbounded_above) out.max = to_ext(mx);
    }
    return out;
}

bool is_super_symmetric(const DupinCyclide& d) {
    const DupinFrame& fr = d.frame;
    switch (fr.type) {
        case CyclideType::I:
            return false;
        case CyclideType::II: {
            // Extrema of the radius function paired with the ellipse spine.
            const CanalSurface& ellipse_pair = (fr.canonical_role[0] == 1) ? d.pair1 : d.pair2;
            Extrema e = ratfunc_extrema(ellipse_pair.radius);
            if (e.min.kind != ExtScalar::Finite || e.max.kind != ExtScalar::Finite) return false;
            if (e.min.exact && e.max.exact) return e.min.value + e.max.value == 0;
            return std::abs(e.min.approx + e.max.approx) < 1e-12;
        }
        case CyclideType::III: {
            // r1 + r2 = 0 identically, after aligning both parametrizations.
            const CanalSurface* ps[2] = {&d.pair1, &d.pair2};
            RatFunc sum(Rat(0));
            for (int i = 0; i < 2; ++i) {
                RatFunc aligned = ps[i]->radius.compose(fr.mu[i].inverse().as_ratfunc());
                sum += aligned * Rat(fr.radius_sign[i]);
            }
            return sum.is_zero();
        }
    }
    return false;
}

namespace {

struct CanonSym {
    const char* description;
    int q[3][3];
    Moebius phi1, phi2;
    bool case_b;
};

std::vector<CanonSym> canonical_table(CyclideType type, bool super) {
    using M = Moebius;
    const M id = M::identity(), neg = M::negation(), inv = M::reciprocal(),
            ninv = M::negated_reciprocal();
    std::vector<CanonSym> rows = {
        {"identity", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, id, id, false},
        {"reflection in the first spine plane", {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, id, neg, false},
        {"reflection in the second spine plane", {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, neg, id, false},
        {"half-turn about the spine-plane intersection line",
         {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, neg, neg, false},
    };
    if (type == CyclideType::II && super) {
        rows.push_back({"reflection in the central plane", {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                        inv, ninv, false});
        rows.push_back({"half-turn about the major axis in the first spine plane",
                        {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, inv, inv, false});
        rows.push_back({"half-turn about the axis in the second spine plane",
                        {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, ninv, ninv, false});
        rows.push_back({"central symmetry about O", {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                        ninv, inv, false});
    }
    if (type == CyclideType::III && super) {
        rows.push_back({"half-turn about the first bisector line",
                        {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, id, id, true});
        rows.push_back({"half-turn about the second bisector line",
                        {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}, neg, neg, true});
        rows.push_back({"quarter-turn about the spine-plane intersection composed with the central-plane reflection",
                        {{-1, 0, 0}, {0, 0, -1}, {0, 1, 0}}, id, neg, true});
        rows.push_back({"quarter-turn about the spine-plane intersection composed with the central-plane reflection",
                        {{-1, 0, 0}, {0, 0, 1}, {0, -1, 0}}, neg, id, true});
    }
    return rows;
}

} // namespace

Isometry torus_family_member(const DupinFrame& frame, const Rat& cos_theta, const Rat& sin_theta,
                             int eps1, int eps2) {
    if (cos_theta * cos_theta + sin_theta * sin_theta != 1)
        throw InvalidParams("rotation parameters must satisfy cos^2 + sin^2 = 1");
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw InvalidParams("mirror signs must be +-1");
    RMat3 q;
    q.m[0] = {Rat(eps2) * cos_theta, Rat(-eps2) * sin_theta, Rat(0)};
    q.m[1] = {sin_theta, cos_theta, Rat(0)};
    q.m[2] = {Rat(0), Rat(0), Rat(eps1)};
    Isometry canonical(q, RVec3(Rat(0), Rat(0), Rat(0)));
    return canonical.conjugate(frame.pose.inverse());
}

SymmetryReport dupin_symmetries(const DupinCyclide& d) {
    const DupinFrame& fr = d.frame;
    SymmetryReport rep;
    const CanalSurface* ps[2] = {&d.pair1, &d.pair2};

    if (fr.type == CyclideType::I) {
        ContinuousFamily fam;
        fam.kind = "axis-rotations";
        fam.axis_point = fr.O;
        fam.axis_dir = fr.pose.Q.row(2);
        fam.mirror = fr.planes[0];
        fam.pose = fr.pose;
        rep.continuous_family = fam;
        // Discrete representatives of the family at angle zero.
        struct Rep { int e1, e2; const char* d; };
        for (auto [e1, e2, desc] : {Rep{1, 1, "identity"},
                                    Rep{-1, 1, "reflection in the spine-circle plane"},
                                    Rep{1, -1, "reflection in a plane containing the axis"},
                                    Rep{-1, -1, "half-turn about a line in the circle plane"}}) {
            Isometry f = torus_family_member(fr, Rat(1), Rat(0), e1, e2);
            // phi for the circle pair: t or 1/t, conjugated by mu.
            Moebius phi_can = (e2 == 1) ? Moebius::identity() : Moebius::reciprocal();
            int ci = (fr.canonical_role[0] == 1) ? 0 : 1;
            Moebius phi_user = fr.mu[ci].inverse().compose(phi_can).compose(fr.mu[ci]);
            if (!verify_conjugation(f, ps[ci]->spine, ps[ci]->spine, phi_user))
                throw KernelError("internal: torus symmetry failed spine verification");
            SymmetryEntry e;
            e.f = f;
            e.phi = (ci == 0) ? phi_user : Moebius::identity();
            if (ci == 1) e.phi2 = phi_user;
            e.description = desc;
            rep.symmetries.push_back(std::move(e));
        }
        rep.group_label = "Z2^2 x S^1";
        return rep;
    }

    const bool super = is_super_symmetric(d);
    Isometry unpose = fr.pose.inverse();
    for (const auto& row : canonical_table(fr.type, super)) {
        RMat3 q;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q.m[i][j] = Rat(row.q[i][j]);
        Isometry f = Isometry(q, RVec3(Rat(0), Rat(0), Rat(0))).conjugate(unpose);
        const Moebius phi_can[2] = {row.phi1, row.phi2};

        SymmetryEntry e;
        e.f = f;
        e.swaps_spines = row.case_b;
        e.description = row.description;
        for (int i = 0; i < 2; ++i) {
            int role = fr.canonical_role[i];
            // Case A: f o c_i = c_i o (mu_i^-1 phi_role mu_i).
            // Case B: f o c_i = c_j o (mu_j^-1 phi_role mu_i), j the partner.
            int j = row.case_b ? 1 - i : i;
            Moebius phi_user = fr.mu[j].inverse().compose(phi_can[role - 1]).compose(fr.mu[i]);
            if (!verify_conjugation(f, ps[i]->spine, ps[j]->spine, phi_user))
                throw KernelError("internal: table symmetry failed spine verification");
            if (i == 0)
                e.phi = phi_user;
            else
                e.phi2 = phi_user;
        }
        rep.symmetries.push_back(std::move(e));
    }

    std::vector<Isometry> elems;
    for (const auto& e : rep.symmetries) elems.push_back(e.f);
    rep.group_label = classify_group(elems);
    return rep;
}

} // namespace canal
