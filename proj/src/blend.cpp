#include "canal/blend.hpp"

#include <algorithm>
#include <string>

#include "canal/errors.hpp"

namespace canal {

Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

Rat bernstein_eval(int n, int i, const Rat& t) {
    if (i < 0 || i > n) throw InvalidParams("Bernstein index out of range");
    Rat ti(1), omti(1);
    for (int k = 0; k < i; ++k) ti *= t;
    for (int k = 0; k < n - i; ++k) omti *= (1 - t);
    return binomial(n, i) * ti * omti;
}

UniPoly bernstein_poly(int n, int i) {
    if (i < 0 || i > n) throw InvalidParams("Bernstein index out of range");
    UniPoly ti = (i == 0) ? UniPoly::constant(Rat(1)) : UniPoly::monomial(i);
    UniPoly om({Rat(1), Rat(-1)});
    UniPoly acc = UniPoly::constant(binomial(n, i)) * ti;
    for (int k = 0; k < n - i; ++k) acc = acc * om;
    return acc;
}

std::vector<Rat> forward_difference(const std::vector<Rat>& seq, int k) {
    if (k < 0 || k > static_cast<int>(seq.size()) - 1)
        throw InvalidParams("forward difference order out of range");
    std::vector<Rat> v = seq;
    for (int step = 0; step < k; ++step) {
        std::vector<Rat> w(v.size() - 1);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) w[i] = v[i + 1] - v[i];
        v = std::move(w);
    }
    return v;
}

std::vector<RVec3> forward_difference(const std::vector<RVec3>& seq, int k) {
    if (k < 0 || k > static_cast<int>(seq.size()) - 1)
        throw InvalidParams("forward difference order out of range");
    std::vector<RVec3> v = seq;
    for (int step = 0; step < k; ++step) {
        std::vector<RVec3> w(v.size() - 1);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) w[i] = v[i + 1] - v[i];
        v = std::move(w);
    }
    return v;
}

RVec3 BezierCurve3::eval(const Rat& t) const {
    int n = degree();
    RVec3 acc(Rat(0), Rat(0), Rat(0));
    for (int i = 0; i <= n; ++i) acc = acc + control_points[i] * bernstein_eval(n, i, t);
    return acc;
}

SpaceCurve BezierCurve3::to_space_curve() const {
    int n = degree();
    UniPoly px, py, pz;
    for (int i = 0; i <= n; ++i) {
        UniPoly b = bernstein_poly(n, i);
        px += b * control_points[i].x;
        py += b * control_points[i].y;
        pz += b * control_points[i].z;
    }
    return SpaceCurve::from_polynomials(px, py, pz);
}

BezierCurve3 BezierCurve3::reversed() const {
    BezierCurve3 r = *this;
    std::reverse(r.control_points.begin(), r.control_points.end());
    return r;
}

Rat BezierScalar::eval(const Rat& t) const {
    int n = degree();
    Rat acc(0);
    for (int i = 0; i <= n; ++i) acc += coeffs[i] * bernstein_eval(n, i, t);
    return acc;
}

UniPoly BezierScalar::to_unipoly() const {
    int n = degree();
    UniPoly p;
    for (int i = 0; i <= n; ++i) p += bernstein_poly(n, i) * coeffs[i];
    return p;
}

BezierScalar symmetric_radius_coeffs(int n, const std::vector<Rat>& free) {
    if (n < 0) throw InvalidParams("negative degree");
    std::size_t need = static_cast<std::size_t>((n + 2) / 2);
    if (free.size() != need)
        throw InconsistentConstraint("expected " + std::to_string(need) +
                                     " free coefficients for degree " + std::to_string(n));
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < need; ++i) a[i] = free[i];
    int sgn = (n % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= n; ++i) a[n - i] = Rat(sgn) * a[i];
    // Even n keeps the middle coefficient free; odd n has no middle.
    return BezierScalar{std::move(a)};
}

namespace {

std::vector<Rat> scalar_jet(const RatFunc& r, const Rat& t, int N) {
    std::vector<Rat> jet;
    RatFunc d = r;
    for (int k = 0; k <= N; ++k) {
        if (!d.defined_at(t)) throw PoleAtInput("radius derivative undefined at junction");
        jet.push_back(d.eval(t));
        d = d.derivative();
    }
    return jet;
}

std::vector<RVec3> curve_jet(const SpaceCurve& c, const Rat& t, int N) {
    std::vector<RVec3> jet;
    SpaceCurve d = c;
    for (int k = 0; k <= N; ++k) {
        if (!d.defined_at(t)) throw PoleAtInput("spine derivative undefined at junction");
        jet.push_back(d.eval(t));
        d = d.derivative();
    }
    return jet;
}

// Scale factors (n-k)!/n! turning endpoint derivatives into differences.
Rat hermite_scale(int n, int k) {
    Rat s(1);
    for (int j = 0; j < k; ++j) s *= Rat(n - j);
    return 1 / s;
}

} // namespace

BezierCurve3 hermite_spine(const SpaceCurve& c1, const Rat& t1, const SpaceCurve& c2,
                           const Rat& t2, int N) {
    if (N < 0 || N > 3) throw InvalidParams("continuity order must be between 0 and 3");
    const int n = 2 * N + 1;
    auto left = curve_jet(c1, t1, N), right = curve_jet(c2, t2, N);
    std::vector<RVec3> b(static_cast<std::size_t>(n) + 1);
    // Left end: b_k = sum_i C(k,i) Delta^i b_0 with Delta^i b_0 prescribed.
    std::vector<RVec3> d(N + 1), e(N + 1);
    for (int k = 0; k <= N; ++k) {
        d[k] = left[k] * hermite_scale(n, k);
        e[k] = right[k] * hermite_scale(n, k);
    }
    for (int k = 0; k <= N; ++k) {
        RVec3 acc(Rat(0), Rat(0), Rat(0));
        for (int i = 0; i <= k; ++i) acc = acc + d[i] * binomial(k, i);
        b[k] = acc;
    }
    // Right end: unfold Delta^k b_{n-k} = e_k downward.
    for (int k = 0; k <= N; ++k) {
        RVec3 acc = e[k];
        for (int i = 1; i <= k; ++i) {
            Rat coef = binomial(k, i) * Rat((k - i) % 2 == 0 ? 1 : -1);
            acc = acc - b[n - k + i] * coef;
        }
        b[n - k] = acc * Rat(k % 2 == 0 ? 1 : -1);
    }
    return BezierCurve3{std::move(b)};
}

HermiteRadius hermite_radius(const RatFunc& r1, const Rat& t1, const RatFunc& r2, const Rat& t2,
                             int N, bool enforce_symmetry) {
    if (N < 0 || N > 3) throw InvalidParams("continuity order must be between 0 and 3");
    auto alpha = scalar_jet(r1, t1, N), beta = scalar_jet(r2, t2, N);

    if (!enforce_symmetry) {
        const int n = 2 * N + 1;
        std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= N; ++k) {
            Rat acc(0);
            for (int i = 0; i <= k; ++i) acc += binomial(k, i) * alpha[i] * hermite_scale(n, i);
            a[k] = acc;
        }
        for (int k = 0; k <= N; ++k) {
            Rat acc = beta[k] * hermite_scale(n, k);
            for (int i = 1; i <= k; ++i)
                acc -= binomial(k, i) * Rat((k - i) % 2 == 0 ? 1 : -1) * a[n - k + i];
            a[n - k] = acc * Rat(k % 2 == 0 ? 1 : -1);
        }
        return {BezierScalar{std::move(a)}, +1};
    }

    // Symmetric case: the data must satisfy beta_k = s (-1)^k alpha_k; the
    // sign s fixes the parity of the minimal degree.
    int sign = 0;
    for (int s : {+1, -1}) {
        bool ok = true;
        for (int k = 0; k <= N && ok; ++k)
            ok = beta[k] == Rat(s) * Rat(k % 2 == 0 ? 1 : -1) * alpha[k];
        if (ok) { sign = s; break; }
    }
    if (sign == 0) {
        int bad = 0;
        for (int k = 0; k <= N; ++k) {
            bool plus = beta[k] == Rat(k % 2 == 0 ? 1 : -1) * alpha[k];
            bool minus = beta[k] == Rat(k % 2 == 0 ? -1 : 1) * alpha[k];
            if (!plus && !minus) { bad = k; break; }
        }
        throw InconsistentConstraint(
            "radius data incompatible with a symmetric blend at derivative order " +
            std::to_string(bad));
    }
    const int n = (sign > 0) ? 2 * N : 2 * N + 1;
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= N; ++k) {
        Rat acc(0);
        for (int i = 0; i <= k; ++i) acc += binomial(k, i) * alpha[i] * hermite_scale(n, i);
        a[k] = acc;
    }
    int sgn_n = (n % 2 == 0) ? 1 : -1;
    for (int k = 0; k <= N; ++k) a[n - k] = Rat(sgn_n) * a[k];
    BezierScalar out{std::move(a)};
    // The mirrored half satisfies the right-end conditions by construction.
    UniPoly p = out.to_unipoly();
    for (int k = 0; k <= N; ++k) {
        if (p.eval(Rat(1)) != beta[k])
            throw InconsistentConstraint("symmetric radius failed endpoint verification");
        p = p.derivative();
    }
    return {std::move(out), sign};
}

namespace {

BlendResult package_blend(BezierCurve3 spine, HermiteRadius radius, int symmetry_case,
                          bool normalize_orientation) {
    BlendResult res;
    res.spine_bezier = std::move(spine);
    res.radius_bezier = radius.coeffs;
    res.symmetry_case = symmetry_case;
    res.sign = radius.sign;
    UniPoly rp = res.radius_bezier.to_unipoly();
    res.orientation_flipped = normalize_orientation && rp.eval(rat(1, 2)) < 0;
    if (res.orientation_flipped) rp = -rp;
    res.surface = CanalSurface{res.spine_bezier.to_space_curve(), RatFunc(rp)};
    return res;
}

} // namespace

BlendResult symmetric_blend(const CanalSurface& S1, const Rat& t1, const CanalSurface& S2,
                            const Rat& t2, const Isometry& f, int N) {
    BezierCurve3 spine = hermite_spine(S1.spine, t1, S2.spine, t2, N);
    const int n = spine.degree();
    if (spine.control_points.front() == spine.control_points.back())
        throw DegenerateBlend("junction points coincide; the spine would close on itself");

    bool fixes_all = true, mirrors_all = true;
    int first_fail = -1;
    for (int i = 0; i <= n; ++i) {
        RVec3 img = f.apply(spine.control_points[i]);
        bool fix = img == spine.control_points[i];
        bool mir = img == spine.control_points[n - i];
        if (!fix) fixes_all = false;
        if (!mir) mirrors_all = false;
        if (!fix && !mir && first_fail < 0) first_fail = std::min(i, n - i);
    }
    if (fixes_all) {
        // f restricts to the identity on the spine; any radius respects the
        // symmetry, so only the contact conditions constrain it.
        return package_blend(std::move(spine),
                             hermite_radius(S1.radius, t1, S2.radius, t2, N, false), 1, true);
    }
    if (mirrors_all) {
        return package_blend(std::move(spine),
                             hermite_radius(S1.radius, t1, S2.radius, t2, N, true), 2, true);
    }
    throw SymmetryIncompatible(
        "spine contact data is not compatible with the prescribed isometry at derivative order " +
            std::to_string(first_fail),
        first_fail);
}

BlendResult hermite_blend(const CanalSurface& S1, const Rat& t1, const CanalSurface& S2,
                          const Rat& t2, int N) {
    BezierCurve3 spine = hermite_spine(S1.spine, t1, S2.spine, t2, N);
    return package_blend(std::move(spine),
                         hermite_radius(S1.radius, t1, S2.radius, t2, N, false), 0, false);
}

} // namespace canal
