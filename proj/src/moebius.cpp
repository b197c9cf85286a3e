#include "canal/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "canal/errors.hpp"
#include "canal/roots.hpp"

namespace canal {

Moebius::Moebius(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& delta)
    : a_(alpha), b_(beta), c_(gamma), d_(delta) {
    if (a_ * d_ - b_ * c_ == 0)
        throw DegenerateInput("Moebius coefficients with vanishing determinant");
    Rat scale(0);
    for (const Rat* v : {&a_, &b_, &c_, &d_})
        if (*v != 0) { scale = *v; break; }
    a_ /= scale; b_ /= scale; c_ /= scale; d_ /= scale;
}

Rat Moebius::apply(const Rat& t) const {
    Rat den = c_ * t + d_;
    if (den == 0) throw PoleAtInput("Moebius transformation evaluated at its pole");
    return (a_ * t + b_) / den;
}

RatFunc Moebius::as_ratfunc() const {
    return RatFunc(UniPoly({b_, a_}), UniPoly({d_, c_}));
}

Moebius Moebius::compose(const Moebius& inner) const {
    // Coefficient matrices multiply: (this o inner) <-> M_this * M_inner.
    return Moebius(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                   c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

BiPoly Moebius::to_bilinear() const {
    std::vector<UniPoly> cu(2);
    cu[0] = UniPoly({-b_, -a_});
    cu[1] = UniPoly({d_, c_});
    return BiPoly(std::move(cu));
}

bool Moebius::operator<(const Moebius& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    if (c_ != o.c_) return c_ < o.c_;
    return d_ < o.d_;
}

std::string Moebius::to_string() const {
    UniPoly num({b_, a_}), den({d_, c_});
    if (den.degree() == 0 && den.coeff(0) == 1) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

namespace {

constexpr double kDedupTol = 1e-20;
constexpr double kResidualThreshold = 1e-30;
constexpr int kCertificationPoints = 50;
const long kRootRefineBits = 340;

struct Quad {
    BigFloat v[4];
};

// Scales so the largest |entry| is 1 and the first significant entry is
// positive; makes projective comparison a plain componentwise distance.
void normalize_quad(Quad& q) {
    int imax = 0;
    for (int i = 1; i < 4; ++i)
        if (q.v[i].abs() > q.v[imax].abs()) imax = i;
    BigFloat scale = q.v[imax];
    for (auto& x : q.v) x = x / scale;
}

double quad_distance(const Quad& a, const Quad& b) {
    double d = 0;
    for (int i = 0; i < 4; ++i)
        d = std::max(d, (a.v[i] - b.v[i]).abs().to_double());
    return d;
}

// Nullspace direction of the 3x4 system coming from three graph points
// (t_i, u_i):  u_i*(gamma t_i + delta) - (alpha t_i + beta) = 0.
std::optional<Quad> fit_moebius(const std::array<std::pair<BigFloat, BigFloat>, 3>& pts) {
    BigFloat m[3][4];
    for (int r = 0; r < 3; ++r) {
        const auto& [t, u] = pts[r];
        m[r][0] = -t;
        m[r][1] = BigFloat(-1.0);
        m[r][2] = u * t;
        m[r][3] = u;
    }
    int pivot_col[3] = {-1, -1, -1};
    bool used[4] = {false, false, false, false};
    for (int r = 0; r < 3; ++r) {
        int pc = -1, pr = -1;
        BigFloat best;
        for (int c = 0; c < 4; ++c) {
            if (used[c]) continue;
            for (int rr = r; rr < 3; ++rr)
                if (pc < 0 || m[rr][c].abs() > best) { best = m[rr][c].abs(); pc = c; pr = rr; }
        }
        if (pc < 0 || best.to_double() < 1e-60) return std::nullopt;  // rank deficient
        std::swap_ranges(m[r], m[r] + 4, m[pr]);
        pivot_col[r] = pc;
        used[pc] = true;
        for (int rr = 0; rr < 3; ++rr) {
            if (rr == r) continue;
            BigFloat f = m[rr][pc] / m[r][pc];
            for (int c = 0; c < 4; ++c) m[rr][c] = m[rr][c] - f * m[r][c];
        }
    }
    int free_col = 0;
    while (used[free_col]) ++free_col;
    Quad q;
    q.v[free_col] = BigFloat(1.0);
    for (int r = 0; r < 3; ++r)
        q.v[pivot_col[r]] = -m[r][free_col] / m[r][pivot_col[r]];
    normalize_quad(q);
    // Reject maps with (numerically) vanishing determinant: constants are not
    // Moebius transformations.
    BigFloat det = q.v[0] * q.v[3] - q.v[1] * q.v[2];
    if (det.abs().to_double() < 1e-30) return std::nullopt;
    return q;
}

// phi(t) for a numeric quadruple, as an interval; nullopt at a (near-)pole.
std::optional<Interval> apply_quad(const Quad& q, const Rat& t) {
    Interval it(t);
    Interval num = Interval::exact(q.v[0]) * it + Interval::exact(q.v[1]);
    Interval den = Interval::exact(q.v[2]) * it + Interval::exact(q.v[3]);
    if (den.contains_zero()) return std::nullopt;
    // Division lo/hi by a sign-definite interval.
    BigFloat cand[4] = {num.lo() / den.lo(), num.lo() / den.hi(),
                        num.hi() / den.lo(), num.hi() / den.hi()};
    BigFloat lo = cand[0], hi = cand[0];
    for (int i = 1; i < 4; ++i) {
        if (cand[i] < lo) lo = cand[i];
        if (cand[i] > hi) hi = cand[i];
    }
    // Pad by one ulp on both sides to stay conservative.
    BigFloat pad = (hi - lo).abs() * BigFloat(1e-70) + BigFloat(1e-95);
    return Interval(lo - pad, hi + pad);
}

Interval eval_bipoly_interval(const BiPoly& R, const Rat& t, const Interval& u) {
    Interval acc;
    for (int k = R.degree_u(); k >= 0; --k)
        acc = acc * u + Interval(R.coeff_u(k).eval(t));
    return acc;
}

std::vector<Rat> sample_parameters(const BiPoly& W, std::size_t want) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<Rat> out;
    const UniPoly& lead = W.u_coeffs().back();
    for (long p : primes) {
        if (out.size() >= want) break;
        Rat t(p);
        if (lead.eval(t) == 0) continue;
        out.push_back(t);
    }
    return out;
}

} // namespace

std::vector<MoebiusLikeFactor> moebius_like_factors(const BiPoly& R) {
    if (R.is_zero())
        throw DegenerateInput("radius condition vanishes identically (pipe surface); "
                              "use spine-curve invariants instead");
    std::vector<MoebiusLikeFactor> out;
    std::vector<Moebius> exact_found;
    BiPoly W = R;

    auto push_exact = [&](const Moebius& phi) {
        MoebiusLikeFactor f;
        f.certainty = MoebiusLikeFactor::Certainty::Exact;
        f.moebius = phi;
        f.bilinear = phi.to_bilinear();
        f.numeric = {BigFloat(phi.alpha()), BigFloat(phi.beta()),
                     BigFloat(phi.gamma()), BigFloat(phi.delta())};
        out.push_back(std::move(f));
        exact_found.push_back(phi);
    };

    // Closed-form candidates first; strip them (with multiplicity) so the
    // sampling stage only sees genuinely unknown content.
    const Moebius closed_forms[] = {Moebius::identity(), Moebius::negation(),
                                    Moebius::reciprocal(), Moebius::negated_reciprocal()};
    for (const Moebius& phi : closed_forms) {
        BiPoly F = phi.to_bilinear();
        bool found = false;
        while (auto q = bipoly_div_exact(W, F)) {
            W = *q;
            found = true;
        }
        if (found) push_exact(phi);
    }

    if (W.degree_u() < 1) return out;

    // Sampling stage.
    auto samples = sample_parameters(W, 6);
    std::vector<std::vector<BigFloat>> roots(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        UniPoly p = W.eval_t(samples[i]);
        if (p.is_zero() || p.degree() < 1) continue;
        for (auto& r : real_roots(p, rat_pow2(-kRootRefineBits)))
            roots[i].push_back(BigFloat(r.mid()));
    }

    std::vector<Quad> candidates;
    auto consider = [&](const Quad& q) {
        for (const auto& c : candidates)
            if (quad_distance(c, q) < kDedupTol) return;
        // A factor's graph must pass through an isolated root at every
        // pole-free sample.
        int matched = 0, poles = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            auto val = apply_quad(q, samples[i]);
            if (!val) { ++poles; continue; }
            bool hit = false;
            for (const auto& r : roots[i])
                if ((Interval::exact(r) - *val).mag().to_double() < 1e-40) { hit = true; break; }
            if (!hit) return;
            ++matched;
        }
        if (matched < 3) return;
        candidates.push_back(q);
    };

    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            for (std::size_t k = j + 1; k < samples.size(); ++k)
                for (const auto& ui : roots[i])
                    for (const auto& uj : roots[j])
                        for (const auto& uk : roots[k]) {
                            auto q = fit_moebius({std::pair{BigFloat(samples[i]), ui},
                                                  std::pair{BigFloat(samples[j]), uj},
                                                  std::pair{BigFloat(samples[k]), uk}});
                            if (q) consider(*q);
                        }

    const mpz_class max_den = mpz_class(1) << 60;
    for (const auto& q : candidates) {
        // Try to recognize the quadruple as exact rationals.
        bool rational = true;
        Rat rc[4];
        for (int i = 0; i < 4; ++i) {
            rc[i] = rational_reconstruct(q.v[i], max_den);
            if ((BigFloat(rc[i]) - q.v[i]).abs().to_double() > 1e-55) { rational = false; break; }
        }
        if (rational && rc[0] * rc[3] - rc[1] * rc[2] != 0) {
            Moebius phi(rc[0], rc[1], rc[2], rc[3]);
            if (std::find(exact_found.begin(), exact_found.end(), phi) != exact_found.end())
                continue;
            if (bipoly_divides(phi.to_bilinear(), R)) {
                push_exact(phi);
                continue;
            }
        }
        // Certify numerically at fresh sample points.
        double worst = 0;
        int checked = 0;
        bool ok = true;
        for (int j = 1; checked < kCertificationPoints && j < 4 * kCertificationPoints; ++j) {
            Rat t = Rat(j) + Rat(1, 7);
            auto val = apply_quad(q, t);
            if (!val) continue;
            double res = eval_bipoly_interval(R, t, *val).mag().to_double();
            worst = std::max(worst, res);
            ++checked;
            if (res >= kResidualThreshold) { ok = false; break; }
        }
        if (ok && checked == kCertificationPoints) {
            MoebiusLikeFactor f;
            f.certainty = MoebiusLikeFactor::Certainty::NumericallyCertified;
            f.numeric = {q.v[0], q.v[1], q.v[2], q.v[3]};
            f.residual_bound = worst;
            out.push_back(std::move(f));
        }
    }

    std::sort(out.begin(), out.end(), [](const MoebiusLikeFactor& a, const MoebiusLikeFactor& b) {
        if (a.is_exact() != b.is_exact()) return a.is_exact();
        for (int i = 0; i < 4; ++i) {
            double x = a.numeric[i].to_double(), y = b.numeric[i].to_double();
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

std::vector<Moebius> exact_moebius_factors(const BiPoly& R) {
    std::vector<Moebius> out;
    for (const auto& f : moebius_like_factors(R))
        if (f.is_exact()) out.push_back(*f.moebius);
    return out;
}

} // namespace canal
