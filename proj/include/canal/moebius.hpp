#ifndef CANAL_MOEBIUS_HPP
#define CANAL_MOEBIUS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "canal/bipoly.hpp"
#include "canal/mp.hpp"
#include "canal/ratfunc.hpp"

namespace canal {

// Möbius transformation t -> (alpha t + beta) / (gamma t + delta) with exact
// rational coefficients, alpha*delta - beta*gamma != 0.  Coefficients are
// stored projectively normalized: the first nonzero entry of
// (alpha, beta, gamma, delta) equals 1.
class Moebius {
public:
    Moebius() : a_(1), b_(0), c_(0), d_(1) {}
    Moebius(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& delta);

    static Moebius identity() { return Moebius(); }
    static Moebius negation() { return Moebius(Rat(-1), Rat(0), Rat(0), Rat(1)); }
    static Moebius reciprocal() { return Moebius(Rat(0), Rat(1), Rat(1), Rat(0)); }
    static Moebius negated_reciprocal() { return Moebius(Rat(0), Rat(-1), Rat(1), Rat(0)); }
    static Moebius affine(const Rat& a, const Rat& b) { return Moebius(a, b, Rat(0), Rat(1)); }
    static Moebius one_minus_t() { return Moebius(Rat(-1), Rat(1), Rat(0), Rat(1)); }

    const Rat& alpha() const { return a_; }
    const Rat& beta() const { return b_; }
    const Rat& gamma() const { return c_; }
    const Rat& delta() const { return d_; }

    bool is_identity() const { return *this == identity(); }
    bool has_pole_at(const Rat& t) const { return c_ * t + d_ == 0; }

    Rat apply(const Rat& t) const;
    RatFunc as_ratfunc() const;

    Moebius compose(const Moebius& inner) const;  // t -> (*this)(inner(t))
    Moebius inverse() const;

    // The bilinear polynomial u*(gamma t + delta) - (alpha t + beta), whose
    // zero set is the graph u = phi(t).  Irreducible by construction.
    BiPoly to_bilinear() const;

    bool operator==(const Moebius& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Moebius& o) const { return !(*this == o); }
    bool operator<(const Moebius& o) const;

    std::string to_string() const;

private:
    Rat a_, b_, c_, d_;
};

// A bilinear factor of a bivariate polynomial together with the Möbius
// transformation it encodes.  Rational factors are certified by exact
// division; factors with irrational (real algebraic) coefficients are kept in
// 256-bit precision and certified by interval residuals.
struct MoebiusLikeFactor {
    enum class Certainty { Exact, NumericallyCertified };

    Certainty certainty = Certainty::Exact;
    std::optional<Moebius> moebius;      // set iff Exact
    std::optional<BiPoly> bilinear;      // set iff Exact
    std::array<BigFloat, 4> numeric;     // coefficient quadruple, both cases
    double residual_bound = 0.0;         // certified bound, numeric case

    bool is_exact() const { return certainty == Certainty::Exact; }
};

// All Möbius-like factors of R.  Closed-form candidates u -+ t and ut -+ 1
// are tested by exact division first; the remaining content is sampled at
// small integer parameters, u-roots are isolated and matched across samples,
// and candidates are fitted by a homogeneous linear solve, deduplicated
// projectively, and certified (exactly when rational, by interval residuals
// otherwise).  Throws DegenerateInput when R is identically zero, which
// signals a pipe surface to the caller.
std::vector<MoebiusLikeFactor> moebius_like_factors(const BiPoly& R);

// Convenience: the exact Möbius transformations among the factors of R.
std::vector<Moebius> exact_moebius_factors(const BiPoly& R);

} // namespace canal

#endif
