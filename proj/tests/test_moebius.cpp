#include <doctest.h>

#include <cmath>
#include <random>

#include "canal/errors.hpp"
#include "canal/moebius.hpp"

using namespace canal;

namespace {

std::mt19937_64 rng(0x5eed0002);

Moebius random_moebius() {
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        Rat a(d(rng)), b(d(rng)), c(d(rng)), e(d(rng));
        if (a * e - b * c != 0) return Moebius(a, b, c, e);
    }
}

BiPoly bilinear_of(const Moebius& m) { return m.to_bilinear(); }

bool contains_exact(const std::vector<MoebiusLikeFactor>& facs, const Moebius& phi) {
    for (const auto& f : facs)
        if (f.is_exact() && *f.moebius == phi) return true;
    return false;
}

} // namespace

TEST_SUITE_BEGIN("moebius");

TEST_CASE("apply, poles and named transformations") {
    CHECK(Moebius::reciprocal().apply(rat(2)) == rat(1, 2));
    CHECK(Moebius::negation().apply(rat(3)) == rat(-3));
    CHECK(Moebius::one_minus_t().apply(rat(1, 4)) == rat(3, 4));
    CHECK_THROWS_AS(Moebius::reciprocal().apply(rat(0)), PoleAtInput);
    CHECK_THROWS_AS(Moebius(rat(1), rat(2), rat(2), rat(4)), DegenerateInput);
}

TEST_CASE("group laws") {
    CHECK(Moebius::negation().compose(Moebius::negation()) == Moebius::identity());
    CHECK(Moebius::reciprocal().inverse() == Moebius::reciprocal());
    CHECK(Moebius::one_minus_t().compose(Moebius::one_minus_t()) == Moebius::identity());
    for (int i = 0; i < 25; ++i) {
        Moebius a = random_moebius(), b = random_moebius();
        CHECK(a.compose(a.inverse()) == Moebius::identity());
        // composition agrees with pointwise application
        Moebius ab = a.compose(b);
        for (long x : {2L, 3L, 7L}) {
            Rat t(x);
            if (b.has_pole_at(t)) continue;
            Rat inner = b.apply(t);
            if (a.has_pole_at(inner) || ab.has_pole_at(t)) continue;
            CHECK(ab.apply(t) == a.apply(inner));
        }
    }
}

TEST_CASE("projective normalization makes equality componentwise") {
    Moebius a(rat(2), rat(0), rat(0), rat(2));
    CHECK(a == Moebius::identity());
    Moebius b(rat(0), rat(-3), rat(-3), rat(0));
    CHECK(b == Moebius::reciprocal());
}

TEST_CASE("bilinear forms") {
    // identity -> u - t
    BiPoly f = bilinear_of(Moebius::identity());
    CHECK(f == BiPoly::from_monomials({{{0, 1}, rat(1)}, {{1, 0}, rat(-1)}}));
    // -1/t -> ut + 1 (up to the stored normalization scale)
    BiPoly g = bilinear_of(Moebius::negated_reciprocal());
    CHECK(bipoly_divides(g, BiPoly::from_monomials({{{1, 1}, rat(1)}, {{0, 0}, rat(1)}})));
    CHECK(bipoly_divides(BiPoly::from_monomials({{{1, 1}, rat(1)}, {{0, 0}, rat(1)}}), g));
    // (t+1)/(t-1) -> u(t-1) - (t+1)
    Moebius m(rat(1), rat(1), rat(1), rat(-1));
    CHECK(bilinear_of(m) ==
          BiPoly::from_monomials(
              {{{1, 1}, rat(1)}, {{0, 1}, rat(-1)}, {{1, 0}, rat(-1)}, {{0, 0}, rat(-1)}}));
}

TEST_CASE("factors of the crunode radius condition") {
    UniPoly A = UniPoly::monomial(2);
    UniPoly B({rat(1), rat(0), rat(0), rat(0), rat(1)});
    BiPoly R = BiPoly::separable_product(A * A, B * B) - BiPoly::separable_product(B * B, A * A);
    auto facs = moebius_like_factors(R);
    REQUIRE(facs.size() == 4);
    CHECK(contains_exact(facs, Moebius::identity()));
    CHECK(contains_exact(facs, Moebius::negation()));
    CHECK(contains_exact(facs, Moebius::reciprocal()));
    CHECK(contains_exact(facs, Moebius::negated_reciprocal()));
    for (const auto& f : facs) CHECK(bipoly_divides(*f.bilinear, R));
}

TEST_CASE("sampling stage finds affine factors beyond the closed forms") {
    // (u + t - 1)(u - t): the factor u = 1 - t requires the sampled fit.
    BiPoly F1 = Moebius::one_minus_t().to_bilinear();
    BiPoly F2 = Moebius::identity().to_bilinear();
    BiPoly R = F1 * F2;
    auto facs = moebius_like_factors(R);
    REQUIRE(facs.size() == 2);
    CHECK(contains_exact(facs, Moebius::identity()));
    CHECK(contains_exact(facs, Moebius::one_minus_t()));
}

TEST_CASE("degenerate input raises") {
    CHECK_THROWS_AS(moebius_like_factors(BiPoly()), DegenerateInput);
}

TEST_CASE("irrational factors are certified numerically") {
    // u^2 - 2 t^2 = (u - sqrt(2) t)(u + sqrt(2) t)
    BiPoly R = BiPoly::from_monomials({{{0, 2}, rat(1)}, {{2, 0}, rat(-2)}});
    auto facs = moebius_like_factors(R);
    REQUIRE(facs.size() == 2);
    int numeric = 0;
    for (const auto& f : facs) {
        CHECK(!f.is_exact());
        ++numeric;
        CHECK(f.residual_bound < 1e-30);
        // quadruple ~ (alpha, 0, 0, delta) with alpha/delta = +-sqrt(2)
        double slope = f.numeric[0].to_double() / f.numeric[3].to_double();
        CHECK(std::abs(std::abs(slope) - std::sqrt(2.0)) < 1e-12);
    }
    CHECK(numeric == 2);
}

TEST_CASE("near-factors are rejected") {
    // (u - t)(u + t) + tiny perturbation: no Moebius-like factor except none.
    BiPoly R = BiPoly::from_monomials(
        {{{0, 2}, rat(1)}, {{2, 0}, rat(-1)}, {{0, 0}, rat(1, 1000000)}});
    auto facs = moebius_like_factors(R);
    CHECK(facs.empty());
}

TEST_CASE("round trip: factors of to_bilinear(phi) * G contain phi") {
    const BiPoly pool[] = {
        BiPoly::from_monomials({{{0, 2}, rat(1)}, {{2, 0}, rat(1)}, {{0, 0}, rat(1)}}),
        BiPoly::from_monomials({{{2, 2}, rat(1)}, {{0, 0}, rat(1)}}),
        BiPoly::from_monomials({{{0, 2}, rat(1)}, {{4, 0}, rat(1)}, {{0, 0}, rat(2)}}),
    };
    for (int i = 0; i < 10; ++i) {
        Moebius phi = random_moebius();
        const BiPoly& G = pool[i % 3];
        BiPoly R = phi.to_bilinear() * G;
        auto facs = moebius_like_factors(R);
        CHECK(contains_exact(facs, phi));
        for (const auto& f : facs)
            if (f.is_exact()) CHECK(bipoly_divides(*f.bilinear, R));
    }
}

TEST_SUITE_END();
