#include <doctest.h>

#include <random>

#include "canal/bipoly.hpp"
#include "canal/errors.hpp"
#include "canal/ratfunc.hpp"
#include "canal/roots.hpp"

using namespace canal;

namespace {

std::mt19937_64 rng(0x5eed0001);

Rat random_rat(long lo = -5, long hi = 5, long max_den = 4) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
    return rat(num(rng), den(rng));
}

UniPoly random_poly(int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rat());
    return UniPoly(std::move(c));
}

UniPoly random_nonzero_poly(int max_deg) {
    for (;;) {
        UniPoly p = random_poly(max_deg);
        if (!p.is_zero()) return p;
    }
}

BiPoly bilinear(const Rat& c_ut, const Rat& c_t, const Rat& c_u, const Rat& c_1) {
    std::map<std::pair<int, int>, Rat> m;
    m[{1, 1}] = c_ut;
    m[{1, 0}] = c_t;
    m[{0, 1}] = c_u;
    m[{0, 0}] = c_1;
    return BiPoly::from_monomials(m);
}

BiPoly u_minus_t() { return bilinear(rat(0), rat(-1), rat(1), rat(0)); }

// A^2(t) B^2(u) - A^2(u) B^2(t)
BiPoly square_condition(const UniPoly& A, const UniPoly& B) {
    return BiPoly::separable_product(A * A, B * B) - BiPoly::separable_product(B * B, A * A);
}

} // namespace

TEST_SUITE_BEGIN("ratpoly");

TEST_CASE("rational literals parse and print") {
    CHECK(rat_from_string("3/6") == rat(1, 2));
    CHECK(rat_from_string("-14") == rat(-14));
    CHECK(rat_to_string(rat(-3, 9)) == "-1/3");
    CHECK_THROWS_AS(rat_from_string("1/0"), DivisionByZero);
    CHECK_THROWS_AS(rat_from_string("a/2"), InvalidParams);
    CHECK(rat_sqrt(rat(9, 4)).value() == rat(3, 2));
    CHECK(!rat_sqrt(rat(2)).has_value());
    CHECK(!rat_sqrt(rat(-4)).has_value());
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly p({rat(-1), rat(0), rat(1)});  // t^2 - 1
    UniPoly d({rat(1), rat(1)});           // t + 1
    auto [q, r] = p.divrem(d);
    CHECK(q == UniPoly({rat(-1), rat(1)}));
    CHECK(r.is_zero());
    CHECK(p.eval(rat(3)) == rat(8));

    for (int i = 0; i < 30; ++i) {
        UniPoly a = random_poly(6), b = random_nonzero_poly(4);
        auto [qq, rr] = a.divrem(b);
        CHECK(qq * b + rr == a);
        CHECK((rr.is_zero() || rr.degree() < b.degree()));
    }
}

TEST_CASE("unipoly gcd and squarefree decomposition") {
    UniPoly f = UniPoly({rat(-1), rat(1)});  // t - 1
    UniPoly g = UniPoly({rat(2), rat(1)});   // t + 2
    UniPoly p = f * f * g;
    CHECK(gcd(p, p.derivative()) == f.monic());
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == g.monic());
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == f.monic());
    CHECK(sf[1].second == 2);

    for (int i = 0; i < 20; ++i) {
        UniPoly a = random_nonzero_poly(5), b = random_nonzero_poly(5);
        UniPoly h = gcd(a, b);
        CHECK(h.divides(a));
        CHECK(h.divides(b));
    }
}

TEST_CASE("normalize_ratfunc reduces and makes the denominator monic") {
    // common factor t
    RatFunc r1(UniPoly({rat(0), rat(1), rat(1)}), UniPoly({rat(0), rat(1)}));
    CHECK(r1.num() == UniPoly({rat(1), rat(1)}));
    CHECK(r1.den() == UniPoly({rat(1)}));

    // monic normalization
    RatFunc r2(UniPoly({rat(0), rat(2)}), UniPoly({rat(4)}));
    CHECK(r2.num() == UniPoly({rat(0), rat(1, 2)}));
    CHECK(r2.den() == UniPoly({rat(1)}));

    // ellipse-pair radius at c=0, f=3, built symbolically, stays reduced
    RatFunc one_minus(UniPoly({rat(1), rat(0), rat(-1)}), UniPoly({rat(1), rat(0), rat(1)}));
    RatFunc r3 = RatFunc(rat(0)) - rat(3) * one_minus;
    CHECK(r3.num() == UniPoly({rat(-3), rat(0), rat(3)}));
    CHECK(r3.den() == UniPoly({rat(1), rat(0), rat(1)}));

    CHECK_THROWS_AS(RatFunc(UniPoly({rat(1)}), UniPoly()), DivisionByZero);
}

TEST_CASE("normalized rational functions agree with raw quotients at random points") {
    for (int i = 0; i < 20; ++i) {
        UniPoly a = random_poly(5), b = random_nonzero_poly(5);
        RatFunc f(a, b);
        for (int j = 0; j < 20; ++j) {
            Rat x = random_rat(-8, 8, 5);
            if (b.eval(x) == 0) continue;
            CHECK(f.defined_at(x));
            CHECK(f.eval(x) == a.eval(x) / b.eval(x));
        }
    }
}

TEST_CASE("ratfunc composition is exact substitution") {
    RatFunc r(UniPoly::monomial(2), UniPoly({rat(1), rat(0), rat(0), rat(0), rat(1)}));
    RatFunc inv(UniPoly({rat(1)}), UniPoly({rat(0), rat(1)}));  // 1/t
    RatFunc c = r.compose(inv);
    for (long k : {2L, 3L, 5L, -7L}) {
        Rat x(k);
        CHECK(c.eval(x) == r.eval(inv.eval(x)));
    }
    CHECK(r.compose(RatFunc::t()) == r);
}

TEST_CASE("bipoly arithmetic, evaluation and divisibility") {
    // crunode radius condition: A = t^2, B = t^4 + 1
    UniPoly A = UniPoly::monomial(2);
    UniPoly B({rat(1), rat(0), rat(0), rat(0), rat(1)});
    BiPoly R = square_condition(A, B);

    CHECK(bipoly_divides(u_minus_t(), R));
    CHECK(!bipoly_divides(bilinear(rat(0), rat(-2), rat(1), rat(0)), R));  // u - 2t

    // known full factorization of the crunode condition polynomial
    BiPoly u_plus_t = bilinear(rat(0), rat(1), rat(1), rat(0));
    BiPoly ut_minus_1 = bilinear(rat(1), rat(0), rat(0), rat(-1));
    BiPoly ut_plus_1 = bilinear(rat(1), rat(0), rat(0), rat(1));
    BiPoly u2t2_plus_1 = BiPoly::from_monomials({{{2, 2}, rat(1)}, {{0, 0}, rat(1)}});
    BiPoly u2_plus_t2 = BiPoly::from_monomials({{{0, 2}, rat(1)}, {{2, 0}, rat(1)}});
    BiPoly prod = u_minus_t() * u_plus_t * ut_minus_1 * ut_plus_1 * u2t2_plus_1 * u2_plus_t2;
    CHECK(R == prod);

    // exact division composes: R = F * G * (R / (F*G))
    auto q = bipoly_div_exact(R, u_minus_t());
    REQUIRE(q.has_value());
    CHECK(*q * u_minus_t() == R);
    auto q2 = bipoly_div_exact(*q, u_plus_t);
    REQUIRE(q2.has_value());
    CHECK(*q2 * u_plus_t * u_minus_t() == R);

    CHECK(R.eval(rat(2), rat(2)) == rat(0));
    CHECK(R.eval(rat(2), rat(1, 2)) == rat(0));
    CHECK(R.eval(rat(2), rat(3)) != rat(0));
    CHECK(R.swapped_vars() == -R);
}

TEST_CASE("u - t divides every equal-pair square condition") {
    for (int i = 0; i < 12; ++i) {
        UniPoly A = random_nonzero_poly(3);
        UniPoly B = random_nonzero_poly(3);
        BiPoly R = square_condition(A, B);
        if (R.is_zero()) continue;
        CHECK(bipoly_divides(u_minus_t(), R));
    }
}

TEST_CASE("real root isolation") {
    // t^2 - 2: symmetric irrational pair
    UniPoly p({rat(-2), rat(0), rat(1)});
    Rat w = rat_pow2(-30);
    auto roots = real_roots(p, w);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].width() <= w);
    CHECK(roots[1].width() <= w);
    CHECK(roots[0].approx() == doctest::Approx(-1.4142135623).epsilon(1e-8));
    CHECK(roots[1].approx() == doctest::Approx(1.4142135623).epsilon(1e-8));

    // t^2 + 1: no real roots
    CHECK(real_roots(UniPoly({rat(1), rat(0), rat(1)})).empty());

    // derivative numerator of the ellipse-pair radius at f=3: 12t
    RatFunc r(UniPoly({rat(-3), rat(0), rat(3)}), UniPoly({rat(1), rat(0), rat(1)}));
    UniPoly dnum = r.derivative().num();
    CHECK(dnum == UniPoly({rat(0), rat(12)}));
    auto droots = real_roots(dnum);
    REQUIRE(droots.size() == 1);
    CHECK(droots[0].is_exact());
    CHECK(droots[0].lo == rat(0));

    CHECK_THROWS_AS(real_roots(UniPoly()), DegenerateInput);
}

TEST_CASE("root isolation carries multiplicity and separates roots") {
    UniPoly f({rat(-1), rat(1)});  // t - 1
    UniPoly g({rat(2), rat(1)});   // t + 2
    UniPoly p = f * f * g;
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].lo == rat(-2));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].lo == rat(1));
    CHECK(roots[1].multiplicity == 2);

    // Random simple-root products: count matches, sign changes across each
    // interval, and intervals are pairwise disjoint.
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> nd(1, 4);
        int n = nd(rng);
        UniPoly prod = UniPoly::constant(rat(1));
        std::vector<Rat> expected;
        for (int i = 0; i < n; ++i) {
            Rat root = rat(3 * i, 1) + rat(trial, 7);
            expected.push_back(root);
            prod = prod * UniPoly({-root, rat(1)});
        }
        auto rts = real_roots(prod);
        REQUIRE(rts.size() == expected.size());
        for (std::size_t i = 0; i < rts.size(); ++i) {
            CHECK(rts[i].lo <= expected[i]);
            CHECK(rts[i].hi >= expected[i]);
            if (!rts[i].is_exact())
                CHECK(rat_sign(prod.eval(rts[i].lo)) * rat_sign(prod.eval(rts[i].hi)) < 0);
            if (i > 0) CHECK(rts[i - 1].hi < rts[i].lo);
        }
    }
}

TEST_CASE("interval root queries") {
    UniPoly p({rat(-2), rat(0), rat(1)});  // roots at +-sqrt(2)
    CHECK(has_root_in(p, rat(1), rat(2)));
    CHECK(!has_root_in(p, rat(2), rat(3)));
    CHECK(has_root_in(p, rat(-2), rat(0)));
}

TEST_SUITE_END();
