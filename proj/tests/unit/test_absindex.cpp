#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "relpib/absindex.hpp"

using namespace relpib;
using relpib::testing::random_param_c;

TEST_SUITE_BEGIN("absindex");

namespace {

OrderElement oe(RingSpec ring, long a, long x, long y, long z) {
    return OrderElement{QuadInt::integer(ring, a), QuadInt::integer(ring, x),
                        QuadInt::integer(ring, y), QuadInt::integer(ring, z)};
}

} // namespace

TEST_CASE("multiplication modulo f") {
    RingSpec d2(2);
    std::mt19937_64 rng(97);
    QuadInt c = random_param_c(d2, rng, 5);
    QuarticParams params(c);

    // xi * xi^3 = 2c xi^3 - 2 xi^2 - 2c xi - 1
    OrderElement xi = oe(d2, 0, 1, 0, 0), xi3 = oe(d2, 0, 0, 0, 1);
    OrderElement got = mul_mod_f(xi, xi3, params);
    CHECK(got.a == QuadInt::integer(d2, -1));
    CHECK(got.x == -(c * 2));
    CHECK(got.y == QuadInt::integer(d2, -2));
    CHECK(got.z == c * 2);

    // 1 * v = v, xi * xi = xi^2
    OrderElement v{QuadInt::integer(d2, 3), c, c * c, QuadInt::integer(d2, -5)};
    OrderElement one = oe(d2, 1, 0, 0, 0);
    OrderElement idv = mul_mod_f(one, v, params);
    CHECK(idv.a == v.a);
    CHECK(idv.x == v.x);
    CHECK(idv.y == v.y);
    CHECK(idv.z == v.z);
    OrderElement sq = mul_mod_f(xi, xi, params);
    CHECK(sq.y == QuadInt::one(d2));
    CHECK(sq.a.is_zero());
}

TEST_CASE("characteristic polynomial") {
    std::mt19937_64 rng(101);
    // char poly of xi is f itself, for many (D, c)
    for (long D : {1L, 2L, 5L, 6L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 50; ++rep) {
            QuadInt c = random_param_c(ring, rng, 8);
            QuarticParams params(c);
            QuadIntPoly g = char_poly(oe(ring, 0, 1, 0, 0), params);
            CHECK(g.coeff[0] == QuadInt::one(ring));
            CHECK(g.coeff[1] == c * 2);
            CHECK(g.coeff[2] == QuadInt::integer(ring, 2));
            CHECK(g.coeff[3] == -(c * 2));
            CHECK(g.coeff[4] == QuadInt::one(ring));
        }
    }

    // constant alpha = A: (t - A)^4
    RingSpec d2(2);
    QuadInt c = QuadInt::from_parts(d2, 3, 0);
    QuarticParams params(c);
    QuadInt A = QuadInt::from_parts(d2, 1, 2);
    OrderElement ca{A, QuadInt::zero(d2), QuadInt::zero(d2), QuadInt::zero(d2)};
    QuadIntPoly g = char_poly(ca, params);
    CHECK(g.coeff[3] == -(A * 4));
    CHECK(g.coeff[2] == A * A * 6);
    CHECK(g.coeff[1] == -(A * A * A * 4));
    CHECK(g.coeff[0] == A * A * A * A);

    // second generator: monic quartic whose constant term is the relative norm
    OrderElement a2{QuadInt::zero(d2), QuadInt::integer(d2, 2), -(c * 2), QuadInt::one(d2)};
    QuadIntPoly g2 = char_poly(a2, params);
    CHECK(g2.is_monic());
    CHECK(g2.degree() == 4);
    // cross-check numerically on a nondegenerate tuple (b != 0 keeps the
    // conjugate distinct even for rational c)
    Real prod = conjugate_product_numeric(2, 3, 0, 2, QuadInt::one(d2), Alpha0::SecondGen, 192);
    CHECK(prod.certainly_positive());

    // rational c with b = 0 makes both conjugate root sets coincide: the
    // product degenerates to zero exactly
    Real zero_prod = conjugate_product_numeric(2, 3, 0, 0, QuadInt::one(d2), Alpha0::SecondGen, 192);
    CHECK(zero_prod.contains(mpq_class(0)));
}

TEST_CASE("coefficient-wise conjugation") {
    RingSpec d2(2);
    QuadInt c = QuadInt::from_parts(d2, 1, 1);
    QuarticParams params(c);
    QuadIntPoly f = char_poly(oe(d2, 0, 1, 0, 0), params);
    QuadIntPoly fc = conj_poly(f);
    CHECK(fc.coeff[1] == c.conj() * 2);
    CHECK(conj_poly(fc) == f);

    QuarticParams pr(QuadInt::integer(d2, 3));
    QuadIntPoly fr = char_poly(oe(d2, 0, 1, 0, 0), pr);
    CHECK(conj_poly(fr) == fr);
}

TEST_CASE("resultants") {
    RingSpec d2(2);
    std::mt19937_64 rng(103);
    // Res(t - a, t - b) = a - b
    QuadInt a = QuadInt::from_parts(d2, 2, 1), b = QuadInt::from_parts(d2, -1, 3);
    QuadIntPoly pa{{-a, QuadInt::one(d2)}};
    QuadIntPoly pb{{-b, QuadInt::one(d2)}};
    CHECK(resultant(pa, pb) == a - b);

    QuadInt c = QuadInt::from_parts(d2, 1, 1);
    QuarticParams params(c);
    QuadIntPoly f = char_poly(oe(d2, 0, 1, 0, 0), params);
    CHECK(resultant(f, f).is_zero());

    QuadInt r = resultant(f, conj_poly(f));
    CHECK(r.is_rational());

    // non-monic input violates the contract
    QuadIntPoly bad{{a, a * 2}};
    CHECK_THROWS_AS(resultant(bad, pa), domain_error);
}

TEST_CASE("divisibility verdicts") {
    RingSpec d2(2), d5(5), d1(1);

    AbsIndexVerdict v1 = j_alpha_divisibility(2, 1, 1, 0, QuadInt::one(d2), Alpha0::Xi);
    CHECK(v1.divisible_4096D2); // 4096 * 4 | R
    CHECK(v1.divisible_256);
    CHECK(v1.R % (4096 * 4) == 0);

    AbsIndexVerdict v2 =
        j_alpha_divisibility(5, 3, 0, 2, QuadInt::integer(d5, -1), Alpha0::SecondGen);
    CHECK(v2.divisible_4096D2);
    CHECK(v2.divisible_256);
    CHECK(v2.J % 256 == 0);

    AbsIndexVerdict v3 =
        j_alpha_divisibility(1, 2, 1, 1, unit_value(d1, UnitRoot::I), Alpha0::Xi);
    CHECK(v3.divisible_4096D2);
    CHECK(v3.divisible_256);

    // -D = 1 (mod 4) is out of scope
    RingSpec d3(3);
    CHECK_THROWS_AS(j_alpha_divisibility(3, 1, 1, 0, QuadInt::one(d3), Alpha0::Xi),
                    inapplicable_error);
    // c = 0 and c = +-2 rejected
    CHECK_THROWS_AS(j_alpha_divisibility(2, 2, 0, 1, QuadInt::one(d2), Alpha0::Xi),
                    domain_error);
}

TEST_CASE("sampled divisibility sweep") {
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<long> small(-4, 4);
    int done = 0;
    for (long D : {2L, 5L, 6L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 8; ++rep) {
            long p = small(rng), q = small(rng), b = small(rng);
            if (q == 0 && (p == 0 || p == 2 || p == -2))
                continue;
            for (Alpha0 a0 : {Alpha0::Xi, Alpha0::SecondGen}) {
                AbsIndexVerdict v =
                    j_alpha_divisibility(D, p, q, b, QuadInt::integer(ring, 1), a0);
                CHECK(v.divisible_4096D2);
                CHECK(v.divisible_256);
                ++done;
            }
        }
    }
    CHECK(done >= 30);
}

TEST_CASE("conjugate product does not depend on the constant part") {
    // shift alpha by a rational integer: Res(g, conj g) unchanged
    RingSpec d2(2);
    QuadInt c = QuadInt::from_parts(d2, 1, 1);
    QuarticParams params(c);
    QuadInt eps = QuadInt::one(d2);
    QuadInt A = QuadInt::from_parts(d2, 0, 2); // b = 2, a = 0
    OrderElement base{A, eps, QuadInt::zero(d2), QuadInt::zero(d2)};
    OrderElement shifted{A + 5, eps, QuadInt::zero(d2), QuadInt::zero(d2)};
    QuadInt r0 = resultant(char_poly(base, params), conj_poly(char_poly(base, params)));
    QuadInt r5 = resultant(char_poly(shifted, params), conj_poly(char_poly(shifted, params)));
    CHECK(r0 == r5);
}

TEST_CASE("numeric conjugate product matches the exact resultant") {
    for (auto [D, p, q, b] : {std::array<long, 4>{2, 1, 1, 0}, std::array<long, 4>{5, 3, 0, 2},
                              std::array<long, 4>{6, 1, 1, 1}}) {
        RingSpec ring(D);
        AbsIndexVerdict v = j_alpha_divisibility(D, p, q, b, QuadInt::one(ring), Alpha0::Xi);
        Real numeric = conjugate_product_numeric(D, p, q, b, QuadInt::one(ring), Alpha0::Xi, 256);
        CHECK(numeric.contains(mpq_class(abs(v.R))));
    }
}

TEST_SUITE_END();
