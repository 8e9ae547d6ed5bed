#include "doctest.h"

#include "helpers.hpp"
#include "relpib/pell.hpp"

using namespace relpib;
using relpib::testing::random_param_c;

TEST_SUITE_BEGIN("pell");

TEST_CASE("admissible (mu, eps) pairs") {
    CHECK(admissible_mu_eps(RingSpec(7)).size() == 1);
    CHECK(admissible_mu_eps(RingSpec(1)).size() == 2);
    CHECK(admissible_mu_eps(RingSpec(3)).size() == 3);
    for (long D : {1L, 2L, 3L, 5L, 7L}) {
        for (const MuEps& me : admissible_mu_eps(RingSpec(D))) {
            CHECK(me.mu.is_unit());
            CHECK(me.eps.is_unit());
            CHECK(me.eps * me.eps == me.mu); // eps^2 = mu
        }
    }
}

TEST_CASE("sequence values") {
    RingSpec d1(1), d2(2);
    QuadInt one = QuadInt::one(d1);
    QuadInt c1 = QuadInt::one(d1);
    CHECK(u_seq(c1, one, 0) == one);
    CHECK(u_seq(c1, one, 1) == QuadInt::integer(d1, 3));
    CHECK(u_seq(c1, one, 2) == QuadInt::integer(d1, 11));
    CHECK(u_seq(c1, one, 3) == QuadInt::integer(d1, 41));

    std::mt19937_64 rng(43);
    QuadInt c = random_param_c(d2, rng);
    QuadInt e2 = QuadInt::one(d2);
    CHECK(u_seq(c, e2, 1) == c * 2 + 1);
    CHECK(uprime_seq(c, e2, 1) == c * 2 - 1);
    CHECK(uprime_seq(c, e2, 2) == c * c * 4 - c * 6 + 1); // (2c-2)(2c-1) - 1
    CHECK(v_seq(c, e2, 1) == c * 2 + 3);
    CHECK(z_seq(c, e2, 1) == c * 2 - 3);
}

TEST_CASE("Pell residuals on specific points") {
    RingSpec d1(1), d5(5);
    QuadInt one5 = QuadInt::one(d5);
    std::mt19937_64 rng(47);
    QuadInt c = random_param_c(d5, rng);
    CHECK(pell_residual_1(one5, one5, c, one5).is_zero());

    QuadInt i = unit_value(d1, UnitRoot::I);
    QuadInt m1 = QuadInt::integer(d1, -1);
    QuadInt c1 = QuadInt::from_parts(d1, 2, 1);
    CHECK(pell_residual_2(i, i, c1, m1).is_zero());
}

TEST_CASE("recurrences preserve both Pell equations") {
    std::mt19937_64 rng(53);
    for (long D : {1L, 2L, 3L, 5L, 7L, 11L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 6; ++rep) {
            QuadInt c = random_param_c(ring, rng, 4);
            for (const MuEps& me : admissible_mu_eps(ring)) {
                SeqState su = seq_start(SeqKind::UPlus, c, me.eps);
                SeqState sv = seq_start(SeqKind::VPlus, c, me.eps);
                SeqState sup = seq_start(SeqKind::UMinus, c, me.eps);
                SeqState sz = seq_start(SeqKind::ZMinus, c, me.eps);
                for (long k = 0; k <= 20; ++k) {
                    CHECK(pell_residual_1(su.current, sv.current, c, me.mu).is_zero());
                    CHECK(pell_residual_2(sup.current, sz.current, c, me.mu).is_zero());
                    su = seq_next(su, c);
                    sv = seq_next(sv, c);
                    sup = seq_next(sup, c);
                    sz = seq_next(sz, c);
                }
            }
        }
    }
}

TEST_CASE("congruence residues") {
    RingSpec d2(2);
    QuadInt one = QuadInt::one(d2);
    QuadInt c = QuadInt::from_parts(d2, 3, 1); // 3+sqrt(-2)
    CHECK(congruence_residue_u(0, c, one) == one);
    CHECK(congruence_residue_u(2, c, one) == c * 6 + 1); // 1+18+6sqrt(-2) as 1+6c
    CHECK(congruence_residue_u(2, c, one) == QuadInt::from_parts(d2, 19, 6));
    CHECK(congruence_residue_uprime(1, c, one) == c * 2 - 1);

    // residues really are the sequence values mod 4c^2
    std::mt19937_64 rng(59);
    for (long D : {1L, 2L, 3L, 5L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 4; ++rep) {
            QuadInt cc = random_param_c(ring, rng, 5);
            QuadInt mod = cc * cc * 4;
            for (const MuEps& me : admissible_mu_eps(ring)) {
                SeqState su = seq_start(SeqKind::UPlus, cc, me.eps);
                SeqState sup = seq_start(SeqKind::UMinus, cc, me.eps);
                for (long k = 0; k <= 30; ++k) {
                    CHECK(congruent(su.current, congruence_residue_u(k, cc, me.eps), mod));
                    CHECK(congruent(sup.current, congruence_residue_uprime(k, cc, me.eps), mod));
                    su = seq_next(su, cc);
                    sup = seq_next(sup, cc);
                }
            }
        }
    }
}

TEST_CASE("closed form agrees with the recurrence") {
    RingSpec d1(1), d5(5);
    QuadInt one1 = QuadInt::one(d1), one5 = QuadInt::one(d5);

    Complex m0 = closed_form_u(QuadInt::integer(d5, 3), one5, 0, 128);
    CHECK(m0.re().contains(mpq_class(1)));
    Complex m1 = closed_form_u(QuadInt::integer(d5, 3), one5, 1, 128);
    CHECK(m1.re().contains(mpq_class(7)));
    CHECK(m1.im().contains(mpq_class(0)));

    QuadInt c = QuadInt::from_parts(d1, 2, 1);
    for (long m = 0; m <= 15; ++m) {
        // overlap with the exact value is asserted inside
        CHECK_NOTHROW(closed_form_u(c, one1, m, 192));
        CHECK_NOTHROW(closed_form_uprime(c, one1, m, 192));
    }
    QuadInt i = unit_value(d1, UnitRoot::I);
    for (long m = 0; m <= 10; ++m)
        CHECK_NOTHROW(closed_form_u(c, i, m, 192));

    CHECK_THROWS_AS(closed_form_u(QuadInt::integer(d5, -3), one5, 2, 128), domain_error);
}

TEST_CASE("growth bounds") {
    RingSpec d5(5), d1(1), d3(3);
    CHECK(growth_bounds_check(QuadInt::integer(d5, 3), QuadInt::one(d5), SeqKind::UPlus, 10));
    CHECK(growth_bounds_check(QuadInt::integer(d5, 3), QuadInt::one(d5), SeqKind::UMinus, 10));
    CHECK(growth_bounds_check(QuadInt::integer(d1, 2), QuadInt::one(d1), SeqKind::UPlus, 10));
    // |c| = 2 exactly
    CHECK(growth_bounds_check(QuadInt::from_parts(d3, 1, 1), QuadInt::one(d3), SeqKind::UPlus, 8));
    CHECK(growth_bounds_check(QuadInt::from_parts(d3, 1, 1), QuadInt::one(d3), SeqKind::UMinus, 8));
    CHECK_THROWS_AS(
        growth_bounds_check(QuadInt::one(d5), QuadInt::one(d5), SeqKind::UPlus, 5),
        domain_error);
}

TEST_CASE("conjugate pair product is 1") {
    // |c+1+sqrt(c(c+2))| * |c+1-sqrt(c(c+2))| = 1
    RingSpec d2(2);
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        QuadInt c = random_param_c(d2, rng, 6);
        if (c.re_sign() < 0)
            c = -c;
        Complex cc = c.embed(192);
        Complex two = Complex::exact(2, 0, 192);
        Complex one = Complex::exact(1, 0, 192);
        Complex g = (cc * (cc + two)).sqrt();
        Real prod = (cc + one + g).abs() * (cc + one - g).abs();
        CHECK(prod.contains(mpq_class(1)));
    }
}

TEST_CASE("congruence lower bound on indices") {
    RingSpec d1(1), d5(5), d2(2);
    // |c| = 4: sqrt(8.25) - 0.5 in (2.372, 2.3723)
    Real b = min_nontrivial_index(QuadInt::integer(d5, 4));
    CHECK(b.certainly_gt(Real::of_rational(mpq_class(2372, 1000), 64)));
    CHECK(b.certainly_lt(Real::of_rational(mpq_class(23723, 10000), 64)));

    // |c| = sqrt(2): sqrt(2 sqrt 2 + 1/4) - 1/2 ~ 1.2539
    Real s = min_nontrivial_index(QuadInt::from_parts(d2, 0, 1));
    CHECK(s.certainly_gt(Real::of_rational(mpq_class(125, 100), 64)));
    CHECK(s.certainly_lt(Real::of_rational(mpq_class(126, 100), 64)));

    CHECK_THROWS_AS(min_nontrivial_index(QuadInt::one(d1)), inapplicable_error);
}

TEST_CASE("lower bound on |U|") {
    RingSpec d5(5), d1(1);
    // |c| = 8: 13^(sqrt(16.25) - 0.5) ~ 13^3.531
    Real lb = lower_bound_U(QuadInt::integer(d5, 8));
    Real lo = Real::pow(Real::exact(13L, 128), Real::of_rational(mpq_class(353, 100), 128));
    Real hi = Real::pow(Real::exact(13L, 128), Real::of_rational(mpq_class(354, 100), 128));
    CHECK(lb.certainly_gt(lo));
    CHECK(lb.certainly_lt(hi));

    // |c| = 2: base is 1, bound vacuous
    CHECK(lower_bound_U(QuadInt::integer(d1, 2)).contains(mpq_class(1)));

    // |c| = 159108: log10 of the bound exceeds 2800
    Real big = lower_bound_U(QuadInt::integer(d5, 159108));
    Real log10 = big.log() / Real::exact(10L, 128).log();
    CHECK(log10.certainly_gt(Real::exact(2800L, 128)));
}

TEST_SUITE_END();
