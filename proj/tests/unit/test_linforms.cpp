#include "doctest.h"

#include "helpers.hpp"
#include "relpib/linforms.hpp"
#include "relpib/pell.hpp"

using namespace relpib;
using relpib::testing::random_param_c;

TEST_SUITE_BEGIN("linforms");

TEST_CASE("c normalization") {
    RingSpec d2(2), d5(5);
    auto [a, sa] = normalize_c(QuadInt::integer(d5, -3));
    CHECK(a == QuadInt::integer(d5, 3));
    CHECK(sa);
    QuadInt c = QuadInt::from_parts(d2, 3, 1);
    auto [b, sb] = normalize_c(c);
    CHECK(b == c);
    CHECK_FALSE(sb);
    QuadInt im = QuadInt::from_parts(d2, 0, 1);
    auto [d, sd] = normalize_c(im);
    CHECK(d == im); // Re = 0 kept
    CHECK_FALSE(sd);
}

TEST_CASE("linear form instance certifies eta, vartheta > 1") {
    std::mt19937_64 rng(67);
    for (long D : {1L, 2L, 3L, 5L, 7L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 12; ++rep) {
            QuadInt c = random_param_c(ring, rng, 8);
            if (c.re_sign() < 0)
                c = -c;
            if (c == QuadInt::one(ring) || c == QuadInt::integer(ring, -1))
                continue;
            LinFormInstance inst = make_linform_instance(c, 192);
            CHECK(inst.eta.certainly_gt(Real::exact(1L, 64)));
            CHECK(inst.vartheta.certainly_gt(Real::exact(1L, 64)));
            CHECK(inst.xi_const.certainly_positive());
        }
    }
    // the paper's showcase value
    RingSpec d2(2);
    LinFormInstance inst = make_linform_instance(QuadInt::from_parts(d2, 1, 66), 256);
    CHECK(inst.eta.certainly_gt(Real::of_rational(mpq_class(18668, 100), 64)));
    CHECK(inst.eta.certainly_lt(Real::of_rational(mpq_class(18669, 100), 64)));
    CHECK(inst.vartheta.certainly_gt(Real::of_rational(mpq_class(18672, 100), 64)));
}

TEST_CASE("P and Q magnitudes in the working regime") {
    std::mt19937_64 rng(71);
    Real sixteen = Real::exact(16L, 64), nine = Real::exact(9L, 64);
    for (long D : {1L, 2L, 3L, 5L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 10; ++rep) {
            QuadInt c = random_param_c(ring, rng, 8);
            if (c.re_sign() < 0)
                c = -c;
            if (c.norm() < 4) // |c| >= 2 regime here
                continue;
            if (c == QuadInt::integer(ring, 1))
                continue;
            CHECK(build_P(c, 2, 192).abs().certainly_ge(sixteen));
            CHECK(build_Q(c, 2, 192).abs().certainly_ge(nine));
        }
    }
    // the T elements (sqrt(2) <= |c| < 2) keep |P| >= 16, |Q| >= 9 too
    RingSpec d2(2), d7(7);
    for (QuadInt c : {QuadInt(d2, 0, 2), QuadInt(d2, 2, 2)}) {
        CHECK(build_P(c, 2, 256).abs().certainly_ge(sixteen));
        CHECK(build_Q(c, 2, 256).abs().certainly_ge(nine));
    }
    CHECK(build_P(QuadInt(d7, 1, 1), 2, 256).abs().certainly_ge(sixteen));
    CHECK(build_Q(QuadInt(d7, 1, 1), 2, 256).abs().certainly_ge(nine));
}

TEST_CASE("P- and Q-reconstruction of the sequences") {
    // settles the closed-form coefficient: u_m = (eps/2 sqrt c)(P + (2c/(c+2)) P^-1)
    std::mt19937_64 rng(73);
    for (long D : {1L, 2L, 3L, 5L, 7L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 6; ++rep) {
            QuadInt c = random_param_c(ring, rng, 6);
            if (c.re_sign() < 0)
                c = -c;
            if (c == QuadInt::one(ring))
                continue;
            for (const MuEps& me : admissible_mu_eps(ring)) {
                for (long m = 0; m <= 10; m += 2) {
                    CHECK_NOTHROW(reconstruct_u_from_P(c, me.eps, m, 256));
                    CHECK_NOTHROW(reconstruct_uprime_from_Q(c, me.eps, m, 256));
                }
            }
        }
    }
}

TEST_CASE("Lambda value and its two expressions") {
    RingSpec d2(2);
    QuadInt c = QuadInt::from_parts(d2, 1, 66);
    // m = n = 0: Lambda = log xi_const
    Real l0 = lambda_value(c, 0, 0, 256);
    LinFormInstance inst = make_linform_instance(c, 256);
    CHECK(l0.overlaps(inst.xi_const.log()));

    // theta = log vartheta / log eta < 1.000044 for c = 1+66 sqrt(-2)
    Real theta = inst.vartheta.log() / inst.eta.log();
    CHECK(theta.certainly_lt(Real::of_rational(mpq_class(1000044, 1000000), 64)));
    CHECK(theta.certainly_gt(Real::exact(1L, 64)));

    // internal consistency assertion runs on every call
    for (long m : {2L, 5L})
        for (long n : {2L, 7L})
            CHECK_NOTHROW(lambda_value(c, m, n, 256));
}

TEST_CASE("Lambda upper bounds") {
    RingSpec d5(5);
    QuadInt c = QuadInt::integer(d5, 3);
    auto [bm, bn] = lambda_upper_bounds(c, 2, 3);
    CHECK(bm.contains(mpq_class(1, 9)));
    mpq_class q155(20, 31);
    CHECK(bn.contains(q155 * q155 * q155));
    auto [b10, b0] = lambda_upper_bounds(c, 10, 0);
    CHECK(b10.contains(mpq_class(1, 59049)));
    CHECK(b0.contains(mpq_class(1)));
}

TEST_CASE("Lambda nonvanishing criterion") {
    RingSpec d2(2), d1(1);
    CHECK(lambda_nonzero(QuadInt::from_parts(d2, 3, 1)) == LambdaStatus::NonzeroCertified);
    CHECK(lambda_nonzero(QuadInt::from_parts(d1, 0, 5)) == LambdaStatus::ZeroPossible_ReZero);
    CHECK_THROWS_AS(lambda_nonzero(QuadInt::one(d1)), inapplicable_error);
}

TEST_CASE("index one exclusion") {
    RingSpec d5(5), d1(1), d2(2);
    CHECK(exclude_index_one(QuadInt::integer(d5, 3), 192));
    CHECK(exclude_index_one(QuadInt::from_parts(d1, 1, 1), 192));
    CHECK(exclude_index_one(QuadInt::from_parts(d2, 0, 1), 192));
    // 2c+1 = +-(2c-1) is impossible: exercised inside; domain check:
    CHECK_THROWS_AS(exclude_index_one(QuadInt::integer(d5, -3), 192), domain_error);
}

TEST_CASE("global Baker-Wustholz bounds") {
    BwBounds bw = bw_global_bounds(256);
    mpz_class m_expect("6700000000000000000000000000000000000");  // 6.7e36
    mpz_class n_expect("17150000000000000000000000000000000000"); // 1.715e37
    CHECK(bw.m_max == m_expect);
    CHECK(bw.n_max == n_expect);
    mpz_class cap("86000000000000000000000000000000000"); // 8.6e34
    CHECK(bw.bw_constant.certainly_lt(Real::exact(cap, 256)));
}

TEST_CASE("height bounds under the uniform caps") {
    RingSpec d5(5), d2(2);
    Real cap1 = Real::of_rational(mpq_class(2812, 100), 128);
    Real cap3 = Real::of_rational(mpq_class(27182, 100), 128);
    for (QuadInt c : {QuadInt::integer(d5, 200), QuadInt::from_parts(d2, 1, 66),
                      QuadInt::from_parts(d2, 0, 1)}) {
        auto [h_eta, h_th, h_xi] = height_bounds(c, 192);
        CHECK(h_eta.certainly_lt(cap1));
        CHECK(h_th.certainly_lt(cap1));
        CHECK(h_xi.certainly_lt(cap3));
    }
    // |c| = 200: h(eta) bound is log(8 * 323206) ~ 14.765
    auto [h200, unused, hxi200] = height_bounds(QuadInt::integer(d5, 200), 192);
    CHECK(h200.certainly_gt(Real::of_rational(mpq_class(1476, 100), 64)));
    CHECK(h200.certainly_lt(Real::of_rational(mpq_class(1477, 100), 64)));
    (void)unused;
    (void)hxi200;
}

TEST_CASE("P differs from +-Q away from the exceptional set") {
    // P = +-Q would force P^2 = 2c/(c^2-4); but |P|^2 >= 256 while
    // |2c/(c^2-4)| stays below 5 over the working regime.
    std::mt19937_64 rng(131);
    Real bound256 = Real::exact(256L, 64);
    for (long D : {1L, 2L, 5L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 8; ++rep) {
            QuadInt c = relpib::testing::random_param_c(ring, rng, 8);
            if (c.re_sign() < 0)
                c = -c;
            if (c.norm() < 4)
                continue;
            Complex cc = c.embed(192);
            Complex two = Complex::exact(2, 0, 192);
            Real rhs = (two * cc / (cc * cc - two * two)).abs();
            Real p2 = build_P(c, 2, 192).abs_sq();
            CHECK(p2.certainly_ge(bound256));
            CHECK(rhs.certainly_lt(p2));
        }
    }
}

TEST_CASE("|P| and |Q| stay within 1.24 on synthetic near-intersections") {
    // Solve the intersection identity P + Q = (2c/(c-2)) Q^-1 + (2c/(c+2)) P^-1
    // for Q given a real P, then certify | |P| - |Q| | <= |P + Q| < 1.24.
    std::mt19937_64 rng(137);
    Real cap = Real::of_rational(mpq_class(124, 100), 64);
    Real nine = Real::exact(9L, 64);
    int validated = 0;
    for (long D : {1L, 2L, 5L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 12 && validated < 12; ++rep) {
            QuadInt c = relpib::testing::random_param_c(ring, rng, 8);
            if (c.re_sign() < 0)
                c = -c;
            if (c.norm() < 4)
                continue;
            mpfr_prec_t prec = 256;
            Complex cc = c.embed(prec);
            Complex two = Complex::exact(2, 0, prec);
            Complex four = Complex::exact(4, 0, prec);
            for (long m : {2L, 3L}) {
                Complex P = build_P(c, m, prec);
                Complex b = P - (two * cc / (cc + two)) / P;
                Complex disc = b * b + four * (two * cc / (cc - two));
                Complex root = disc.sqrt();
                // larger-magnitude quadratic root: Q^2 + bQ - 2c/(c-2) = 0
                Complex q1v = (-b + root) / two;
                Complex q2v = (-b - root) / two;
                Complex Q = q1v.abs().certainly_gt(q2v.abs()) ? q1v : q2v;
                // identity residual vanishes by construction
                Complex resid = P + Q - (two * cc / (cc - two)) / Q - (two * cc / (cc + two)) / P;
                CHECK(resid.contains_zero());
                if (!Q.abs().certainly_ge(nine))
                    continue;
                Real gap = (P.abs() - Q.abs()).abs();
                CHECK(gap.certainly_lt(cap));
                ++validated;
            }
        }
    }
    CHECK(validated >= 8);
}

TEST_CASE("the |c/(c-2)| <= 5 constant re-certified per c") {
    std::mt19937_64 rng(79);
    Real five = Real::exact(5L, 64), one = Real::exact(1L, 64);
    for (long D : {1L, 2L, 3L, 5L}) {
        RingSpec ring(D);
        for (int rep = 0; rep < 20; ++rep) {
            QuadInt c = random_param_c(ring, rng, 10);
            if (c.re_sign() < 0)
                c = -c;
            Complex cc = c.embed(128);
            Complex two = Complex::exact(2, 0, 128);
            Real r1 = (cc / (cc - two)).abs();
            Real r2 = (cc / (cc + two)).abs();
            CHECK(r1.certainly_le(five));
            CHECK(r2.certainly_le(one));
        }
    }
}

TEST_SUITE_END();
