#include "doctest.h"

#include "relpib/bennett.hpp"
#include "relpib/pell.hpp"

using namespace relpib;

TEST_SUITE_BEGIN("bennett");

TEST_CASE("parameter arithmetic") {
    BennettReport r15 = bennett_params(Real::exact(15L, 256));
    CHECK(r15.theorem_applicable);
    CHECK(r15.L.contains(mpq_class(27 * 169, 4096))); // (27/4096) * 13^2

    // L <= 1 for |c| = 10: theorem flagged inapplicable
    BennettReport r10 = bennett_params(Real::exact(10L, 256));
    CHECK_FALSE(r10.theorem_applicable);

    CHECK_THROWS_AS(bennett_params(Real::exact(2L, 128)), domain_error);
    CHECK_THROWS_AS(bennett_params(Real::exact(1L, 128)), domain_error);

    // the 2 - lambda sign flips between 155351 and 155352
    BennettReport a = bennett_params(Real::exact(155351L, 256));
    BennettReport b = bennett_params(Real::exact(155352L, 256));
    CHECK_FALSE(a.two_minus_lambda_positive);
    CHECK(b.two_minus_lambda_positive);
    CHECK((Real::exact(2L, 256) - a.lambda).certainly_negative());
    CHECK((Real::exact(2L, 256) - b.lambda).certainly_positive());
}

TEST_CASE("2 - lambda grows toward 1/2") {
    Real prev(256);
    bool have = false;
    for (long t : {16L, 100L, 10000L, 1000000L, 100000000L}) {
        BennettReport r = bennett_params(Real::exact(t, 256));
        Real f = Real::exact(2L, 256) - r.lambda;
        if (have)
            CHECK(prev.certainly_lt(f));
        prev = f;
        have = true;
    }
    CHECK(prev.certainly_lt(Real::of_rational(mpq_class(1, 2), 256)));
}

TEST_CASE("approximation quality bound") {
    // |c| = 4, |U| = 1: 2/sqrt(8) ~ 0.70710
    Real b1 = approximation_bound(Real::exact(4L, 128), Real::exact(1L, 128));
    CHECK(b1.certainly_gt(Real::of_rational(mpq_class(7071, 10000), 128)));
    CHECK(b1.certainly_lt(Real::of_rational(mpq_class(7072, 10000), 128)));

    // |c| = 3, |U| = 10: 2/(sqrt(3) * 100) ~ 0.011547
    Real b2 = approximation_bound(Real::exact(3L, 128), Real::exact(10L, 128));
    CHECK(b2.certainly_gt(Real::of_rational(mpq_class(11547, 1000000), 128)));
    CHECK(b2.certainly_lt(Real::of_rational(mpq_class(11548, 1000000), 128)));

    CHECK_THROWS_AS(approximation_bound(Real::exact(2L, 128), Real::exact(1L, 128)),
                    domain_error);
}

TEST_CASE("large-|c| resolution boundary") {
    CHECK(resolve_large_c(Real::exact(159108L, 256)));
    CHECK_FALSE(resolve_large_c(Real::exact(159107L, 256)));
    CHECK(resolve_large_c(Real::exact(1000000L, 256)));
    // monotone margin above the boundary
    bool prev = true;
    for (long t : {159108L, 159500L, 200000L, 1000000L})
        prev = prev && resolve_large_c(Real::exact(t, 256));
    CHECK(prev);
}

TEST_CASE("trivial solution set") {
    RingSpec d5(5), d1(1), d3(3);
    auto t5 = trivial_solution_set(d5, QuadInt::one(d5));
    CHECK(t5.size() == 8);

    QuadInt m1 = QuadInt::integer(d1, -1);
    auto t1 = trivial_solution_set(d1, m1);
    CHECK(t1.size() == 8);
    QuadInt i = unit_value(d1, UnitRoot::I);
    for (const auto& t : t1) {
        CHECK(((t[0] == i) || (t[0] == -i)));
        CHECK(((t[1] == i) || (t[1] == -i)));
        CHECK(((t[2] == i) || (t[2] == -i)));
    }

    QuadInt w = unit_value(d3, UnitRoot::Omega);
    QuadInt w2 = unit_value(d3, UnitRoot::OmegaSq);
    for (const auto& t : trivial_solution_set(d3, w))
        CHECK(((t[0] == w2) || (t[0] == -w2)));

    CHECK_THROWS_AS(trivial_solution_set(d5, QuadInt::integer(d5, -1)), inapplicable_error);
}

TEST_CASE("Thue lists for the trivial-only regime") {
    RingSpec d5(5), d1(1), d3(3);
    CHECK(thue_solutions_large_c(d5, QuadInt::one(d5)).size() == 4);
    CHECK(thue_solutions_large_c(d1, QuadInt::one(d1)).size() == 8);
    CHECK(thue_solutions_large_c(d1, QuadInt::integer(d1, -1)).empty());
    QuadInt w = unit_value(d3, UnitRoot::Omega);
    auto lw = thue_solutions_large_c(d3, w);
    CHECK(lw.size() == 4);
    for (const auto& [p, q] : lw)
        CHECK((p.is_zero() || q.is_zero()));
}

TEST_CASE("sign extraction reproduces the Thue lists") {
    // For trivial triples, V + Z = 4pq must be 0 or +-2eps; |2pq| >= 2 or
    // 2pq = 0 forces pq = 0, so p or q is a fourth root of mu.  Exhaustive
    // over unit pairs.
    for (long D : {1L, 3L, 5L}) {
        RingSpec ring(D);
        for (const MuEps& me : admissible_mu_eps(ring)) {
            // no unit pair can satisfy 2pq in {0, +-eps}
            for (const QuadInt& p : units(ring))
                for (const QuadInt& q : units(ring)) {
                    QuadInt tp = p * q * 2;
                    CHECK(tp.norm() == 4); // |2pq| = 2, never 0 or 1
                }
            // so the lists are {p or q = 0, other^4 = mu}
            std::vector<std::pair<QuadInt, QuadInt>> expect;
            QuadInt zero = QuadInt::zero(ring);
            for (const QuadInt& u : units(ring)) {
                QuadInt u4 = u * u * u * u;
                if (u4 == me.mu) {
                    expect.emplace_back(zero, u);
                    expect.emplace_back(u, zero);
                }
            }
            auto got = thue_solutions_large_c(ring, me.mu);
            CHECK(got.size() == expect.size());
            for (const auto& e : expect) {
                bool found = false;
                for (const auto& g : got)
                    if (g.first == e.first && g.second == e.second)
                        found = true;
                CHECK(found);
            }
        }
    }
}

TEST_SUITE_END();
