#include "doctest.h"

#include <random>

#include "relpib/ball.hpp"

using namespace relpib;

TEST_SUITE_BEGIN("ball");

namespace {

mpq_class rand_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10000, 10000), den(1, 1000);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("exact integer arithmetic stays exact") {
    Real a = Real::exact(2L, 64), b = Real::exact(3L, 64);
    Real s = a + b;
    CHECK(s.is_exact());
    CHECK(s.contains(mpq_class(5)));
    CHECK((a * b).contains(mpq_class(6)));
    CHECK((a - b).contains(mpq_class(-1)));
}

TEST_CASE("field operations enclose the rational result") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        mpq_class x = rand_q(rng), y = rand_q(rng);
        Real rx = Real::of_rational(x, 96), ry = Real::of_rational(y, 96);
        CHECK((rx + ry).contains(x + y));
        CHECK((rx - ry).contains(x - y));
        CHECK((rx * ry).contains(x * y));
        if (y != 0 && !ry.contains_zero()) {
            mpq_class q = x / y;
            CHECK((rx / ry).contains(q));
        }
    }
}

TEST_CASE("division by a zero-straddling ball fails loudly") {
    Real a = Real::exact(1L, 64);
    Real tiny = Real::of_rational(mpq_class(1, 1000000), 64);
    Real z = Real::zero_pm(tiny);
    CHECK_THROWS_AS(a / z, precision_error);
}

TEST_CASE("sqrt log exp") {
    Real two = Real::exact(2L, 128);
    Real r = two.sqrt();
    CHECK(r.sqr().contains(mpq_class(2)));
    CHECK_THROWS_AS(Real::exact(-4L, 64).sqrt(), domain_error);

    Real l = two.log();
    CHECK(l.exp().contains(mpq_class(2)));
    CHECK_THROWS_AS(Real::exact(0L, 64).log(), precision_error);
    CHECK_THROWS_AS(Real::exact(-1L, 64).log(), precision_error);

    CHECK(Real::pow(two, Real::exact(10L, 128)).contains(mpq_class(1024)));
    CHECK(two.pow_ui(10).contains(mpq_class(1024)));
    CHECK(two.pow_ui(0).contains(mpq_class(1)));
}

TEST_CASE("interval square through zero") {
    Real a = Real::from_endpoints(Real::exact(-1L, 64).mid(), Real::exact(2L, 64).mid(), 64);
    Real s = a.sqr();
    CHECK(s.contains(mpq_class(0)));
    CHECK(s.contains(mpq_class(4)));
    CHECK_FALSE(s.certainly_negative());
}

TEST_CASE("certified comparisons") {
    Real a = Real::of_rational(mpq_class(1, 3), 96);
    Real b = Real::of_rational(mpq_class(1, 2), 96);
    CHECK(a.certainly_lt(b));
    CHECK(b.certainly_gt(a));
    CHECK_FALSE(a.certainly_lt(a));
    CHECK(a.certainly_positive());
    CHECK((-a).certainly_negative());
    CHECK(Real::zero_pm(a).contains_zero());
    CHECK(a.overlaps(a));
    CHECK_FALSE(a.overlaps(b));
}

TEST_CASE("floor and nearest integer certification") {
    Real x = Real::of_rational(mpq_class(5, 2), 96);
    auto f = x.floor_certified();
    REQUIRE(f.has_value());
    CHECK(*f == 2);

    // a ball straddling an integer has no certified floor
    Real wobble = Real::exact(3L, 96) + Real::zero_pm(Real::of_rational(mpq_class(1, 100), 96));
    CHECK_FALSE(wobble.floor_certified().has_value());

    Real y = Real::of_rational(mpq_class(249, 100), 96);
    auto n = y.nearest_int();
    REQUIRE(n.has_value());
    CHECK(n->first == 2);
    CHECK(n->second.contains(mpq_class(49, 100)));

    // straddles the half-integer boundary: not certifiable
    Real h = Real::of_rational(mpq_class(5, 2), 96) +
             Real::zero_pm(Real::of_rational(mpq_class(1, 1000), 96));
    CHECK_FALSE(h.nearest_int().has_value());
}

TEST_CASE("dyadic endpoints") {
    Real x = Real::of_rational(mpq_class(1, 3), 64);
    mpq_class lo = x.lower_q(), hi = x.upper_q();
    CHECK(lo <= mpq_class(1, 3));
    CHECK(hi >= mpq_class(1, 3));
    CHECK(hi - lo < mpq_class(1, 1000000));
}

TEST_CASE("complex arithmetic and absolute value") {
    Complex z = Complex::exact(3, 4, 128);
    CHECK(z.abs().contains(mpq_class(5)));
    CHECK(z.abs_sq().contains(mpq_class(25)));
    Complex w = Complex::exact(1, -2, 128);
    Complex p = z * w;               // (3+4i)(1-2i) = 11 - 2i
    CHECK(p.re().contains(mpq_class(11)));
    CHECK(p.im().contains(mpq_class(-2)));
    Complex q = p / w;
    CHECK(q.re().contains(mpq_class(3)));
    CHECK(q.im().contains(mpq_class(4)));
    CHECK((z - z).contains_zero());
}

TEST_CASE("principal square root") {
    // sqrt(-4) = 2i (arg = pi convention)
    Complex m4 = Complex::exact(-4, 0, 128);
    Complex r = m4.sqrt();
    CHECK(r.re().contains(mpq_class(0)));
    CHECK(r.im().contains(mpq_class(2)));

    // sqrt(2i) = 1+i
    Complex t = Complex::exact(0, 2, 128).sqrt();
    CHECK(t.re().contains(mpq_class(1)));
    CHECK(t.im().contains(mpq_class(1)));

    // sqrt(1) = 1
    Complex o = Complex::exact(1, 0, 128).sqrt();
    CHECK(o.re().contains(mpq_class(1)));
    CHECK(o.im().contains(mpq_class(0)));

    // principal branch has nonnegative real part; square returns the input
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int k = 0; k < 100; ++k) {
        long a = d(rng), b = d(rng);
        if (a == 0 && b == 0)
            continue;
        Complex z(Real::exact(a, 128), Real::exact(b, 128));
        if (b == 0 && a < 0)
            continue; // covered above
        Complex s = z.sqrt();
        CHECK_FALSE(s.re().certainly_negative());
        Complex back = s * s;
        CHECK(back.re().contains(mpq_class(a)));
        CHECK(back.im().contains(mpq_class(b)));
    }

    // ambiguous branch straddle fails loudly
    Real re = Real::exact(-4L, 64);
    Real im = Real::zero_pm(Real::of_rational(mpq_class(1, 1000), 64));
    CHECK_THROWS_AS(Complex(re, im).sqrt(), precision_error);
}

TEST_CASE("complex pow") {
    Complex z = Complex::exact(1, 1, 128);
    Complex z8 = z.pow_ui(8); // (1+i)^8 = 16
    CHECK(z8.re().contains(mpq_class(16)));
    CHECK(z8.im().contains(mpq_class(0)));
}

TEST_SUITE_END();
