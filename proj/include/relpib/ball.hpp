#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "relpib/errors.hpp"

namespace relpib {

// Certified real value: a midpoint at `prec` bits plus an upward-rounded
// radius.  Every operation returns an enclosure of the exact result, so a
// certified comparison on balls is a proof about the underlying reals.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64); // NaN midpoint, infinite radius
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real exact(long v, mpfr_prec_t prec);
    static Real exact(const mpz_class& v, mpfr_prec_t prec);
    static Real of_rational(const mpq_class& v, mpfr_prec_t prec);
    // Ball [-|bound|, +|bound|]; used where only a magnitude is known.
    static Real zero_pm(const Real& bound);
    static Real from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
    // Exact point ball at the value of v (precision widened as needed).
    static Real from_mpfr_exact(mpfr_srcptr v, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    bool is_finite() const;
    bool is_exact() const; // radius exactly zero

    // Certified endpoints as exact dyadic rationals.
    mpq_class lower_q() const;
    mpq_class upper_q() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    // Throws precision_error if the divisor's ball contains zero.
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real abs() const;
    Real sqr() const;
    // Clamps tiny negative lower endpoints to zero; throws domain_error if
    // the whole ball is negative.
    Real sqrt() const;
    // Throws precision_error unless certified positive.
    Real log() const;
    Real exp() const;
    Real pow_ui(unsigned long e) const;
    static Real pow(const Real& base, const Real& expo); // exp(expo*log(base))

    bool certainly_lt(const Real& o) const;
    bool certainly_gt(const Real& o) const { return o.certainly_lt(*this); }
    bool certainly_le(const Real& o) const;
    bool certainly_ge(const Real& o) const { return o.certainly_le(*this); }
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool contains_zero() const;
    bool contains(const mpq_class& v) const;
    bool overlaps(const Real& o) const;

    // Unique integer floor of every point in the ball, when certifiable.
    std::optional<mpz_class> floor_certified() const;
    // Nearest integer n with the ball strictly inside (n-1/2, n+1/2),
    // together with the distance ball |x - n|.
    std::optional<std::pair<mpz_class, Real>> nearest_int() const;

    std::string mid_str() const;
    std::string rad_str() const;
    double approx() const; // midpoint as double; diagnostics only

  private:
    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;

    void bump_rad_ulp(int ternary);
    void add_rad(mpfr_srcptr extra);
};

// Rectangular complex ball.
class Complex {
  public:
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re);
    static Complex exact(long re, long im, mpfr_prec_t prec);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    Complex conj() const;
    Complex operator-() const;
    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);

    Real abs_sq() const;
    Real abs() const;
    // Principal square root, -pi < arg <= pi.  Throws precision_error when
    // the ball straddles the branch cut ambiguously.
    Complex sqrt() const;
    Complex pow_ui(unsigned long e) const;

    bool contains_zero() const;
    bool overlaps(const Complex& o) const;

    std::string str() const;

  private:
    Real re_, im_;
};

} // namespace relpib
