#include "relpib/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace relpib {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;
constexpr mpfr_prec_t kGuard = 32;

// RAII temporary.
struct Tmp {
    mpfr_t v;
    explicit Tmp(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Tmp() { mpfr_clear(v); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
    mpfr_srcptr get() const { return v; }
};

} // namespace

Real::Real(mpfr_prec_t prec) : prec_(std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_nan(mid_);
    mpfr_set_inf(rad_, 1);
}

Real::Real(const Real& o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
    mid_[0] = o.mid_[0];
    rad_[0] = o.rad_[0];
    // Leave the source valid for its destructor.
    mpfr_init2(o.mid_, MPFR_PREC_MIN);
    mpfr_init2(o.rad_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, o.prec_);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void Real::bump_rad_ulp(int ternary) {
    if (ternary == 0)
        return;
    if (!mpfr_regular_p(mid_)) {
        // Rounded to zero or non-finite: fall back to a crude but safe bump.
        Tmp t(kRadPrec);
        mpfr_set_ui_2exp(t, 1, -prec_, MPFR_RNDU);
        mpfr_add(rad_, rad_, t, MPFR_RNDU);
        return;
    }
    Tmp t(kRadPrec);
    mpfr_set_ui_2exp(t, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, t, MPFR_RNDU);
}

void Real::add_rad(mpfr_srcptr extra) { mpfr_add(rad_, rad_, extra, MPFR_RNDU); }

Real Real::exact(long v, mpfr_prec_t prec) {
    Real r(prec);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.bump_rad_ulp(t);
    return r;
}

Real Real::exact(const mpz_class& v, mpfr_prec_t prec) {
    Real r(prec);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.bump_rad_ulp(t);
    return r;
}

Real Real::of_rational(const mpq_class& v, mpfr_prec_t prec) {
    Real r(prec);
    int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.bump_rad_ulp(t);
    return r;
}

Real Real::zero_pm(const Real& bound) {
    Real r(bound.prec_);
    mpfr_set_zero(r.mid_, 1);
    Tmp hi(kRadPrec);
    mpfr_abs(hi, bound.mid_, MPFR_RNDU);
    mpfr_add(hi, hi, bound.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, hi.v, MPFR_RNDU);
    return r;
}

Real Real::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    Real r(prec);
    int t = mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
    t |= mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.bump_rad_ulp(t);
    // radius >= max(hi - mid, mid - lo), rounded up
    Tmp d1(kRadPrec), d2(kRadPrec);
    mpfr_sub(d1, hi, r.mid_, MPFR_RNDU);
    mpfr_sub(d2, r.mid_, lo, MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) < 0)
        mpfr_set(d1.v, d2.v, MPFR_RNDU);
    if (mpfr_sgn(d1.v) > 0)
        r.add_rad(d1);
    return r;
}

Real Real::from_mpfr_exact(mpfr_srcptr v, mpfr_prec_t prec) {
    Real r(std::max(prec, mpfr_get_prec(v)));
    mpfr_set(r.mid_, v, MPFR_RNDN); // exact: target has at least source precision
    mpfr_set_zero(r.rad_, 1);
    return r;
}

bool Real::is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }

bool Real::is_exact() const { return mpfr_zero_p(rad_); }

mpq_class Real::lower_q() const {
    if (!is_finite())
        throw precision_error("lower_q on non-finite ball");
    Tmp lo(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    if (mpfr_zero_p(lo.v))
        return mpq_class(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), lo);
    mpq_class q(m);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
    return q;
}

mpq_class Real::upper_q() const {
    Real neg = -*this;
    return -neg.lower_q();
}

Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |ab - am*bm| <= |am|*rb + ra*(|bm| + rb)
    Tmp am(kRadPrec), bm(kRadPrec), u(kRadPrec), v(kRadPrec);
    mpfr_abs(am, a.mid_, MPFR_RNDU);
    mpfr_abs(bm, b.mid_, MPFR_RNDU);
    mpfr_mul(u, am, b.rad_, MPFR_RNDU);
    mpfr_add(v, bm, b.rad_, MPFR_RNDU);
    mpfr_mul(v, v, a.rad_, MPFR_RNDU);
    mpfr_add(u, u, v, MPFR_RNDU);
    mpfr_set(r.rad_, u.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (!b.is_finite() || !a.is_finite())
        throw precision_error("division with non-finite ball");
    Tmp bm(kRadPrec);
    mpfr_abs(bm, b.mid_, MPFR_RNDD);
    if (mpfr_cmp(bm.v, b.rad_) <= 0)
        throw precision_error("division by a ball containing zero");
    Real r(std::max(a.prec_, b.prec_));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // err <= (|am|*rb + |bm|*ra) / (|bm| * (|bm| - rb))
    Tmp am(kRadPrec), num(kRadPrec), den(kRadPrec), u(kRadPrec);
    mpfr_abs(am, a.mid_, MPFR_RNDU);
    mpfr_mul(num, am, b.rad_, MPFR_RNDU);
    mpfr_abs(u, b.mid_, MPFR_RNDU);
    mpfr_mul(u, u, a.rad_, MPFR_RNDU);
    mpfr_add(num, num, u, MPFR_RNDU);
    mpfr_sub(den, bm, b.rad_, MPFR_RNDD);
    mpfr_mul(den, den, bm, MPFR_RNDD);
    mpfr_div(num, num, den, MPFR_RNDU);
    mpfr_set(r.rad_, num.v, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Real Real::operator-() const {
    Real r(prec_);
    mpfr_neg(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    return r;
}

Real Real::abs() const {
    if (contains_zero()) {
        Tmp zero(prec_), hi(prec_ + kGuard);
        mpfr_set_zero(zero, 1);
        mpfr_abs(hi, mid_, MPFR_RNDU);
        mpfr_add(hi, hi, rad_, MPFR_RNDU);
        return from_endpoints(zero, hi, prec_);
    }
    Real r(prec_);
    mpfr_abs(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    return r;
}

Real Real::sqr() const {
    Real a = abs();
    return a * a;
}

Real Real::sqrt() const {
    if (!is_finite())
        throw precision_error("sqrt of non-finite ball");
    Tmp lo(prec_ + kGuard), hi(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    if (mpfr_sgn(hi.v) < 0)
        throw domain_error("sqrt of a certainly negative value");
    if (mpfr_sgn(lo.v) < 0)
        mpfr_set_zero(lo, 1);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    return from_endpoints(lo, hi, prec_);
}

Real Real::log() const {
    if (!certainly_positive())
        throw precision_error("log of a value not certified positive");
    Tmp lo(prec_ + kGuard), hi(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_log(hi, hi, MPFR_RNDU);
    return from_endpoints(lo, hi, prec_);
}

Real Real::exp() const {
    if (!is_finite())
        throw precision_error("exp of non-finite ball");
    Tmp lo(prec_ + kGuard), hi(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpfr_exp(lo, lo, MPFR_RNDD);
    mpfr_exp(hi, hi, MPFR_RNDU);
    return from_endpoints(lo, hi, prec_);
}

Real Real::pow_ui(unsigned long e) const {
    Real acc = Real::exact(1L, prec_);
    Real base = *this;
    while (e > 0) {
        if (e & 1UL)
            acc = acc * base;
        e >>= 1UL;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

Real Real::pow(const Real& base, const Real& expo) { return (expo * base.log()).exp(); }

bool Real::certainly_lt(const Real& o) const {
    if (!is_finite() || !o.is_finite())
        return false;
    // a.hi < b.lo  <=>  (am - bm) + (ra + rb) < 0 with upward rounding
    Tmp d(kRadPrec + 64), s(kRadPrec);
    mpfr_sub(d, mid_, o.mid_, MPFR_RNDU);
    mpfr_add(s, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(d, d, s, MPFR_RNDU);
    return mpfr_sgn(d.v) < 0;
}

bool Real::certainly_le(const Real& o) const {
    if (!is_finite() || !o.is_finite())
        return false;
    Tmp d(kRadPrec + 64), s(kRadPrec);
    mpfr_sub(d, mid_, o.mid_, MPFR_RNDU);
    mpfr_add(s, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(d, d, s, MPFR_RNDU);
    return mpfr_sgn(d.v) <= 0;
}

bool Real::certainly_positive() const {
    if (!is_finite())
        return false;
    return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Real::certainly_negative() const {
    if (!is_finite())
        return false;
    return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Real::contains_zero() const {
    if (!is_finite())
        return true;
    return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool Real::contains(const mpq_class& v) const {
    if (!is_finite())
        return true;
    Tmp lo(prec_ + kGuard), hi(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    return mpfr_cmp_q(lo, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi, v.get_mpq_t()) >= 0;
}

bool Real::overlaps(const Real& o) const {
    if (!is_finite() || !o.is_finite())
        return true;
    return !certainly_lt(o) && !o.certainly_lt(*this);
}

std::optional<mpz_class> Real::floor_certified() const {
    if (!is_finite())
        return std::nullopt;
    Tmp lo(prec_ + kGuard), hi(prec_ + kGuard);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);
    if (flo != fhi)
        return std::nullopt;
    // hi exactly integral is fine: floor(hi) is still fhi.
    return flo;
}

std::optional<std::pair<mpz_class, Real>> Real::nearest_int() const {
    if (!is_finite())
        return std::nullopt;
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), mid_, MPFR_RNDN);
    Real nn = Real::exact(n, prec_);
    Real d = *this - nn;
    // require |x - n| certainly < 1/2
    Real half = Real::of_rational(mpq_class(1, 2), 64);
    if (!d.abs().certainly_lt(half))
        return std::nullopt;
    return std::make_pair(n, d.abs());
}

std::string Real::mid_str() const {
    long digits = std::max(4L, static_cast<long>(static_cast<double>(prec_) * 0.30103) + 2);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Real::rad_str() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.3Re", rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

double Real::approx() const { return mpfr_get_d(mid_, MPFR_RNDN); }

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {
    Real z = Real::exact(0L, re_.prec());
    im_ = z;
}

Complex Complex::exact(long re, long im, mpfr_prec_t prec) {
    return Complex(Real::exact(re, prec), Real::exact(im, prec));
}

Complex Complex::conj() const { return Complex(re_, -im_); }

Complex Complex::operator-() const { return Complex(-re_, -im_); }

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.abs_sq();
    Complex num = a * b.conj();
    return Complex(num.re() / den, num.im() / den);
}

Real Complex::abs_sq() const { return re_.sqr() + im_.sqr(); }

Real Complex::abs() const { return abs_sq().sqrt(); }

Complex Complex::sqrt() const {
    mpfr_prec_t p = std::max(re_.prec(), im_.prec());
    Real zero = Real::exact(0L, p);
    if (im_.is_exact() && mpfr_zero_p(im_.mid())) {
        // exactly on the real axis: the convention arg = pi applies
        if (!re_.certainly_negative()) {
            if (re_.contains_zero() && !re_.certainly_positive()) {
                // may include small negatives; only safe if the whole ball
                // is >= 0
                mpq_class lo = re_.lower_q();
                if (lo < 0)
                    throw precision_error("complex sqrt: real ball straddles zero");
            }
            return Complex(re_.sqrt(), zero);
        }
        return Complex(zero, (-re_).sqrt());
    }
    Real two = Real::exact(2L, p);
    if (im_.certainly_positive() || im_.certainly_negative()) {
        Real r = abs();
        Real u = ((r + re_) / two).sqrt();
        Real v = ((r - re_) / two).sqrt();
        return im_.certainly_positive() ? Complex(u, v) : Complex(u, -v);
    }
    if (re_.certainly_positive()) {
        // imaginary part straddles zero but we are away from the cut
        Real r = abs();
        Real u = ((r + re_) / two).sqrt();
        Real vmax = ((r - re_) / two).sqrt();
        return Complex(u, Real::zero_pm(vmax));
    }
    throw precision_error("complex sqrt: ball straddles the branch cut");
}

Complex Complex::pow_ui(unsigned long e) const {
    mpfr_prec_t p = std::max(re_.prec(), im_.prec());
    Complex acc = Complex::exact(1, 0, p);
    Complex base = *this;
    while (e > 0) {
        if (e & 1UL)
            acc = acc * base;
        e >>= 1UL;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

bool Complex::contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

bool Complex::overlaps(const Complex& o) const {
    return re_.overlaps(o.re()) && im_.overlaps(o.im());
}

std::string Complex::str() const {
    return "(" + re_.mid_str() + " +- " + re_.rad_str() + ") + (" + im_.mid_str() + " +- " +
           im_.rad_str() + ")*i";
}

} // namespace relpib
