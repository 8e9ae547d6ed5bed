#include "relpib/roots.hpp"

#include <complex>

#include <mpfr.h>

namespace relpib {

namespace {

// Plain (non-certified) complex arithmetic on mpfr midpoints for the
// Durand-Kerner iteration; rigor enters only in the final certification.
struct Cx {
    mpfr_t re, im;
    explicit Cx(mpfr_prec_t p) {
        mpfr_init2(re, p);
        mpfr_init2(im, p);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    Cx(const Cx&) = delete;
    Cx& operator=(const Cx&) = delete;
    Cx(Cx&& o) noexcept {
        re[0] = o.re[0];
        im[0] = o.im[0];
        mpfr_init2(o.re, MPFR_PREC_MIN);
        mpfr_init2(o.im, MPFR_PREC_MIN);
    }
    ~Cx() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

void cx_sub(Cx& r, const Cx& a, const Cx& b) {
    mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}

// safe under r aliasing a or b; tmp must be distinct from all three
void cx_mul(Cx& r, const Cx& a, const Cx& b, Cx& tmp) {
    mpfr_fmms(tmp.re, a.re, b.re, a.im, b.im, MPFR_RNDN); // ac - bd
    mpfr_fmma(tmp.im, a.re, b.im, a.im, b.re, MPFR_RNDN); // ad + bc
    mpfr_swap(r.re, tmp.re);
    mpfr_swap(r.im, tmp.im);
}

void cx_div(Cx& r, const Cx& a, const Cx& b, Cx& tmp) {
    // r = a * conj(b) / |b|^2
    mpfr_t n;
    mpfr_init2(n, mpfr_get_prec(b.re));
    mpfr_mul(n, b.re, b.re, MPFR_RNDN);
    mpfr_fma(n, b.im, b.im, n, MPFR_RNDN);
    Cx cb(mpfr_get_prec(b.re));
    mpfr_set(cb.re, b.re, MPFR_RNDN);
    mpfr_neg(cb.im, b.im, MPFR_RNDN);
    cx_mul(r, a, cb, tmp);
    mpfr_div(r.re, r.re, n, MPFR_RNDN);
    mpfr_div(r.im, r.im, n, MPFR_RNDN);
    mpfr_clear(n);
}

void cx_add(Cx& r, const Cx& a, const Cx& b) {
    mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
}

} // namespace

std::vector<Complex> certified_roots(const std::vector<Complex>& low, mpfr_prec_t prec) {
    const size_t n = low.size();
    if (n == 0)
        return {};

    // Midpoint copies of the coefficients.
    std::vector<double> cr(n), ci(n);
    double maxc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        cr[i] = low[i].re().approx();
        ci[i] = low[i].im().approx();
        maxc = std::max(maxc, std::abs(cr[i]) + std::abs(ci[i]));
    }

    // Durand-Kerner at working precision.
    std::vector<Cx> z;
    z.reserve(n);
    for (size_t i = 0; i < n; ++i)
        z.emplace_back(prec);
    {
        // initial guesses on a spiral inside the root bound 1 + max|c_i|
        std::complex<double> g(0.4, 0.9), acc(1.0, 0.0);
        double scale = 1.0 + maxc;
        if (!std::isfinite(scale) || scale > 1e300)
            scale = 1e300;
        for (size_t i = 0; i < n; ++i) {
            acc *= g;
            mpfr_set_d(z[i].re, acc.real() * scale, MPFR_RNDN);
            mpfr_set_d(z[i].im, acc.imag() * scale, MPFR_RNDN);
        }
    }

    std::vector<Cx> cmid;
    cmid.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        cmid.emplace_back(prec);
        mpfr_set(cmid[i].re, low[i].re().mid(), MPFR_RNDN);
        mpfr_set(cmid[i].im, low[i].im().mid(), MPFR_RNDN);
    }

    Cx p(prec), d(prec), t(prec), t2(prec), corr(prec);
    mpfr_t step, limit;
    mpfr_init2(step, 64);
    mpfr_init2(limit, 64);
    mpfr_set_ui_2exp(limit, 1, -(prec - 8), MPFR_RNDN);

    const long max_iter = 200 + static_cast<long>(n) * 20;
    for (long iter = 0; iter < max_iter; ++iter) {
        mpfr_set_zero(step, 1);
        for (size_t k = 0; k < n; ++k) {
            // p = poly(z_k) by Horner (monic)
            mpfr_set_ui(p.re, 1, MPFR_RNDN);
            mpfr_set_zero(p.im, 1);
            for (size_t j = n; j-- > 0;) {
                cx_mul(p, p, z[k], t);
                cx_add(p, p, cmid[j]);
            }
            // d = prod_{j != k} (z_k - z_j)
            mpfr_set_ui(d.re, 1, MPFR_RNDN);
            mpfr_set_zero(d.im, 1);
            for (size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                cx_sub(t2, z[k], z[j]);
                cx_mul(d, d, t2, t);
            }
            cx_div(corr, p, d, t);
            cx_sub(z[k], z[k], corr);
            mpfr_hypot(t.re, corr.re, corr.im, MPFR_RNDN);
            mpfr_hypot(t.im, z[k].re, z[k].im, MPFR_RNDN);
            mpfr_add_ui(t.im, t.im, 1, MPFR_RNDN);
            mpfr_div(t.re, t.re, t.im, MPFR_RNDN); // relative step
            if (mpfr_cmp(step, t.re) < 0)
                mpfr_set(step, t.re, MPFR_RNDN);
        }
        if (mpfr_cmp(step, limit) < 0)
            break;
    }
    mpfr_clear(step);
    mpfr_clear(limit);

    // Certification: around each approximation z, some root lies within
    // n |p(z)/p'(z)| whenever p'(z) != 0.
    std::vector<Complex> out;
    std::vector<Real> radius;
    out.reserve(n);
    Real nn = Real::exact(static_cast<long>(n), prec);
    for (size_t k = 0; k < n; ++k) {
        Complex zz(Real::from_mpfr_exact(z[k].re, prec), Real::from_mpfr_exact(z[k].im, prec));
        // Horner for p and p' in ball arithmetic.
        Complex pv = Complex::exact(1, 0, prec);
        Complex dv = Complex::exact(0, 0, prec);
        for (size_t j = n; j-- > 0;) {
            dv = dv * zz + pv;
            pv = pv * zz + Complex(low[j].re(), low[j].im());
        }
        Real dnorm = dv.abs();
        if (!dnorm.certainly_positive())
            throw precision_error("root certification: derivative not separated from zero");
        Real r = nn * (pv.abs() / dnorm);
        out.push_back(zz);
        radius.push_back(r);
    }

    // Inflate each enclosure to center +- radius and check pairwise
    // disjointness: |z_j - z_k| > r_j + r_k, certified.
    std::vector<Complex> balls;
    balls.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        Real pm = radius[k];
        Real re = out[k].re() + Real::zero_pm(pm);
        Real im = out[k].im() + Real::zero_pm(pm);
        balls.emplace_back(re, im);
    }
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            Real dist = (out[a] - out[b]).abs();
            Real rsum = radius[a] + radius[b];
            if (!rsum.certainly_lt(dist))
                throw precision_error("root certification: enclosures not disjoint");
        }
    }
    return balls;
}

} // namespace relpib
