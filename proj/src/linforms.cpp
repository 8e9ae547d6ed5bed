#include "relpib/linforms.hpp"

#include "relpib/pell.hpp"

namespace relpib {

namespace {

mpq_class rq(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

std::pair<QuadInt, bool> normalize_c(const QuadInt& c) {
    if (c.re_sign() < 0)
        return {-c, true};
    return {c, false};
}

Complex principal_sqrt(const Complex& z) { return z.sqrt(); }

namespace {

void require_linform_c(const QuadInt& c) {
    if (c.re_sign() < 0)
        throw domain_error("linear form data requires Re(c) >= 0");
    RingSpec ring = c.ring();
    for (long k : {0L, 1L, 2L, -1L, -2L})
        if (c == QuadInt::integer(ring, k))
            throw domain_error("linear form data undefined for c in {0,+-1,+-2}");
}

struct CoreQuantities {
    Complex sc;    // sqrt(c)
    Complex scm2;  // sqrt(c-2)
    Complex scp2;  // sqrt(c+2)
    Complex g_p;   // sqrt(c(c+2)), principal of the product
    Complex lam_p; // c+1+sqrt(c(c+2))
    Complex psi_p; // c-1+sqrt(c)sqrt(c-2)
};

CoreQuantities core(const QuadInt& c, mpfr_prec_t prec) {
    require_linform_c(c);
    Complex cc = c.embed(prec);
    Complex one = Complex::exact(1, 0, prec);
    Complex two = Complex::exact(2, 0, prec);
    CoreQuantities q{cc.sqrt(), (cc - two).sqrt(), (cc + two).sqrt(),
                     (cc * (cc + two)).sqrt(), Complex::exact(0, 0, prec),
                     Complex::exact(0, 0, prec)};
    q.lam_p = cc + one + q.g_p;
    q.psi_p = cc - one + q.sc * q.scm2;
    return q;
}

} // namespace

LinFormInstance make_linform_instance(const QuadInt& c, mpfr_prec_t prec) {
    CoreQuantities q = core(c, prec);
    Complex cc = c.embed(prec);
    LinFormInstance inst{c, q.psi_p.abs(), q.lam_p.abs(),
                         ((q.scp2 * (q.sc + q.scm2)) / (q.scm2 * (q.sc + q.scp2))).abs()};
    Real one = Real::exact(1L, prec);
    if (!inst.eta.certainly_gt(one) || !inst.vartheta.certainly_gt(one))
        throw precision_error("eta > 1 / vartheta > 1 not certified");
    (void)cc;
    return inst;
}

Complex build_P(const QuadInt& c, long m, mpfr_prec_t prec) {
    if (m < 0)
        throw domain_error("m must be >= 0");
    CoreQuantities q = core(c, prec);
    Complex cc = c.embed(prec);
    return (cc + q.g_p) * q.lam_p.pow_ui(static_cast<unsigned long>(m)) / q.scp2;
}

Complex build_Q(const QuadInt& c, long n, mpfr_prec_t prec) {
    if (n < 0)
        throw domain_error("n must be >= 0");
    CoreQuantities q = core(c, prec);
    Complex cc = c.embed(prec);
    return (cc + q.sc * q.scm2) * q.psi_p.pow_ui(static_cast<unsigned long>(n)) / q.scm2;
}

Real lambda_value(const QuadInt& c, long m, long n, mpfr_prec_t prec) {
    Real direct = build_Q(c, n, prec).abs().log() - build_P(c, m, prec).abs().log();
    LinFormInstance inst = make_linform_instance(c, prec);
    Real mm = Real::exact(m, prec), nn = Real::exact(n, prec);
    Real three_term = nn * inst.eta.log() - mm * inst.vartheta.log() + inst.xi_const.log();
    if (!direct.overlaps(three_term))
        throw anomaly_error("two expressions for Lambda disagree");
    return direct;
}

std::pair<Real, Real> lambda_upper_bounds(const QuadInt& c, long m, long n, mpfr_prec_t prec) {
    (void)c; // bounds are uniform over |c| >= sqrt(2); c kept for the contract
    if (m < 0 || n < 0)
        throw domain_error("indices must be >= 0");
    mpq_class third(1, 3), inv155(20, 31);
    Real bm = Real::of_rational(third, prec).pow_ui(static_cast<unsigned long>(m));
    Real bn = Real::of_rational(inv155, prec).pow_ui(static_cast<unsigned long>(n));
    return {bm, bn};
}

LambdaStatus lambda_nonzero(const QuadInt& c) {
    if (in_Sc(c))
        throw inapplicable_error("Lambda criterion requires c not in S_c");
    return c.re_sign() != 0 ? LambdaStatus::NonzeroCertified : LambdaStatus::ZeroPossible_ReZero;
}

bool exclude_index_one(const QuadInt& c, mpfr_prec_t prec) {
    // |u_1| = |2c+1| <= 2|c|+1 and |u'_1| = |2c-1| <= 2|c|+1, while
    // |u'_n| >= (2 sqrt(1+|c|^2) - 1)(2|c|-1) for n >= 2 and
    // |u_m|  >= (2 sqrt(1+|c|^2) - 1)^2 for m >= 2.
    mpq_class nc(c.norm());
    if (nc < 2)
        throw domain_error("exclude_index_one needs |c| >= sqrt(2)");
    if (c.re_sign() < 0)
        throw domain_error("exclude_index_one requires Re(c) >= 0");
    Real cabs = Real::of_rational(nc, prec).sqrt();
    Real one = Real::exact(1L, prec), two = Real::exact(2L, prec);
    Real lhs = two * cabs + one;
    Real grow = two * (one + cabs.sqr()).sqrt() - one;
    bool chain1 = lhs.certainly_lt(grow * (two * cabs - one));
    bool chain2 = lhs.certainly_lt(grow.sqr());
    // u_1 = +-u'_1 would force 2c+1 = +-(2c-1): exact impossibility
    QuadInt u1 = c * 2 + 1, up1 = c * 2 - 1;
    bool exact_neq = (u1 != up1) && (u1 != -up1);
    return chain1 && chain2 && exact_neq;
}

BwBounds bw_global_bounds(mpfr_prec_t prec) {
    // constant: 18 * 4! * 3^4 * (32*2048)^5 * 28.12^2 * 271.82 * log(2*3*2048)
    Real h12 = Real::of_rational(rq(2812, 100), prec);
    Real h3 = Real::of_rational(rq(27182, 100), prec);
    Real base = Real::exact(18L * 24L * 81L, prec);
    Real deg5 = Real::exact(32L * 2048L, prec).pow_ui(5);
    Real logd = Real::exact(2L * 3L * 2048L, prec).log();
    Real K = base * deg5 * h12.sqr() * h3 * logd;
    // 8.6e34 as an exact integer
    mpz_class cap_z = mpz_class(86) * [] {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 33);
        return t;
    }();
    Real cap = Real::exact(cap_z, prec);
    if (!K.certainly_lt(cap))
        throw anomaly_error("Baker-Wustholz constant exceeds 8.6e34");

    // m log 3 <= cap log m fails from m0 = 6.7e36 on; certify at m0 and rely
    // on monotonicity of t/log t.
    mpz_class m0 = mpz_class(67) * [] {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 35);
        return t;
    }();
    mpz_class n0 = mpz_class(1715) * [] {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 34);
        return t;
    }();
    Real rm0 = Real::exact(m0, prec), rn0 = Real::exact(n0, prec);
    Real log3 = Real::exact(3L, prec).log();
    Real log155 = Real::of_rational(rq(31, 20), prec).log();
    if (!(rm0 * log3).certainly_gt(cap * rm0.log()))
        throw anomaly_error("m cap 6.7e36 failed to certify");
    if (!(rn0 * log155).certainly_gt(cap * rn0.log()))
        throw anomaly_error("n cap 1.715e37 failed to certify");
    return BwBounds{m0, n0, K};
}

std::array<Real, 3> height_bounds(const QuadInt& c, mpfr_prec_t prec) {
    Real cabs = Real::exact(c.norm(), prec).sqrt();
    Real c2 = cabs.sqr();
    Real h_eta =
        (Real::exact(8L, prec) * (Real::exact(6L, prec) + Real::exact(16L, prec) * cabs +
                                  Real::exact(8L, prec) * c2))
            .log();
    Real c4 = c2.sqr(), c6 = c4 * c2;
    Real poly = Real::exact(6435L, prec) + Real::exact(3168L, prec) * c2 +
                Real::exact(112L, prec) * c4 + Real::exact(128L, prec) * c6;
    Real h_xi =
        (Real::exact(32L, prec) * (cabs + Real::exact(2L, prec)).pow_ui(16) * poly).log();
    return {h_eta, h_eta, h_xi};
}

Complex reconstruct_u_from_P(const QuadInt& c, const QuadInt& eps, long m, mpfr_prec_t prec) {
    CoreQuantities q = core(c, prec);
    Complex cc = c.embed(prec);
    Complex two = Complex::exact(2, 0, prec);
    Complex P = build_P(c, m, prec);
    Complex val = eps.embed(prec) * (P + (two * cc / (cc + two)) / P) / (two * q.sc);
    if (!val.overlaps(u_seq(c, eps, m).embed(prec)))
        throw precision_error("P-reconstruction of u_m failed to meet the exact value");
    return val;
}

Complex reconstruct_uprime_from_Q(const QuadInt& c, const QuadInt& eps, long n,
                                  mpfr_prec_t prec) {
    CoreQuantities q = core(c, prec);
    Complex cc = c.embed(prec);
    Complex two = Complex::exact(2, 0, prec);
    Complex Q = build_Q(c, n, prec);
    Complex val = eps.embed(prec) * (Q - (two * cc / (cc - two)) / Q) / (two * q.sc);
    Complex exact = uprime_seq(c, eps, n).embed(prec);
    if (!val.overlaps(exact) && !(-val).overlaps(exact))
        throw precision_error("Q-reconstruction of u'_n failed to meet the exact value");
    return val;
}

} // namespace relpib
