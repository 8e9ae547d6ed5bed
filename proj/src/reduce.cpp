#include "relpib/reduce.hpp"

#include "relpib/pell.hpp"

namespace relpib {

CfExpansion::CfExpansion(const Real& theta)
    : lo_(theta.lower_q()), hi_(theta.upper_q()), pm1_(1), qm1_(0), pm2_(0), qm2_(1),
      conv_{0, 0, -1} {
    if (!(lo_ <= hi_))
        throw precision_error("continued fraction: empty interval");
}

const Convergent& CfExpansion::next() {
    // partial quotient certified iff floor is constant on [lo, hi]
    mpz_class a_lo, a_hi;
    mpz_fdiv_q(a_lo.get_mpz_t(), lo_.get_num_mpz_t(), lo_.get_den_mpz_t());
    mpz_fdiv_q(a_hi.get_mpz_t(), hi_.get_num_mpz_t(), hi_.get_den_mpz_t());
    if (a_lo != a_hi)
        throw precision_error("continued fraction: partial quotient undecided");
    mpz_class a = a_lo;
    mpz_class p = a * pm1_ + pm2_;
    mpz_class q = a * qm1_ + qm2_;
    pm2_ = pm1_;
    qm2_ = qm1_;
    pm1_ = p;
    qm1_ = q;
    conv_ = Convergent{p, q, conv_.index + 1};
    // map interval by t -> 1/(t - a), decreasing on (a, a+1)
    mpq_class flo = lo_ - mpq_class(a), fhi = hi_ - mpq_class(a);
    if (flo == 0 && fhi == 0)
        throw domain_error("continued fraction: value is rational, expansion terminated");
    if (flo == 0)
        throw precision_error("continued fraction: interval touches a convergent");
    lo_ = 1 / fhi;
    hi_ = 1 / flo;
    return conv_;
}

Convergent cf_expand(const Real& theta, const mpz_class& q_min) {
    CfExpansion cf(theta);
    for (;;) {
        const Convergent& c = cf.next();
        if (c.q > q_min)
            return c;
    }
}

std::optional<mpz_class> reduction_step(const Real& theta, const Real& gamma, const Real& delta,
                                        const mpq_class& a, const mpz_class& M_bound,
                                        const Convergent& conv, Real* eps_out) {
    if (conv.q <= 6 * M_bound)
        throw domain_error("reduction lemma requires q > 6M");
    mpfr_prec_t prec = theta.prec();
    Real q = Real::exact(conv.q, prec);
    auto tq = (theta * q).nearest_int();
    auto gq = (gamma * q).nearest_int();
    if (!tq || !gq)
        return std::nullopt; // distance to nearest integer not certified
    Real eps_hat = gq->second - Real::exact(M_bound, prec) * tq->second;
    if (eps_out)
        *eps_out = eps_hat;
    if (!eps_hat.certainly_positive())
        return std::nullopt;
    Real bound = (delta * q / eps_hat).log() / Real::of_rational(a, prec).log();
    // m < bound, so m <= floor(upper(bound)), minus one when that upper is
    // itself an integer the bound could equal.
    mpq_class ub = bound.upper_q();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), ub.get_num_mpz_t(), ub.get_den_mpz_t());
    if (mpq_class(fl) == ub)
        fl -= 1;
    if (fl < 0)
        fl = 0;
    return fl;
}

namespace {

ReductionOutcome run_instance(const QuadInt& c, ReduceInstance instance, const Real& theta,
                              const Real& gamma, const Real& delta, const mpq_class& a,
                              const mpz_class& M0) {
    ReductionOutcome out(c);
    out.instance = instance;
    out.final_bound = M0;
    out.status = ReduceStatus::PrecisionExhausted;

    mpz_class M = M0;
    int no_improvement = 0;
    for (int round = 0; round < 64 && no_improvement < 2; ++round) {
        CfExpansion cf(theta);
        std::optional<mpz_class> got;
        Real eps_hat(theta.prec());
        // find first convergent beyond 6M, then allow a few more attempts
        const Convergent* cv = nullptr;
        for (;;) {
            cv = &cf.next();
            if (cv->q > 6 * M)
                break;
        }
        for (int attempt = 0; attempt < 10; ++attempt) {
            got = reduction_step(theta, gamma, delta, a, M, *cv, &eps_hat);
            if (got)
                break;
            cv = &cf.next();
        }
        if (!got) {
            // keep an earlier successful round; fail only if none happened
            if (out.steps.empty())
                out.status = ReduceStatus::EpsilonNonpositive;
            return out;
        }
        out.steps.push_back(ReductionStepRecord{cv->q, eps_hat, *got});
        if (*got >= M) {
            ++no_improvement;
        } else {
            no_improvement = 0;
            M = *got;
            out.final_bound = M;
        }
        out.status = ReduceStatus::Reduced;
        if (M <= 1)
            break;
    }
    return out;
}

} // namespace

std::pair<ReductionOutcome, ReductionOutcome> reduce_for_c(const QuadInt& c,
                                                           const mpz_class& m_bw,
                                                           const mpz_class& n_bw,
                                                           ReducePrecision prec) {
    if (c.re_sign() <= 0)
        throw domain_error("reduction runs for Re(c) > 0 (Re(c) = 0 is closed earlier)");
    if (in_Sc(c))
        throw inapplicable_error("reduction does not run for c in S_c");
    if (c.norm() < 2)
        throw domain_error("reduction needs |c| >= sqrt(2)");

    precision_error last("reduction: precision exhausted");
    for (mpfr_prec_t p = prec.start; p <= prec.cap; p *= 2) {
        try {
            LinFormInstance inst = make_linform_instance(c, p);
            Real log_eta = inst.eta.log();
            Real log_th = inst.vartheta.log();
            Real log_xi = inst.xi_const.log();
            // m-instance: a = 3
            Real theta1 = log_th / log_eta;
            Real gamma1 = -(log_xi / log_eta);
            Real delta1 = Real::exact(1L, p) / log_eta.abs();
            ReductionOutcome o1 = run_instance(c, ReduceInstance::BoundM, theta1, gamma1,
                                               delta1, mpq_class(3), m_bw);
            // n-instance: a = 1.55
            Real theta2 = log_eta / log_th;
            Real gamma2 = log_xi / log_th;
            Real delta2 = Real::exact(1L, p) / log_th.abs();
            mpq_class a155(31, 20);
            ReductionOutcome o2 = run_instance(c, ReduceInstance::BoundN, theta2, gamma2,
                                               delta2, a155, n_bw);
            if (o1.status == ReduceStatus::Reduced && o2.status == ReduceStatus::Reduced)
                return {o1, o2};
            // EpsilonNonpositive after 10 convergents: retry at higher precision
            last = precision_error("reduction: no positive eps_hat at this precision");
        } catch (const precision_error& e) {
            last = e;
        }
    }
    throw last;
}

std::vector<std::tuple<long, long, int>> finish_small_indices(const QuadInt& c, long m_max,
                                                              long n_max) {
    // u_m = eps U_m(c), u'_n = eps U'_n(c): intersections do not depend on
    // eps, so check with eps = 1.
    std::vector<std::tuple<long, long, int>> hits;
    QuadInt one = QuadInt::one(c.ring());
    std::vector<QuadInt> ups;
    ups.reserve(static_cast<size_t>(n_max) + 1);
    {
        SeqState s = seq_start(SeqKind::UMinus, c, one);
        for (long n = 0; n <= n_max; ++n) {
            ups.push_back(s.current);
            s = seq_next(s, c);
        }
    }
    SeqState su = seq_start(SeqKind::UPlus, c, one);
    for (long m = 0; m <= m_max; ++m) {
        if (m >= 1) {
            for (long n = 1; n <= n_max; ++n) {
                if (su.current == ups[static_cast<size_t>(n)])
                    hits.emplace_back(m, n, 1);
                if (su.current == -ups[static_cast<size_t>(n)])
                    hits.emplace_back(m, n, -1);
            }
        }
        su = seq_next(su, c);
    }
    return hits;
}

} // namespace relpib
