#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "relpib/ball.hpp"
#include "relpib/linforms.hpp"
#include "relpib/ring.hpp"

namespace relpib {

struct Convergent {
    mpz_class p, q;
    long index;
};

enum class ReduceStatus { Reduced, EpsilonNonpositive, PrecisionExhausted };

struct ReductionStepRecord {
    mpz_class q;
    Real eps_hat;
    mpz_class new_bound;
};

enum class ReduceInstance { BoundM, BoundN };

// One reduction instance: BoundM shrinks the m index with a = 3, BoundN the
// n index with a = 31/20.
struct ReductionOutcome {
    QuadInt c;
    ReduceInstance instance = ReduceInstance::BoundM;
    std::vector<ReductionStepRecord> steps;
    mpz_class final_bound;
    ReduceStatus status = ReduceStatus::PrecisionExhausted;

    explicit ReductionOutcome(QuadInt c_) : c(std::move(c_)) {}
};

// Certified continued fraction expansion of theta, driven by the exact
// dyadic interval of the ball; every partial quotient is provably correct.
class CfExpansion {
  public:
    explicit CfExpansion(const Real& theta);
    // Advance to the next convergent; throws precision_error when a partial
    // quotient is undecidable and domain_error when the interval certifies a
    // rational value (expansion terminates).
    const Convergent& next();
    const Convergent& current() const { return conv_; }

  private:
    mpq_class lo_, hi_;
    mpz_class pm1_, qm1_, pm2_, qm2_;
    Convergent conv_;
};

// First convergent with q > q_min.
Convergent cf_expand(const Real& theta, const mpz_class& q_min);

// One application of the reduction lemma: with eps_hat = ||gamma q|| -
// M ||theta q|| > 0 certified, |m theta - n + gamma| < delta a^-m has no
// solutions with log(delta q/eps_hat)/log a <= m <= M, so the bound drops.
// nullopt when eps_hat <= 0 or undecidable (advance to the next convergent).
std::optional<mpz_class> reduction_step(const Real& theta, const Real& gamma, const Real& delta,
                                        const mpq_class& a, const mpz_class& M_bound,
                                        const Convergent& conv, Real* eps_out = nullptr);

struct ReducePrecision {
    mpfr_prec_t start = 512;
    mpfr_prec_t cap = 16384;
};

// Both instances for one c: the m-instance (a = 3) with
// theta = log vartheta/log eta, gamma = -log xi/log eta, delta = 1/|log eta|;
// the n-instance (a = 1.55) with the reciprocal data.  Iterates reduction
// with the shrunken bound until a fixed point.
std::pair<ReductionOutcome, ReductionOutcome> reduce_for_c(const QuadInt& c,
                                                           const mpz_class& m_bw,
                                                           const mpz_class& n_bw,
                                                           ReducePrecision prec = {});

// Exact search for u_m = +-u'_n over 1 <= m <= m_max, 1 <= n <= n_max at
// this c; returns all hits as (m, n, sign).
std::vector<std::tuple<long, long, int>> finish_small_indices(const QuadInt& c, long m_max,
                                                              long n_max);

} // namespace relpib
