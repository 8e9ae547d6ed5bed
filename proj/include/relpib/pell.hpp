#pragma once

#include <vector>

#include "relpib/ball.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// The unit pair (mu, eps) of the Pellian classification: eps^2 = mu and
// solutions of (k-1)x^2 - (k+1)y^2 = -2 mu start at x_0 = eps.
struct MuEps {
    QuadInt mu, eps;
};

// (1,1) always; plus (-1, i) for D = 1; plus (w, w^2), (w^2, w) for D = 3.
std::vector<MuEps> admissible_mu_eps(RingSpec ring);

enum class SeqKind { UPlus, VPlus, UMinus, ZMinus };

// Second-order recurrence state for the four solution sequences
//   u: eps, eps(2c+1), step 2c+2     v: eps, eps(2c+3), step 2c+2
//   u': eps, eps(2c-1), step 2c-2    z: eps, eps(2c-3), step 2c-2
struct SeqState {
    SeqKind kind;
    long index;
    QuadInt current, previous;
};

SeqState seq_start(SeqKind kind, const QuadInt& c, const QuadInt& eps);
SeqState seq_next(const SeqState& s, const QuadInt& c);

QuadInt u_seq(const QuadInt& c, const QuadInt& eps, long m);
QuadInt v_seq(const QuadInt& c, const QuadInt& eps, long m);
QuadInt uprime_seq(const QuadInt& c, const QuadInt& eps, long n);
QuadInt z_seq(const QuadInt& c, const QuadInt& eps, long n);

// c V^2 - (c+2) U^2 + 2 mu  and  (c-2) U^2 - c Z^2 + 2 mu; zero iff solution.
QuadInt pell_residual_1(const QuadInt& U, const QuadInt& V, const QuadInt& c, const QuadInt& mu);
QuadInt pell_residual_2(const QuadInt& U, const QuadInt& Z, const QuadInt& c, const QuadInt& mu);

// Closed form of u_m (resp. u'_n) via c+1+-sqrt(c(c+2)) (resp. c-1+-sqrt(c(c-2)));
// requires Re(c) >= 0.  The returned ball is checked to overlap the exact
// recurrence value.
Complex closed_form_u(const QuadInt& c, const QuadInt& eps, long m, mpfr_prec_t prec);
Complex closed_form_uprime(const QuadInt& c, const QuadInt& eps, long n, mpfr_prec_t prec);

// Exact check of (2|c|-3)^k <= |seq_k| <= (2|c|+3)^k for k <= n_max, done on
// norms in Q(sqrt(norm c)) with rational arithmetic.  kind selects u or u'.
bool growth_bounds_check(const QuadInt& c, const QuadInt& eps, SeqKind kind, long n_max);

// eps (1 + m(m+1) c)  and  (-1)^n eps (1 - n(n+1) c): the residues of u_m,
// u'_n modulo 4c^2.
QuadInt congruence_residue_u(long m, const QuadInt& c, const QuadInt& eps);
QuadInt congruence_residue_uprime(long n, const QuadInt& c, const QuadInt& eps);

// sqrt(2|c| + 0.25) - 0.5: any intersection u_m = +-u'_n with (m, n) != (0, 0)
// has m or n at least this value.  Requires c not in S_c.
Real min_nontrivial_index(const QuadInt& c, mpfr_prec_t prec = 128);

// (2|c|-3)^(sqrt(2|c|+0.25)-0.5), a lower bound on |U| for any solution
// U not in {+-eps}.  Requires c not in S_c and |c| >= 2.
Real lower_bound_U(const QuadInt& c, mpfr_prec_t prec = 128);

} // namespace relpib
