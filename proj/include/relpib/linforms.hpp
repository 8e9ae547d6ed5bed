#pragma once

#include <array>
#include <utility>

#include "relpib/ball.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// Replace c by -c when Re(c) < 0 (V and Z swap roles in the Pellian
// system); second component records whether the swap happened.
std::pair<QuadInt, bool> normalize_c(const QuadInt& c);

// Re-export of the ball primitive; the branch convention -pi < arg <= pi
// lives in Complex::sqrt.
Complex principal_sqrt(const Complex& z);

// The logarithm data of the linear form
//   Lambda = n log eta - m log vartheta + log xi_const
// with eta = |c-1+sqrt(c)sqrt(c-2)|, vartheta = |c+1+sqrt(c(c+2))|,
// xi_const = |sqrt(c+2)(sqrt(c)+sqrt(c-2)) / (sqrt(c-2)(sqrt(c)+sqrt(c+2)))|.
// eta > 1 and vartheta > 1 are certified at construction.
struct LinFormInstance {
    QuadInt c;
    Real eta, vartheta, xi_const;
};

LinFormInstance make_linform_instance(const QuadInt& c, mpfr_prec_t prec);

// Dominant-root magnitudes behind u_m and u'_n:
//   P = (c + sqrt(c(c+2))) (c+1+sqrt(c(c+2)))^m / sqrt(c+2)
//   Q = (c + sqrt(c) sqrt(c-2)) (c-1+sqrt(c) sqrt(c-2))^n / sqrt(c-2)
// The split square roots in Q realize the branch bookkeeping for both
// Re(c) regimes.  Require Re(c) >= 0 and c not in {0,1,2,-1,-2}.
Complex build_P(const QuadInt& c, long m, mpfr_prec_t prec);
Complex build_Q(const QuadInt& c, long n, mpfr_prec_t prec);

// Lambda = log|Q| - log|P|, cross-checked against the three-logarithm form.
Real lambda_value(const QuadInt& c, long m, long n, mpfr_prec_t prec);

// (3^-m, 1.55^-n); valid bounds on |Lambda| under the intersection
// hypothesis u_m = +-u'_n with m, n >= 2 and |c| >= sqrt(2).
std::pair<Real, Real> lambda_upper_bounds(const QuadInt& c, long m, long n,
                                          mpfr_prec_t prec = 128);

enum class LambdaStatus { NonzeroCertified, ZeroPossible_ReZero };

// Lambda != 0 iff Re(c) != 0 (exact coordinate test); the Re(c) = 0 cases
// are closed without Baker theory.
LambdaStatus lambda_nonzero(const QuadInt& c);

// Certifies that u_1 = +-u'_n and u'_1 = +-u_m are impossible for m, n >= 2
// (and that u_1 != +-u'_1 exactly).
bool exclude_index_one(const QuadInt& c, mpfr_prec_t prec);

// Recomputed Baker-Wustholz data: the constant (certified < 8.6e34) and the
// index caps m < 6.7e36, n < 1.715e37.
struct BwBounds {
    mpz_class m_max, n_max;
    Real bw_constant;
};

BwBounds bw_global_bounds(mpfr_prec_t prec);

// Closed-form Weil height bounds (h(eta), h(vartheta), h(xi_const)); checked
// against the uniform caps 28.12 / 271.82 used by the global bound.
std::array<Real, 3> height_bounds(const QuadInt& c, mpfr_prec_t prec);

// u_m recovered from P as (eps/(2 sqrt c))(P + (2c/(c+2)) P^-1); the
// enclosure is checked to meet embed(u_m).
Complex reconstruct_u_from_P(const QuadInt& c, const QuadInt& eps, long m, mpfr_prec_t prec);
// u'_n recovered from Q as (eps/(2 sqrt c))(Q - (2c/(c-2)) Q^-1), up to sign.
Complex reconstruct_uprime_from_Q(const QuadInt& c, const QuadInt& eps, long n, mpfr_prec_t prec);

} // namespace relpib
