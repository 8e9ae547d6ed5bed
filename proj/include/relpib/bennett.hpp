#pragma once

#include <array>
#include <vector>

#include "relpib/ball.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// Parameters of the simultaneous-approximation theorem specialized to
// theta_i = sqrt(1 + a_i/c), a = (2, -2), M = 2, m = 2, T = c, plus the
// derived exponent gap and the |U| window it produces.
struct BennettReport {
    Real c_abs;
    Real l, L, p_small, P_big, lambda, C_inv;
    bool theorem_applicable = false;        // L > 1 certified
    bool two_minus_lambda_positive = false; // f(|c|) = 2 - lambda > 0 certified
    Real upper_log_U, lower_log_U;
    bool excludes_nontrivial = false;
};

// l = (27/64)|c|/(|c|-2), L = (27/4096)(|c|-2)^2, p = sqrt((|c|+3)/(|c|-2)),
// P = 1024(|c|+3), lambda = 1 + log P/log L,
// C^-1 = 4096(|c|+3) sqrt((|c|+3)/(|c|-2)).
BennettReport bennett_params(const Real& c_abs);

// 2 / sqrt(|c|(|c|-2)) * |U|^-2: quality of V/U and Z/U as approximations.
Real approximation_bound(const Real& c_abs, const Real& U_abs);

// Certified comparison of the congruence lower bound against the
// approximation upper bound on log |U|:
//   (sqrt(2|c|+0.25)-0.5) log(2|c|-3)  >=  log(2 C^-1/sqrt(|c|(|c|-2))) / (2-lambda)
// True means only the trivial solutions (+-eps, +-eps, +-eps) survive.
bool resolve_large_c(const Real& c_abs);

// Same, filling the full report.
BennettReport resolve_large_c_report(const Real& c_abs);

// The 8 sign combinations (+-eps, +-eps, +-eps); each satisfies both Pell
// residuals exactly (asserted).
std::vector<std::array<QuadInt, 3>> trivial_solution_set(RingSpec ring, const QuadInt& mu);

// Thue solution lists once only trivial Pellian solutions remain:
//   mu = 1:   {(0,+-1),(+-1,0)} plus {(0,+-i),(+-i,0)} when D = 1
//   mu = -1:  empty
//   mu = w:   {(0,+-w),(+-w,0)}     (D = 3)
//   mu = w^2: {(0,+-w^2),(+-w^2,0)} (D = 3)
std::vector<std::pair<QuadInt, QuadInt>> thue_solutions_large_c(RingSpec ring, const QuadInt& mu);

} // namespace relpib
