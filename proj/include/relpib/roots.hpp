#pragma once

#include <vector>

#include "relpib/ball.hpp"

namespace relpib {

// Certified enclosures of all complex roots of a monic polynomial given by
// its coefficient balls c[0] + c[1] x + ... + c[n-1] x^(n-1) + x^n (the
// leading 1 is implicit; pass the n lower coefficients).
//
// Approximations come from Durand-Kerner iteration; each is then certified
// by the disk bound |root - z| <= n |p(z)/p'(z)|, evaluated in ball
// arithmetic.  When the n certified disks are pairwise disjoint each
// contains exactly one root, so together they cover every root.  Throws
// precision_error when certification fails at this precision (in particular
// for polynomials with multiple roots; square-free-reduce first).
std::vector<Complex> certified_roots(const std::vector<Complex>& low_coeffs, mpfr_prec_t prec);

} // namespace relpib
