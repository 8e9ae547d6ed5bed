#pragma once

#include <string>
#include <vector>

#include "relpib/ball.hpp"
#include "relpib/forms.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// Element a + x xi + y xi^2 + z xi^3 of the order Z_M[xi].
struct OrderElement {
    QuadInt a, x, y, z;
};

// Product in Z_M[xi] reduced by xi^4 = 2c xi^3 - 2 xi^2 - 2c xi - 1.
OrderElement mul_mod_f(const OrderElement& u, const OrderElement& v, const QuarticParams& params);

// Polynomial with coefficients in Z_M; index = degree.
struct QuadIntPoly {
    std::vector<QuadInt> coeff;

    long degree() const;
    bool is_monic() const;
    friend bool operator==(const QuadIntPoly& a, const QuadIntPoly& b);
};

// Monic degree-4 characteristic polynomial of alpha acting on {1, xi, xi^2,
// xi^3}, computed as an exact 4x4 determinant over Z_M[t].
QuadIntPoly char_poly(const OrderElement& alpha, const QuarticParams& params);

// Coefficient-wise conjugation.
QuadIntPoly conj_poly(const QuadIntPoly& g);

// Resultant of two monic polynomials via the Sylvester matrix with
// fraction-free (Bareiss) elimination over Z_M.
QuadInt resultant(const QuadIntPoly& g, const QuadIntPoly& h);

enum class Alpha0 { Xi, SecondGen };

struct AbsIndexVerdict {
    long D;
    long p, q, b;
    QuadInt eps;
    Alpha0 alpha0;
    mpz_class R;         // Res(g, conj g), a rational integer
    bool divisible_4096D2;
    mpz_class J;         // |R| / (16 D^2)
    bool divisible_256;
};

// The computational content of the no-absolute-power-basis theorem for one
// parameter tuple: alpha = b sqrt(-D) + eps alpha0 with c = p + q sqrt(-D).
// Requires -D = 2, 3 (mod 4); the constant part of A is fixed to 0 since the
// conjugate product does not depend on it.
AbsIndexVerdict j_alpha_divisibility(long D, long p, long q, long b, const QuadInt& eps,
                                     Alpha0 alpha0);

// Certified numeric product of the sixteen |alpha^(1,j1) - alpha^(2,j2)|;
// equals |R| and cross-checks the exact resultant route.
Real conjugate_product_numeric(long D, long p, long q, long b, const QuadInt& eps, Alpha0 alpha0,
                               mpfr_prec_t prec);

} // namespace relpib
