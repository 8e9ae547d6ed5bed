#pragma once

#include <utility>
#include <vector>

#include "relpib/ball.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// The quartic f(t) = t^4 - 2c t^3 + 2 t^2 + 2c t + 1.  Its coefficients
// (a1, a2, a3, a4) = (-2c, 2, 2c, 1) feed the generic Gaal-Pohst forms.
struct QuarticParams {
    QuadInt c;
    explicit QuarticParams(QuadInt c_);
    QuadInt a1() const { return c * -2; }
    QuadInt a2() const { return QuadInt::integer(c.ring(), 2); }
    QuadInt a3() const { return c * 2; }
    QuadInt a4() const { return QuadInt::one(c.ring()); }
};

// alpha = x xi + y xi^2 + z xi^3
struct GeneratorTriple {
    QuadInt x, y, z;
};

bool operator==(const GeneratorTriple& a, const GeneratorTriple& b);

// Cubic form F(u, v) = (u+2v)(u-2(c+1)v)(u+2(c-1)v).  Also evaluated through
// the generic cubic of the method and cross-asserted.
QuadInt cubic_form_F(const QuadInt& u, const QuadInt& v, const QuarticParams& params);

// Q1 = x^2+2cxy+2y^2+4(c^2-1)xz+6cyz+(4c^2+5)z^2,  Q2 = y^2-xz+2cyz+2z^2,
// both cross-asserted against the generic ternary forms.
QuadInt q1(const QuadInt& x, const QuadInt& y, const QuadInt& z, const QuarticParams& params);
QuadInt q2(const QuadInt& x, const QuadInt& y, const QuadInt& z, const QuarticParams& params);

// All solution classes of F(u, v) = unit: exactly (eta, 0) for each unit eta.
std::vector<std::pair<QuadInt, QuadInt>> solve_relative_cubic(const QuarticParams& params);

// p^4 - 2c p^3 q + 2 p^2 q^2 + 2c p q^3 + q^4
QuadInt thue_lhs(const QuadInt& p, const QuadInt& q, const QuarticParams& params);

struct UVZ {
    QuadInt U, V, Z;
};

// U = p^2+q^2, V = p^2+2pq-q^2, Z = -p^2+2pq+q^2
UVZ uvz_from_pq(const QuadInt& p, const QuadInt& q);

// The generator triple attached to a Thue solution (p, q); requires
// thue_lhs(p, q) to be a unit.  Postconditions q2 = 0 and q1 = unit are
// verified exactly before returning.
GeneratorTriple generator_from_pq(const QuadInt& p, const QuadInt& q, const QuarticParams& params);

// Canonical representative of the unit orbit {eta * (x, y, z)}.
GeneratorTriple normalize_generator(const GeneratorTriple& g);

bool same_unit_orbit(const GeneratorTriple& a, const GeneratorTriple& b);

// Certified numeric value of the relative index I_{O/M}(alpha); the ball
// contains 1 exactly when alpha generates a relative power integral basis.
// Cross-check only; the exact tests q1 = unit, q2 = 0 are decisive.
Real relative_index_numeric(const GeneratorTriple& g, const QuarticParams& params,
                            mpfr_prec_t prec);

} // namespace relpib
