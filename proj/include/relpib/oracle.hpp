#pragma once

#include <array>
#include <utility>
#include <vector>

#include "relpib/forms.hpp"
#include "relpib/ring.hpp"

namespace relpib {

// Dense integer polynomial; coefficient i multiplies degree i.
struct IntPoly {
    std::vector<mpz_class> c;

    long degree() const; // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    void trim();
    const mpz_class& leading() const;

    static IntPoly constant(long v);
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    QuadInt eval(const QuadInt& v) const;
    IntPoly derivative() const;
};

// U_m and U'_n with u_m = eps U_m(c), u'_n = eps U'_n(c); degree k with
// leading coefficient 2^k.
IntPoly u_poly(long m);
IntPoly uprime_poly(long n);

// All c in Z_M with |c| <= R and U_m(c) = sign * U'_n(c).  Certified complex
// root isolation plus exact lattice verification; degrees capped at 64.
std::vector<QuadInt> intersection_roots(long m, long n, int sign, RingSpec ring,
                                        const mpq_class& R);

// Exhaustive solutions of the relative Thue equation in the H-disk.
std::vector<std::pair<QuadInt, QuadInt>> brute_thue(const QuadInt& c, const QuadInt& mu,
                                                    const mpq_class& H);

// Exhaustive solutions (U, V, Z) of the Pellian system with all coordinates
// in the H-disk; V and Z are recovered from U by exact square roots.
std::vector<std::array<QuadInt, 3>> brute_system(const QuadInt& c, const QuadInt& mu,
                                                 const mpq_class& H);

enum class SpecialCaseStatus { Resolved, Undetermined };

struct SpecialCaseMu {
    QuadInt mu;
    std::vector<std::array<QuadInt, 2>> uz_solutions; // (U, Z) of U^2 + Z^2 = 2mu
    std::vector<std::pair<QuadInt, QuadInt>> thue_solutions;
};

struct SpecialC1Report {
    RingSpec ring;
    QuadInt c; // +1 or -1
    SpecialCaseStatus status;
    std::vector<SpecialCaseMu> mu_cases;
    std::vector<GeneratorTriple> generators; // normalized, deduplicated
    std::string note;
};

// The c = +-1 cases: fully resolved by factorization for D = 1 and D = 3;
// Undetermined otherwise (U^2 + Z^2 = 2 has infinitely many solutions whose
// shape depends on D).
SpecialC1Report special_case_c1(RingSpec ring, int c_value = 1);

} // namespace relpib
