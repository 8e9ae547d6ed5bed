#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relpib/ball.hpp"
#include "relpib/errors.hpp"

namespace relpib {

// Which order Z_M is, determined by D mod 4:
//   Full: -D = 1 (mod 4), ring Z[(1+sqrt(-D))/2]
//   Half: -D = 2, 3 (mod 4), ring Z[sqrt(-D)]
enum class Lattice { Half, Full };

class RingSpec {
  public:
    explicit RingSpec(long D);
    long D() const { return d_; }
    Lattice lattice() const { return lat_; }
    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.d_ == b.d_; }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return a.d_ != b.d_; }

  private:
    long d_;
    Lattice lat_;
};

// Element (x + y*sqrt(-D))/2 in half-coordinates.  Invariants: in the Full
// lattice x = y (mod 2); in the Half lattice both x and y are even.
class QuadInt {
  public:
    QuadInt(RingSpec ring, mpz_class x, mpz_class y);
    // a + b*sqrt(-D)
    static QuadInt from_parts(RingSpec ring, const mpz_class& a, const mpz_class& b);
    // a + b*w in the ring's integral basis {1, w}
    static QuadInt from_basis(RingSpec ring, const mpz_class& a, const mpz_class& b);
    static QuadInt integer(RingSpec ring, const mpz_class& n);
    static QuadInt zero(RingSpec ring) { return integer(ring, 0); }
    static QuadInt one(RingSpec ring) { return integer(ring, 1); }

    const RingSpec& ring() const { return ring_; }
    const mpz_class& x() const { return x_; }
    const mpz_class& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }
    bool is_unit() const;
    // Real part doubled: 2*Re = x, exact.
    int re_sign() const { return sgn(x_); }

    friend QuadInt operator+(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
    QuadInt operator-() const;
    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);
    friend QuadInt operator*(const QuadInt& a, const mpz_class& k);
    friend QuadInt operator*(const QuadInt& a, long k);
    friend QuadInt operator+(const QuadInt& a, long k);
    friend QuadInt operator-(const QuadInt& a, long k);

    friend bool operator==(const QuadInt& a, const QuadInt& b);
    friend bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

    QuadInt conj() const;
    mpz_class norm() const; // a * conj(a), exact nonnegative integer
    mpz_class abs_sq() const { return norm(); }

    // Exact division in Z_M; nullopt when b does not divide a.
    static std::optional<QuadInt> div_exact(const QuadInt& a, const QuadInt& b);

    // Exact square root in Z_M, if one exists (returned with x > 0, or
    // y > 0 when x = 0; the other root is its negative).
    static std::optional<QuadInt> sqrt_exact(const QuadInt& a);

    // Total order (norm, x, y); fixes enumeration and report layouts.
    static int cmp(const QuadInt& a, const QuadInt& b);

    Complex embed(mpfr_prec_t prec) const;

    std::string str() const; // element syntax "a+b*w"
    static QuadInt parse(RingSpec ring, const std::string& s);

  private:
    RingSpec ring_;
    mpz_class x_, y_;
    void check_invariant() const;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& v);

bool congruent(const QuadInt& a, const QuadInt& b, const QuadInt& d);

// Roots of unity available in some Z_M.
enum class UnitRoot { One, MinusOne, I, MinusI, Omega, OmegaSq, MinusOmega, MinusOmegaSq };
QuadInt unit_value(RingSpec ring, UnitRoot u); // throws domain_error if absent

// {+-1}, plus {+-i} for D=1, plus {+-w, +-w^2} for D=3.
std::vector<QuadInt> units(RingSpec ring);

// All c in Z_M with |c| <= radius, ordered by (norm, x, y).
std::vector<QuadInt> enumerate_disk(RingSpec ring, const mpq_class& radius);

// The exceptional parameter sets of the classification.
bool in_Sc(const QuadInt& c);
bool in_T(const QuadInt& c);
bool in_T1(const QuadInt& c);

} // namespace relpib
