#include "relpib/pell.hpp"

namespace relpib {

std::vector<MuEps> admissible_mu_eps(RingSpec ring) {
    std::vector<MuEps> out;
    out.push_back(MuEps{QuadInt::integer(ring, 1), QuadInt::integer(ring, 1)});
    if (ring.D() == 1) {
        out.push_back(MuEps{QuadInt::integer(ring, -1), unit_value(ring, UnitRoot::I)});
    } else if (ring.D() == 3) {
        out.push_back(MuEps{unit_value(ring, UnitRoot::Omega), unit_value(ring, UnitRoot::OmegaSq)});
        out.push_back(MuEps{unit_value(ring, UnitRoot::OmegaSq), unit_value(ring, UnitRoot::Omega)});
    }
    return out;
}

namespace {

// first two terms and the recurrence multiplier for each kind
struct SeqDef {
    long b1;   // u_1 = eps(2c + b1)
    long step; // multiplier 2c + step
};

SeqDef seq_def(SeqKind kind) {
    switch (kind) {
    case SeqKind::UPlus:
        return {1, 2};
    case SeqKind::VPlus:
        return {3, 2};
    case SeqKind::UMinus:
        return {-1, -2};
    case SeqKind::ZMinus:
        return {-3, -2};
    }
    throw domain_error("unknown sequence kind");
}

} // namespace

SeqState seq_start(SeqKind kind, const QuadInt& c, const QuadInt& eps) {
    SeqDef d = seq_def(kind);
    (void)d;
    return SeqState{kind, 0, eps, QuadInt::zero(c.ring())};
}

SeqState seq_next(const SeqState& s, const QuadInt& c) {
    SeqDef d = seq_def(s.kind);
    if (s.index == 0) {
        // term_1 = term_0 * (2c + b1) since term_0 = eps
        QuadInt t1 = s.current * (c * 2 + d.b1);
        return SeqState{s.kind, 1, t1, s.current};
    }
    QuadInt nxt = (c * 2 + d.step) * s.current - s.previous;
    return SeqState{s.kind, s.index + 1, nxt, s.current};
}

namespace {

QuadInt seq_term(SeqKind kind, const QuadInt& c, const QuadInt& eps, long k) {
    if (k < 0)
        throw domain_error("sequence index must be >= 0");
    SeqState s = seq_start(kind, c, eps);
    while (s.index < k)
        s = seq_next(s, c);
    return s.current;
}

} // namespace

QuadInt u_seq(const QuadInt& c, const QuadInt& eps, long m) {
    return seq_term(SeqKind::UPlus, c, eps, m);
}
QuadInt v_seq(const QuadInt& c, const QuadInt& eps, long m) {
    return seq_term(SeqKind::VPlus, c, eps, m);
}
QuadInt uprime_seq(const QuadInt& c, const QuadInt& eps, long n) {
    return seq_term(SeqKind::UMinus, c, eps, n);
}
QuadInt z_seq(const QuadInt& c, const QuadInt& eps, long n) {
    return seq_term(SeqKind::ZMinus, c, eps, n);
}

QuadInt pell_residual_1(const QuadInt& U, const QuadInt& V, const QuadInt& c, const QuadInt& mu) {
    return c * V * V - (c + 2) * U * U + mu * 2;
}

QuadInt pell_residual_2(const QuadInt& U, const QuadInt& Z, const QuadInt& c, const QuadInt& mu) {
    return (c - 2) * U * U - c * Z * Z + mu * 2;
}

namespace {

Complex closed_form(const QuadInt& c, const QuadInt& eps, long k, long shift, mpfr_prec_t prec) {
    if (prec < 64)
        throw domain_error("closed form needs prec >= 64");
    if (c.re_sign() < 0)
        throw domain_error("closed form requires Re(c) >= 0");
    if (k < 0)
        throw domain_error("sequence index must be >= 0");
    Complex cc = c.embed(prec);
    Complex sh = Complex::exact(shift, 0, prec);
    Complex one = Complex::exact(1, 0, prec);
    Complex g = (cc * (cc + sh)).sqrt(); // sqrt(c(c +- 2)), principal
    Complex lam_p = cc + (shift > 0 ? one : -one) + g;
    Complex lam_m = cc + (shift > 0 ? one : -one) - g;
    Complex e = eps.embed(prec);
    Complex num = (cc + g) * lam_p.pow_ui(static_cast<unsigned long>(k)) -
                  (cc - g) * lam_m.pow_ui(static_cast<unsigned long>(k));
    Complex val = e * num / (g * Complex::exact(2, 0, prec));
    return val;
}

} // namespace

Complex closed_form_u(const QuadInt& c, const QuadInt& eps, long m, mpfr_prec_t prec) {
    Complex val = closed_form(c, eps, m, 2, prec);
    if (!val.overlaps(u_seq(c, eps, m).embed(prec)))
        throw precision_error("closed form of u_m failed to meet the exact value");
    return val;
}

Complex closed_form_uprime(const QuadInt& c, const QuadInt& eps, long n, mpfr_prec_t prec) {
    Complex val = closed_form(c, eps, n, -2, prec);
    if (!val.overlaps(uprime_seq(c, eps, n).embed(prec)))
        throw precision_error("closed form of u'_n failed to meet the exact value");
    return val;
}

namespace {

// a + b sqrt(r) with rational a, b and fixed rational r > 0; enough to
// compare powers of 2|c| +- 3 against rational norms exactly.
struct Surd {
    mpq_class a, b, r;
    Surd mul(const Surd& o) const {
        return Surd{a * o.a + b * o.b * r, a * o.b + b * o.a, r};
    }
    static Surd pow(Surd base, unsigned long e) {
        Surd acc{1, 0, base.r};
        while (e > 0) {
            if (e & 1UL)
                acc = acc.mul(base);
            e >>= 1UL;
            if (e > 0)
                base = base.mul(base);
        }
        return acc;
    }
    // sign of (a + b sqrt(r)) - t
    int cmp_rational(const mpq_class& t) const {
        mpq_class d = a - t;
        if (b == 0)
            return sgn(d);
        if (b > 0) {
            if (d >= 0)
                return 1;
            // need b sqrt(r) vs -d, both positive
            return ::cmp(b * b * r, d * d);
        }
        if (d <= 0)
            return -1;
        return -::cmp(b * b * r, d * d);
    }
};

} // namespace

bool growth_bounds_check(const QuadInt& c, const QuadInt& eps, SeqKind kind, long n_max) {
    if (kind != SeqKind::UPlus && kind != SeqKind::UMinus)
        throw domain_error("growth bounds are stated for u and u'");
    mpq_class nc(c.norm());
    if (nc < 4)
        throw domain_error("growth bounds need |c| >= 2");
    // lower base (2|c|-3)^2 = 4 norm(c) + 9 - 12 |c|, upper (2|c|+3)^2
    Surd lo2{4 * nc + 9, -12, nc};
    Surd hi2{4 * nc + 9, 12, nc};
    SeqState s = seq_start(kind, c, eps);
    for (long k = 0; k <= n_max; ++k) {
        mpq_class nk(s.current.norm());
        if (Surd::pow(lo2, static_cast<unsigned long>(k)).cmp_rational(nk) > 0)
            return false;
        if (Surd::pow(hi2, static_cast<unsigned long>(k)).cmp_rational(nk) < 0)
            return false;
        s = seq_next(s, c);
    }
    return true;
}

QuadInt congruence_residue_u(long m, const QuadInt& c, const QuadInt& eps) {
    if (m < 0)
        throw domain_error("index must be >= 0");
    mpz_class mm(m);
    return eps * (c * (mm * (mm + 1)) + 1);
}

QuadInt congruence_residue_uprime(long n, const QuadInt& c, const QuadInt& eps) {
    if (n < 0)
        throw domain_error("index must be >= 0");
    mpz_class nn(n);
    QuadInt base = eps * (QuadInt::one(c.ring()) - c * (nn * (nn + 1)));
    return (n % 2 == 0) ? base : -base;
}

Real min_nontrivial_index(const QuadInt& c, mpfr_prec_t prec) {
    if (in_Sc(c))
        throw inapplicable_error("congruence lower bound does not apply for c in S_c");
    Real cabs = Real::exact(c.norm(), prec).sqrt();
    Real q = Real::of_rational(mpq_class(1, 4), prec);
    Real half = Real::of_rational(mpq_class(1, 2), prec);
    return (cabs + cabs + q).sqrt() - half;
}

Real lower_bound_U(const QuadInt& c, mpfr_prec_t prec) {
    Real e = min_nontrivial_index(c, prec);
    Real cabs = Real::exact(c.norm(), prec).sqrt();
    Real base = cabs + cabs - Real::exact(3L, prec);
    if (!base.certainly_positive())
        throw inapplicable_error("lower bound on |U| needs 2|c| - 3 > 0");
    return Real::pow(base, e);
}

} // namespace relpib
