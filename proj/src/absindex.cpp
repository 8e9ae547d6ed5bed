#include "relpib/absindex.hpp"

#include <array>

#include "relpib/roots.hpp"

namespace relpib {

OrderElement mul_mod_f(const OrderElement& u, const OrderElement& v,
                       const QuarticParams& params) {
    if (u.a.ring() != params.c.ring() || v.a.ring() != params.c.ring())
        throw ring_mismatch_error("order elements must share the parameter ring");
    RingSpec ring = params.c.ring();
    const QuadInt& c = params.c;
    std::array<QuadInt, 7> prod = {QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring),
                                   QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring),
                                   QuadInt::zero(ring)};
    std::array<const QuadInt*, 4> uu = {&u.a, &u.x, &u.y, &u.z};
    std::array<const QuadInt*, 4> vv = {&v.a, &v.x, &v.y, &v.z};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            prod[i + j] += (*uu[i]) * (*vv[j]);
    // reduce degrees 6..4 by xi^4 = 2c xi^3 - 2 xi^2 - 2c xi - 1
    for (size_t d = 6; d >= 4; --d) {
        QuadInt t = prod[d];
        if (!t.is_zero()) {
            prod[d] = QuadInt::zero(ring);
            prod[d - 1] += t * c * 2;
            prod[d - 2] -= t * 2;
            prod[d - 3] -= t * c * 2;
            prod[d - 4] -= t;
        }
    }
    return OrderElement{prod[0], prod[1], prod[2], prod[3]};
}

long QuadIntPoly::degree() const {
    for (size_t i = coeff.size(); i-- > 0;)
        if (!coeff[i].is_zero())
            return static_cast<long>(i);
    return -1;
}

bool QuadIntPoly::is_monic() const {
    long d = degree();
    return d >= 0 && coeff[static_cast<size_t>(d)] == QuadInt::one(coeff[0].ring());
}

bool operator==(const QuadIntPoly& a, const QuadIntPoly& b) {
    long da = a.degree(), db = b.degree();
    if (da != db)
        return false;
    for (long i = 0; i <= da; ++i)
        if (a.coeff[static_cast<size_t>(i)] != b.coeff[static_cast<size_t>(i)])
            return false;
    return true;
}

namespace {

// Polynomials in t with QuadInt coefficients, just enough for a 4x4
// characteristic determinant.
struct TPoly {
    std::vector<QuadInt> c;

    static TPoly zero(RingSpec ring) { return TPoly{{QuadInt::zero(ring)}}; }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        RingSpec ring = a.c.front().ring();
        TPoly r;
        size_t n = std::max(a.c.size(), b.c.size());
        r.c.assign(n, QuadInt::zero(ring));
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c.size())
                r.c[i] += a.c[i];
            if (i < b.c.size())
                r.c[i] += b.c[i];
        }
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        RingSpec ring = a.c.front().ring();
        TPoly r;
        size_t n = std::max(a.c.size(), b.c.size());
        r.c.assign(n, QuadInt::zero(ring));
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c.size())
                r.c[i] += a.c[i];
            if (i < b.c.size())
                r.c[i] -= b.c[i];
        }
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        RingSpec ring = a.c.front().ring();
        TPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, QuadInt::zero(ring));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

// 3x3 determinant by cofactor expansion
TPoly det3(const std::array<std::array<TPoly, 3>, 3>& m) {
    TPoly r = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return r;
}

} // namespace

QuadIntPoly char_poly(const OrderElement& alpha, const QuarticParams& params) {
    RingSpec ring = params.c.ring();
    // columns of the multiplication-by-alpha matrix on {1, xi, xi^2, xi^3}
    std::array<OrderElement, 4> basis = {
        OrderElement{QuadInt::one(ring), QuadInt::zero(ring), QuadInt::zero(ring),
                     QuadInt::zero(ring)},
        OrderElement{QuadInt::zero(ring), QuadInt::one(ring), QuadInt::zero(ring),
                     QuadInt::zero(ring)},
        OrderElement{QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::one(ring),
                     QuadInt::zero(ring)},
        OrderElement{QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring),
                     QuadInt::one(ring)}};
    std::array<std::array<QuadInt, 4>, 4> M = {
        {{QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring)},
         {QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring)},
         {QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring)},
         {QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring), QuadInt::zero(ring)}}};
    for (size_t j = 0; j < 4; ++j) {
        OrderElement col = mul_mod_f(alpha, basis[j], params);
        M[0][j] = col.a;
        M[1][j] = col.x;
        M[2][j] = col.y;
        M[3][j] = col.z;
    }
    // det(tI - M) by cofactor expansion along the first row
    auto entry = [&](size_t i, size_t j) {
        TPoly e = TPoly::zero(ring);
        e.c[0] = -M[i][j];
        if (i == j)
            e.c.push_back(QuadInt::one(ring));
        return e;
    };
    TPoly det = TPoly::zero(ring);
    for (size_t j = 0; j < 4; ++j) {
        std::array<std::array<TPoly, 3>, 3> minor = {
            {{TPoly::zero(ring), TPoly::zero(ring), TPoly::zero(ring)},
             {TPoly::zero(ring), TPoly::zero(ring), TPoly::zero(ring)},
             {TPoly::zero(ring), TPoly::zero(ring), TPoly::zero(ring)}}};
        for (size_t r = 1; r < 4; ++r) {
            size_t cc = 0;
            for (size_t col = 0; col < 4; ++col) {
                if (col == j)
                    continue;
                minor[r - 1][cc] = entry(r, col);
                ++cc;
            }
        }
        TPoly term = entry(0, j) * det3(minor);
        if (j % 2 == 0)
            det = det + term;
        else
            det = det - term;
    }
    QuadIntPoly out;
    out.coeff.assign(5, QuadInt::zero(ring));
    for (size_t i = 0; i < det.c.size() && i < 5; ++i)
        out.coeff[i] = det.c[i];
    if (!out.is_monic())
        throw anomaly_error("characteristic polynomial is not monic");
    return out;
}

QuadIntPoly conj_poly(const QuadIntPoly& g) {
    QuadIntPoly out;
    out.coeff.reserve(g.coeff.size());
    for (const QuadInt& v : g.coeff)
        out.coeff.push_back(v.conj());
    return out;
}

QuadInt resultant(const QuadIntPoly& g, const QuadIntPoly& h) {
    long dg = g.degree(), dh = h.degree();
    if (dg < 1 || dh < 1)
        throw domain_error("resultant needs two nonconstant polynomials");
    if (!g.is_monic() || !h.is_monic())
        throw domain_error("resultant contract: both polynomials monic");
    RingSpec ring = g.coeff[0].ring();
    size_t n = static_cast<size_t>(dg + dh);
    std::vector<std::vector<QuadInt>> S(n, std::vector<QuadInt>(n, QuadInt::zero(ring)));
    // dh rows of g's coefficients, then dg rows of h's
    for (long r = 0; r < dh; ++r)
        for (long i = 0; i <= dg; ++i)
            S[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
                g.coeff[static_cast<size_t>(dg - i)];
    for (long r = 0; r < dg; ++r)
        for (long i = 0; i <= dh; ++i)
            S[static_cast<size_t>(dh + r)][static_cast<size_t>(r + i)] =
                h.coeff[static_cast<size_t>(dh - i)];

    // Bareiss fraction-free elimination; divisions are exact in Z_M.
    QuadInt prev = QuadInt::one(ring);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (S[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && S[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == n)
                return QuadInt::zero(ring); // singular: resultant 0
            std::swap(S[k], S[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                QuadInt numv = S[k][k] * S[i][j] - S[i][k] * S[k][j];
                auto qv = QuadInt::div_exact(numv, prev);
                if (!qv)
                    throw anomaly_error("Bareiss division failed to be exact");
                S[i][j] = *qv;
            }
            S[i][k] = QuadInt::zero(ring);
        }
        prev = S[k][k];
    }
    QuadInt det = S[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

namespace {

struct AbsIndexInputs {
    RingSpec ring;
    QuadInt c;
    OrderElement alpha;
};

AbsIndexInputs build_inputs(long D, long p, long q, long b, const QuadInt& eps, Alpha0 alpha0) {
    if (((-D) % 4 + 4) % 4 != 2 && ((-D) % 4 + 4) % 4 != 3)
        throw inapplicable_error("absolute index computation needs -D = 2, 3 (mod 4)");
    RingSpec ring(D);
    if (eps.ring() != ring || !eps.is_unit())
        throw domain_error("eps must be a unit of Z_M");
    QuadInt c = QuadInt::from_parts(ring, p, q);
    QuarticParams params(c); // validates c not in {0, +-2}
    QuadInt A = QuadInt::from_parts(ring, 0, b);
    OrderElement alpha{A, eps, QuadInt::zero(ring), QuadInt::zero(ring)};
    if (alpha0 == Alpha0::SecondGen) {
        // A + eps (2 xi - 2c xi^2 + xi^3)
        alpha = OrderElement{A, eps * 2, -(eps * c * 2), eps};
    }
    return AbsIndexInputs{ring, c, alpha};
}

} // namespace

AbsIndexVerdict j_alpha_divisibility(long D, long p, long q, long b, const QuadInt& eps,
                                     Alpha0 alpha0) {
    AbsIndexInputs in = build_inputs(D, p, q, b, eps, alpha0);
    QuarticParams params(in.c);
    QuadIntPoly g = char_poly(in.alpha, params);
    QuadInt R = resultant(g, conj_poly(g));
    if (!R.is_rational())
        throw anomaly_error("Res(g, conj g) is not conjugation-fixed");
    mpz_class r_int = R.x() / 2; // rational integer embedded as (2n, 0)

    AbsIndexVerdict v{D, p, q, b, eps, alpha0, r_int, false, 0, false};
    mpz_class d2 = mpz_class(D) * D;
    v.divisible_4096D2 = (r_int % (4096 * d2) == 0);
    mpz_class denom = 16 * d2;
    mpz_class r_abs = abs(r_int);
    if (r_abs % denom == 0) {
        v.J = r_abs / denom;
        v.divisible_256 = (v.J % 256 == 0);
    }
    return v;
}

Real conjugate_product_numeric(long D, long p, long q, long b, const QuadInt& eps, Alpha0 alpha0,
                               mpfr_prec_t prec) {
    AbsIndexInputs in = build_inputs(D, p, q, b, eps, alpha0);
    // roots of f for c and for conj(c); alpha evaluated at each root
    auto roots_for = [&](const QuadInt& cc) {
        Complex c_ball = cc.embed(prec);
        Complex two = Complex::exact(2, 0, prec);
        std::vector<Complex> low = {Complex::exact(1, 0, prec), two * c_ball, two,
                                    -(two * c_ball)};
        return certified_roots(low, prec);
    };
    std::vector<Complex> xi1 = roots_for(in.c);
    std::vector<Complex> xi2 = roots_for(in.c.conj());

    auto alpha_at = [&](const OrderElement& a, const Complex& t, bool conjugate) {
        auto emb = [&](const QuadInt& v) {
            return conjugate ? v.conj().embed(prec) : v.embed(prec);
        };
        Complex t2 = t * t;
        return emb(a.a) + emb(a.x) * t + emb(a.y) * t2 + emb(a.z) * t2 * t;
    };
    Real prod = Real::exact(1L, prec);
    for (const Complex& t1 : xi1)
        for (const Complex& t2 : xi2) {
            Complex a1 = alpha_at(in.alpha, t1, false);
            Complex a2 = alpha_at(in.alpha, t2, true);
            prod = prod * (a1 - a2).abs();
        }
    return prod;
}

} // namespace relpib
