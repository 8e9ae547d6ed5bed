#include "relpib/forms.hpp"

#include <array>

#include "relpib/roots.hpp"

namespace relpib {

QuarticParams::QuarticParams(QuadInt c_) : c(std::move(c_)) {
    if (c.is_zero() || c == QuadInt::integer(c.ring(), 2) || c == QuadInt::integer(c.ring(), -2))
        throw domain_error("c in {0, 2, -2} makes the quartic reducible");
}

bool operator==(const GeneratorTriple& a, const GeneratorTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

QuadInt cubic_form_F(const QuadInt& u, const QuadInt& v, const QuarticParams& params) {
    const QuadInt& c = params.c;
    QuadInt f1 = u + v * 2;
    QuadInt f2 = u - (c + 1) * v * 2;
    QuadInt f3 = u + (c - 1) * v * 2;
    QuadInt factored = f1 * f2 * f3;
    // generic binary cubic of the method: u^3 - a2 u^2 v + (a1 a3 - 4 a4) u v^2
    //                                     + (4 a2 a4 - a3^2 - a1^2 a4) v^3
    QuadInt a1 = params.a1(), a2 = params.a2(), a3 = params.a3(), a4 = params.a4();
    QuadInt generic = u * u * u - a2 * u * u * v + (a1 * a3 - a4 * 4) * u * v * v +
                      (a2 * a4 * 4 - a3 * a3 - a1 * a1 * a4) * v * v * v;
    if (factored != generic)
        throw anomaly_error("cubic form specialization mismatch");
    return factored;
}

QuadInt q1(const QuadInt& x, const QuadInt& y, const QuadInt& z, const QuarticParams& params) {
    const QuadInt& c = params.c;
    QuadInt cc = c * c;
    QuadInt spec = x * x + c * x * y * 2 + y * y * 2 + (cc - 1) * x * z * 4 + c * y * z * 6 +
                   (cc * 4 + 5) * z * z;
    QuadInt a1 = params.a1(), a2 = params.a2(), a3 = params.a3(), a4 = params.a4();
    QuadInt generic = x * x - x * y * a1 + y * y * a2 + x * z * (a1 * a1 - a2 * 2) +
                      y * z * (a3 - a1 * a2) + z * z * (a2 * a2 + a4 - a1 * a3);
    if (spec != generic)
        throw anomaly_error("Q1 specialization mismatch");
    return spec;
}

QuadInt q2(const QuadInt& x, const QuadInt& y, const QuadInt& z, const QuarticParams& params) {
    const QuadInt& c = params.c;
    QuadInt spec = y * y - x * z + c * y * z * 2 + z * z * 2;
    QuadInt generic = y * y - x * z - y * z * params.a1() + params.a2() * z * z;
    if (spec != generic)
        throw anomaly_error("Q2 specialization mismatch");
    return spec;
}

std::vector<std::pair<QuadInt, QuadInt>> solve_relative_cubic(const QuarticParams& params) {
    // (u+2v), (u-2(c+1)v), (u+2(c-1)v) all units forces v = 0, so the
    // classes are exactly (eta, 0).
    std::vector<std::pair<QuadInt, QuadInt>> out;
    QuadInt zero = QuadInt::zero(params.c.ring());
    for (const QuadInt& eta : units(params.c.ring())) {
        if (!cubic_form_F(eta, zero, params).is_unit())
            throw anomaly_error("F(eta, 0) failed to be a unit");
        out.emplace_back(eta, zero);
    }
    return out;
}

QuadInt thue_lhs(const QuadInt& p, const QuadInt& q, const QuarticParams& params) {
    const QuadInt& c = params.c;
    QuadInt p2 = p * p, q2_ = q * q;
    return p2 * p2 - c * p2 * p * q * 2 + p2 * q2_ * 2 + c * p * q * q2_ * 2 + q2_ * q2_;
}

UVZ uvz_from_pq(const QuadInt& p, const QuadInt& q) {
    QuadInt p2 = p * p, q2_ = q * q, pq = p * q;
    return UVZ{p2 + q2_, p2 + pq * 2 - q2_, -p2 + pq * 2 + q2_};
}

GeneratorTriple generator_from_pq(const QuadInt& p, const QuadInt& q,
                                  const QuarticParams& params) {
    QuadInt mu = thue_lhs(p, q, params);
    if (!mu.is_unit())
        throw not_a_solution_error("(p, q) does not solve the relative Thue equation");
    const QuadInt& c = params.c;
    QuadInt q2_ = q * q;
    GeneratorTriple g{q2_ * 2 + p * p - c * p * q * 2, p * q - c * q2_ * 2, q2_};
    if (!q2(g.x, g.y, g.z, params).is_zero())
        throw anomaly_error("generator candidate has Q2 != 0");
    if (q1(g.x, g.y, g.z, params) != mu)
        throw anomaly_error("generator candidate has Q1 != thue value");
    return g;
}

namespace {

// Display order: rational values first, then positive real part before zero
// before negative; makes the orbit representative come out as (1,0,0) and
// (2,-2c,1) rather than unit multiples of them.
int sign_rank(const mpz_class& v) { return v > 0 ? 0 : (v == 0 ? 1 : 2); }

int display_cmp(const QuadInt& a, const QuadInt& b) {
    int c = cmp(a.norm(), b.norm());
    if (c != 0)
        return c;
    c = (a.y() == 0 ? 0 : 1) - (b.y() == 0 ? 0 : 1);
    if (c != 0)
        return c;
    c = sign_rank(a.x()) - sign_rank(b.x());
    if (c != 0)
        return c;
    c = sign_rank(a.y()) - sign_rank(b.y());
    if (c != 0)
        return c;
    return QuadInt::cmp(a, b);
}

} // namespace

GeneratorTriple normalize_generator(const GeneratorTriple& g) {
    GeneratorTriple best = g;
    bool have = false;
    auto key_less = [](const GeneratorTriple& a, const GeneratorTriple& b) {
        int c = display_cmp(a.x, b.x);
        if (c != 0)
            return c < 0;
        c = display_cmp(a.y, b.y);
        if (c != 0)
            return c < 0;
        return display_cmp(a.z, b.z) < 0;
    };
    for (const QuadInt& eta : units(g.x.ring())) {
        GeneratorTriple cand{eta * g.x, eta * g.y, eta * g.z};
        if (!have || key_less(cand, best)) {
            best = cand;
            have = true;
        }
    }
    return best;
}

bool same_unit_orbit(const GeneratorTriple& a, const GeneratorTriple& b) {
    return normalize_generator(a) == normalize_generator(b);
}

Real relative_index_numeric(const GeneratorTriple& g, const QuarticParams& params,
                            mpfr_prec_t prec) {
    if (prec < 64)
        throw domain_error("relative_index_numeric needs prec >= 64");
    // roots of f(t) = t^4 - 2c t^3 + 2 t^2 + 2c t + 1
    Complex c = params.c.embed(prec);
    Complex two = Complex::exact(2, 0, prec);
    std::vector<Complex> low = {
        Complex::exact(1, 0, prec), // t^0
        two * c,                    // t^1
        two,                        // t^2
        -(two * c),                 // t^3
    };
    std::vector<Complex> xi = certified_roots(low, prec);

    Complex gx = g.x.embed(prec), gy = g.y.embed(prec), gz = g.z.embed(prec);
    std::array<Complex, 4> alpha = {Complex::exact(0, 0, prec), Complex::exact(0, 0, prec),
                                    Complex::exact(0, 0, prec), Complex::exact(0, 0, prec)};
    for (size_t j = 0; j < 4; ++j) {
        Complex t = xi[j];
        Complex t2 = t * t;
        alpha[j] = gx * t + gy * t2 + gz * t2 * t;
    }
    // product of pairwise |alpha_i - alpha_j| and |xi_i - xi_j|^2; both
    // conjugate embeddings of M contribute the same absolute value, and
    // sqrt|N(disc f)| = |disc_c f|, so I = prod_alpha^2 / prod_disc.
    Real prod_alpha = Real::exact(1L, prec);
    Real disc = Real::exact(1L, prec);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            prod_alpha = prod_alpha * (alpha[i] - alpha[j]).abs();
            disc = disc * (xi[i] - xi[j]).abs_sq();
        }
    }
    return prod_alpha.sqr() / disc;
}

} // namespace relpib
