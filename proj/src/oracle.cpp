#include "relpib/oracle.hpp"

#include <algorithm>
#include <set>

#include "relpib/pell.hpp"
#include "relpib/roots.hpp"

namespace relpib {

long IntPoly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != 0)
            return static_cast<long>(i);
    return -1;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

const mpz_class& IntPoly::leading() const {
    long d = degree();
    if (d < 0)
        throw domain_error("zero polynomial has no leading coefficient");
    return c[static_cast<size_t>(d)];
}

IntPoly IntPoly::constant(long v) {
    IntPoly p;
    p.c.assign(1, mpz_class(v));
    p.trim();
    return p;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size())
            r.c[i] += a.c[i];
        if (i < b.c.size())
            r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size())
            r.c[i] += a.c[i];
        if (i < b.c.size())
            r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c.empty() || b.c.empty())
        return IntPoly{};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QuadInt IntPoly::eval(const QuadInt& v) const {
    QuadInt acc = QuadInt::zero(v.ring());
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * v + QuadInt::integer(v.ring(), c[i]);
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c.size() <= 1)
        return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        r.c[i - 1] = c[i] * static_cast<long>(i);
    r.trim();
    return r;
}

namespace {

IntPoly seq_poly(long k, long b1, long step) {
    // P_0 = 1, P_1 = 2x + b1, P_{k+2} = (2x + step) P_{k+1} - P_k
    IntPoly prev = IntPoly::constant(1);
    if (k == 0)
        return prev;
    IntPoly cur;
    cur.c = {mpz_class(b1), mpz_class(2)};
    IntPoly mult;
    mult.c = {mpz_class(step), mpz_class(2)};
    for (long i = 1; i < k; ++i) {
        IntPoly nxt = mult * cur - prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

} // namespace

IntPoly u_poly(long m) {
    if (m < 0)
        throw domain_error("index must be >= 0");
    return seq_poly(m, 1, 2);
}

IntPoly uprime_poly(long n) {
    if (n < 0)
        throw domain_error("index must be >= 0");
    return seq_poly(n, -1, -2);
}

namespace {

// primitive part after exact content removal
IntPoly primitive(IntPoly p) {
    p.trim();
    if (p.c.empty())
        return p;
    mpz_class g = 0;
    for (const auto& v : p.c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : p.c)
            v /= g;
    return p;
}

// pseudo-remainder based gcd over Z (primitive PRS); degrees here are tiny
IntPoly int_gcd(IntPoly a, IntPoly b) {
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        long da = a.degree(), db = b.degree();
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // pseudo-remainder of lc(b)^(da-db+1) * a by b
        mpz_class lb = b.leading();
        IntPoly r = a;
        for (long d = da; d >= db && !r.is_zero(); d = r.degree()) {
            mpz_class lr = r.leading();
            // r = lb * r - lr * x^(d-db) * b
            IntPoly shifted;
            shifted.c.assign(static_cast<size_t>(d - db), 0);
            for (const auto& v : b.c)
                shifted.c.push_back(v * lr);
            for (auto& v : r.c)
                v *= lb;
            r = r - shifted;
        }
        a = b;
        b = primitive(r);
    }
    return primitive(a);
}

// exact division of polynomials over Q, clearing to a primitive result;
// divisor is known to divide the dividend
IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    // rational long division
    std::vector<mpq_class> r(num.c.begin(), num.c.end());
    long dn = num.degree(), dd = den.degree();
    if (dd < 0)
        throw domain_error("division by the zero polynomial");
    std::vector<mpq_class> q(static_cast<size_t>(dn - dd + 1), 0);
    mpq_class lead(den.leading());
    for (long d = dn; d >= dd; --d) {
        mpq_class coef = r[static_cast<size_t>(d)] / lead;
        q[static_cast<size_t>(d - dd)] = coef;
        if (coef != 0)
            for (long i = 0; i <= dd; ++i)
                r[static_cast<size_t>(d - dd + i)] -= coef * mpq_class(den.c[static_cast<size_t>(i)]);
    }
    for (const auto& v : r)
        if (v != 0)
            throw anomaly_error("polynomial division left a remainder");
    // clear denominators
    mpz_class lcm = 1;
    for (const auto& v : q)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IntPoly out;
    out.c.reserve(q.size());
    for (const auto& v : q) {
        mpq_class s = v * mpq_class(lcm);
        out.c.push_back(s.get_num());
    }
    out.trim();
    return primitive(out);
}

} // namespace

std::vector<QuadInt> intersection_roots(long m, long n, int sign, RingSpec ring,
                                        const mpq_class& R) {
    if (m < 1 || n < 1)
        throw domain_error("intersection indices must be >= 1");
    if (m > 64 || n > 64)
        throw domain_error("intersection degree cap is 64");
    if (sign != 1 && sign != -1)
        throw domain_error("sign must be +-1");

    IntPoly g = (sign == 1) ? (u_poly(m) - uprime_poly(n)) : (u_poly(m) + uprime_poly(n));
    g.trim();
    std::vector<QuadInt> out;
    if (g.is_zero())
        throw anomaly_error("U_m -+ U'_n vanished identically");
    if (g.degree() == 0)
        return out;

    // square-free part keeps the same root set and certifies cleanly
    IntPoly gs = exact_div(g, int_gcd(g, g.derivative()));

    mpz_class rden = R.get_den();
    for (mpfr_prec_t prec = 192; prec <= 16384; prec *= 2) {
        try {
            long d = gs.degree();
            std::vector<Complex> low;
            low.reserve(static_cast<size_t>(d));
            Real lead = Real::exact(gs.leading(), prec);
            for (long i = 0; i < d; ++i) {
                Real ci = Real::exact(gs.c[static_cast<size_t>(i)], prec) / lead;
                low.emplace_back(ci, Real::exact(0L, prec));
            }
            std::vector<Complex> roots = certified_roots(low, prec);

            std::set<std::pair<mpz_class, mpz_class>> seen;
            mpq_class half(1, 2);
            for (const Complex& r : roots) {
                // lattice points (x + y sqrt(D))/2 within 0.5 + radius of the
                // enclosure: bounding box in (x, y) integer coordinates
                mpq_class re_lo = r.re().lower_q() - half, re_hi = r.re().upper_q() + half;
                mpq_class im_lo = r.im().lower_q() - half, im_hi = r.im().upper_q() + half;
                mpz_class x_lo, x_hi, y_lo, y_hi;
                mpq_class t = 2 * re_lo;
                mpz_fdiv_q(x_lo.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
                t = 2 * re_hi;
                mpz_cdiv_q(x_hi.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
                // y sqrt(D)/2 in [im_lo, im_hi]: y in [2 im_lo/sqrt(D), ...]:
                // use y^2 D <= (2 max|im|)^2 conservative bounds
                mpq_class abs_lo = abs(im_lo), abs_hi = abs(im_hi);
                mpq_class ylim = 2 * (abs_lo > abs_hi ? abs_lo : abs_hi);
                // integer ceiling of ylim/sqrt(D): (ylim^2/D) <= k^2
                mpq_class yl2 = ylim * ylim / mpq_class(ring.D());
                mpz_class ybound;
                mpz_cdiv_q(ybound.get_mpz_t(), yl2.get_num_mpz_t(), yl2.get_den_mpz_t());
                mpz_sqrt(ybound.get_mpz_t(), ybound.get_mpz_t());
                ybound += 1;
                y_lo = -ybound;
                y_hi = ybound;
                for (mpz_class y = y_lo; y <= y_hi; ++y) {
                    for (mpz_class x = x_lo; x <= x_hi; ++x) {
                        if (ring.lattice() == Lattice::Full) {
                            if ((x - y) % 2 != 0)
                                continue;
                        } else {
                            if (x % 2 != 0 || y % 2 != 0)
                                continue;
                        }
                        if (seen.count({x, y}))
                            continue;
                        seen.insert({x, y});
                        QuadInt cand(ring, x, y);
                        // |cand| <= R exact: norm * den^2 <= num^2
                        if (cand.norm() * rden * rden > R.get_num() * R.get_num())
                            continue;
                        if (g.eval(cand).is_zero())
                            out.push_back(cand);
                    }
                }
            }
            std::sort(out.begin(), out.end(),
                      [](const QuadInt& a, const QuadInt& b) { return QuadInt::cmp(a, b) < 0; });
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        } catch (const precision_error&) {
            out.clear();
            continue;
        }
    }
    throw precision_error("intersection_roots: certification failed at the precision cap");
}

std::vector<std::pair<QuadInt, QuadInt>> brute_thue(const QuadInt& c, const QuadInt& mu,
                                                    const mpq_class& H) {
    if (H < 1)
        throw domain_error("brute_thue needs H >= 1");
    QuarticParams params(c);
    std::vector<QuadInt> disk = enumerate_disk(c.ring(), H);
    std::vector<std::pair<QuadInt, QuadInt>> out;
    for (const QuadInt& p : disk)
        for (const QuadInt& q : disk)
            if (thue_lhs(p, q, params) == mu)
                out.emplace_back(p, q);
    return out;
}

std::vector<std::array<QuadInt, 3>> brute_system(const QuadInt& c, const QuadInt& mu,
                                                 const mpq_class& H) {
    if (H < 1)
        throw domain_error("brute_system needs H >= 1");
    std::vector<std::array<QuadInt, 3>> out;
    mpz_class h_num = H.get_num(), h_den = H.get_den();
    auto in_disk = [&](const QuadInt& v) { return v.norm() * h_den * h_den <= h_num * h_num; };
    for (const QuadInt& U : enumerate_disk(c.ring(), H)) {
        // c V^2 = (c+2) U^2 - 2 mu  and  c Z^2 = (c-2) U^2 + 2 mu
        auto v2 = QuadInt::div_exact((c + 2) * U * U - mu * 2, c);
        if (!v2)
            continue;
        auto z2 = QuadInt::div_exact((c - 2) * U * U + mu * 2, c);
        if (!z2)
            continue;
        auto V = QuadInt::sqrt_exact(*v2);
        if (!V)
            continue;
        auto Z = QuadInt::sqrt_exact(*z2);
        if (!Z)
            continue;
        if (!in_disk(*V) || !in_disk(*Z))
            continue;
        std::vector<QuadInt> vs{*V}, zs{*Z};
        if (!V->is_zero())
            vs.push_back(-*V);
        if (!Z->is_zero())
            zs.push_back(-*Z);
        for (const QuadInt& vv : vs)
            for (const QuadInt& zz : zs)
                out.push_back({U, vv, zz});
    }
    std::sort(out.begin(), out.end(),
              [](const std::array<QuadInt, 3>& a, const std::array<QuadInt, 3>& b) {
                  for (int i = 0; i < 3; ++i) {
                      int cv = QuadInt::cmp(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
                      if (cv != 0)
                          return cv < 0;
                  }
                  return false;
              });
    return out;
}

namespace {

// Solutions of U^2 + Z^2 = 2 mu in Z[i] via the factorization
// (U - iZ)(U + iZ) = 2 mu: enumerate divisor shapes d with |d|^2 | 4.
std::vector<std::array<QuadInt, 2>> solve_u2z2_gauss(RingSpec ring, const QuadInt& mu) {
    std::vector<QuadInt> divisors;
    for (const QuadInt& u : units(ring)) {
        divisors.push_back(u);                              // norm 1
        divisors.push_back(u * QuadInt::from_parts(ring, 1, 1)); // norm 2
        divisors.push_back(u * 2);                          // norm 4
    }
    QuadInt two_mu = mu * 2;
    QuadInt i_unit = unit_value(ring, UnitRoot::I);
    std::vector<std::array<QuadInt, 2>> out;
    for (const QuadInt& d1 : divisors) {
        auto d2 = QuadInt::div_exact(two_mu, d1);
        if (!d2)
            continue;
        // U = (d1 + d2)/2, Z = (d2 - d1)/(2i)
        auto U = QuadInt::div_exact(d1 + *d2, QuadInt::integer(ring, 2));
        if (!U)
            continue;
        auto Z = QuadInt::div_exact(*d2 - d1, i_unit * 2);
        if (!Z)
            continue;
        if ((*U) * (*U) + (*Z) * (*Z) != two_mu)
            throw anomaly_error("factorization produced a non-solution");
        out.push_back({*U, *Z});
    }
    std::sort(out.begin(), out.end(),
              [](const std::array<QuadInt, 2>& a, const std::array<QuadInt, 2>& b) {
                  int cv = QuadInt::cmp(a[0], b[0]);
                  if (cv != 0)
                      return cv < 0;
                  return QuadInt::cmp(a[1], b[1]) < 0;
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Solutions (X, Y) of X^2 + 3 Y^2 = mu in Z[w] via
// (X - sqrt(-3) Y)(X + sqrt(-3) Y) = mu: both factors are units.
std::vector<std::array<QuadInt, 2>> solve_x2_3y2(RingSpec ring, const QuadInt& mu) {
    QuadInt root3 = QuadInt::from_parts(ring, 0, 1); // sqrt(-3)
    std::vector<std::array<QuadInt, 2>> out;
    for (const QuadInt& u1 : units(ring)) {
        auto u2 = QuadInt::div_exact(mu, u1);
        if (!u2)
            continue;
        auto X = QuadInt::div_exact(u1 + *u2, QuadInt::integer(ring, 2));
        if (!X)
            continue;
        auto Y = QuadInt::div_exact(*u2 - u1, root3 * 2);
        if (!Y)
            continue;
        if ((*X) * (*X) + (*Y) * (*Y) * 3 != mu)
            throw anomaly_error("factorization produced a non-solution");
        out.push_back({*X, *Y});
    }
    std::sort(out.begin(), out.end(),
              [](const std::array<QuadInt, 2>& a, const std::array<QuadInt, 2>& b) {
                  int cv = QuadInt::cmp(a[0], b[0]);
                  if (cv != 0)
                      return cv < 0;
                  return QuadInt::cmp(a[1], b[1]) < 0;
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// fourth roots of mu among the units
std::vector<QuadInt> fourth_roots(RingSpec ring, const QuadInt& mu) {
    std::vector<QuadInt> out;
    for (const QuadInt& u : units(ring)) {
        QuadInt u2 = u * u;
        if (u2 * u2 == mu)
            out.push_back(u);
    }
    return out;
}

} // namespace

SpecialC1Report special_case_c1(RingSpec ring, int c_value) {
    if (c_value != 1 && c_value != -1)
        throw domain_error("special case handles c = +-1 only");
    QuadInt c = QuadInt::integer(ring, c_value);
    SpecialC1Report rep{ring, c, SpecialCaseStatus::Undetermined, {}, {}, ""};
    if (ring.D() != 1 && ring.D() != 3) {
        rep.note = "U^2 + Z^2 = 2 has infinitely many solutions in this ring; "
                   "the classification is open";
        return rep;
    }
    rep.status = SpecialCaseStatus::Resolved;
    QuarticParams params(c);

    for (const MuEps& me : admissible_mu_eps(ring)) {
        SpecialCaseMu mc{me.mu, {}, {}};
        if (ring.D() == 1)
            mc.uz_solutions = solve_u2z2_gauss(ring, me.mu);

        // Thue solutions: p or q vanishes and the other is a fourth root of mu.
        // For D = 3 this is forced through X^2 + 3Y^2 = mu with Y = +-pq = 0;
        // for D = 1 through the finite (U, Z) lists.
        std::vector<QuadInt> roots = fourth_roots(ring, me.mu);
        QuadInt zero = QuadInt::zero(ring);
        for (const QuadInt& r : roots) {
            mc.thue_solutions.emplace_back(zero, r);
            mc.thue_solutions.emplace_back(r, zero);
        }
        // exactness check against the defining equation
        for (const auto& [p, q] : mc.thue_solutions)
            if (thue_lhs(p, q, params) != me.mu)
                throw anomaly_error("fourth-root list failed the Thue equation");
        if (ring.D() == 3) {
            // the factorization route must confirm Y = 0 throughout
            for (const auto& sol : solve_x2_3y2(ring, me.mu))
                if (!sol[1].is_zero())
                    throw anomaly_error("X^2+3Y^2 = mu produced Y != 0");
        }
        for (const auto& [p, q] : mc.thue_solutions)
            rep.generators.push_back(normalize_generator(generator_from_pq(p, q, params)));
        rep.mu_cases.push_back(std::move(mc));
    }
    // deduplicate unit orbits
    std::sort(rep.generators.begin(), rep.generators.end(),
              [](const GeneratorTriple& a, const GeneratorTriple& b) {
                  int cv = QuadInt::cmp(a.x, b.x);
                  if (cv != 0)
                      return cv < 0;
                  cv = QuadInt::cmp(a.y, b.y);
                  if (cv != 0)
                      return cv < 0;
                  return QuadInt::cmp(a.z, b.z) < 0;
              });
    rep.generators.erase(std::unique(rep.generators.begin(), rep.generators.end()),
                         rep.generators.end());
    return rep;
}

} // namespace relpib
