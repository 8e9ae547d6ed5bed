#include "relpib/bennett.hpp"

#include "relpib/pell.hpp"

namespace relpib {

BennettReport bennett_params(const Real& c_abs) {
    mpfr_prec_t prec = c_abs.prec();
    Real two = Real::exact(2L, prec), three = Real::exact(3L, prec);
    if (!c_abs.certainly_gt(two))
        throw domain_error("Bennett parameters need |c| > 2");

    BennettReport rep;
    rep.c_abs = c_abs;
    Real cm2 = c_abs - two;
    Real cp3 = c_abs + three;

    rep.l = Real::of_rational(mpq_class(27, 64), prec) * c_abs / cm2;
    rep.L = Real::of_rational(mpq_class(27, 4096), prec) * cm2 * cm2;
    rep.p_small = (cp3 / cm2).sqrt();
    rep.P_big = Real::exact(1024L, prec) * cp3;
    rep.theorem_applicable = rep.L.certainly_gt(Real::exact(1L, prec));
    if (rep.theorem_applicable) {
        rep.lambda = Real::exact(1L, prec) + rep.P_big.log() / rep.L.log();
        rep.two_minus_lambda_positive =
            (Real::exact(2L, prec) - rep.lambda).certainly_positive();
        rep.C_inv = Real::exact(4096L, prec) * cp3 * rep.p_small;
    }
    return rep;
}

Real approximation_bound(const Real& c_abs, const Real& U_abs) {
    mpfr_prec_t prec = c_abs.prec();
    Real two = Real::exact(2L, prec);
    if (!c_abs.certainly_gt(two))
        throw domain_error("approximation bound needs |c| > 2");
    if (U_abs.contains_zero())
        throw domain_error("approximation bound needs U != 0");
    return two / ((c_abs * (c_abs - two)).sqrt() * U_abs.sqr());
}

BennettReport resolve_large_c_report(const Real& c_abs) {
    mpfr_prec_t prec = c_abs.prec();
    BennettReport rep = bennett_params(c_abs);
    if (!rep.theorem_applicable) {
        rep.excludes_nontrivial = false;
        return rep;
    }
    Real two = Real::exact(2L, prec), three = Real::exact(3L, prec);
    Real two_minus_lambda = two - rep.lambda;
    if (two_minus_lambda.contains_zero())
        throw precision_error("2 - lambda not separated from zero");
    if (!rep.two_minus_lambda_positive) {
        // no upper bound available; cannot exclude
        rep.excludes_nontrivial = false;
        return rep;
    }
    // upper bound: log|U| < log(2 C^-1 / sqrt(|c|(|c|-2)))/(2-lambda)
    Real num = (two * rep.C_inv / (c_abs * (c_abs - two)).sqrt()).log();
    rep.upper_log_U = num / two_minus_lambda;
    // lower bound: log|U| >= (sqrt(2|c|+0.25)-0.5) log(2|c|-3)
    Real expo = (two * c_abs + Real::of_rational(mpq_class(1, 4), prec)).sqrt() -
                Real::of_rational(mpq_class(1, 2), prec);
    rep.lower_log_U = expo * (two * c_abs - three).log();

    if (rep.lower_log_U.certainly_ge(rep.upper_log_U)) {
        rep.excludes_nontrivial = true;
    } else if (rep.lower_log_U.certainly_lt(rep.upper_log_U)) {
        rep.excludes_nontrivial = false;
    } else {
        throw precision_error("exclusion inequality not separated at this precision");
    }
    return rep;
}

bool resolve_large_c(const Real& c_abs) { return resolve_large_c_report(c_abs).excludes_nontrivial; }

std::vector<std::array<QuadInt, 3>> trivial_solution_set(RingSpec ring, const QuadInt& mu) {
    const auto pairs = admissible_mu_eps(ring);
    const MuEps* found = nullptr;
    for (const auto& pe : pairs)
        if (pe.mu == mu)
            found = &pe;
    if (!found)
        throw inapplicable_error("mu is not an admissible unit for this ring");
    const QuadInt& eps = found->eps;
    // The triples solve both equations identically in c; assert at a probe c.
    QuadInt c_probe = QuadInt::integer(ring, 3);
    std::vector<std::array<QuadInt, 3>> out;
    for (int su = -1; su <= 1; su += 2)
        for (int sv = -1; sv <= 1; sv += 2)
            for (int sz = -1; sz <= 1; sz += 2) {
                QuadInt U = eps * su, V = eps * sv, Z = eps * sz;
                if (!pell_residual_1(U, V, c_probe, mu).is_zero() ||
                    !pell_residual_2(U, Z, c_probe, mu).is_zero())
                    throw anomaly_error("trivial triple fails a Pell equation");
                out.push_back({U, V, Z});
            }
    return out;
}

std::vector<std::pair<QuadInt, QuadInt>> thue_solutions_large_c(RingSpec ring,
                                                                const QuadInt& mu) {
    QuadInt zero = QuadInt::zero(ring);
    std::vector<std::pair<QuadInt, QuadInt>> out;
    auto add_pairs = [&](const QuadInt& r) {
        out.emplace_back(zero, r);
        out.emplace_back(zero, -r);
        out.emplace_back(r, zero);
        out.emplace_back(-r, zero);
    };
    if (mu == QuadInt::integer(ring, 1)) {
        add_pairs(QuadInt::integer(ring, 1));
        if (ring.D() == 1)
            add_pairs(unit_value(ring, UnitRoot::I));
        return out;
    }
    if (mu == QuadInt::integer(ring, -1))
        return out; // no solutions
    if (ring.D() == 3) {
        if (mu == unit_value(ring, UnitRoot::Omega)) {
            add_pairs(unit_value(ring, UnitRoot::Omega));
            return out;
        }
        if (mu == unit_value(ring, UnitRoot::OmegaSq)) {
            add_pairs(unit_value(ring, UnitRoot::OmegaSq));
            return out;
        }
    }
    throw inapplicable_error("mu is not an admissible unit for this ring");
}

} // namespace relpib
