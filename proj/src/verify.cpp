#include "relpib/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "relpib/linforms.hpp"
#include "relpib/oracle.hpp"
#include "relpib/pell.hpp"

namespace relpib {

const char* classification_name(Classification c) {
    switch (c) {
    case Classification::Excluded_0_pm2:
        return "Excluded_0_pm2";
    case Classification::InSc:
        return "InSc";
    case Classification::ReZero_Closed:
        return "ReZero_Closed";
    case Classification::LargeC_Bennett:
        return "LargeC_Bennett";
    case Classification::Reduced_And_Searched:
        return "Reduced_And_Searched";
    }
    return "?";
}

namespace {

const mpz_class kLargeCut = 159108;

// The two generator classes of the theorem, normalized.
std::vector<GeneratorTriple> expected_generators(const QuadInt& c) {
    RingSpec ring = c.ring();
    GeneratorTriple g1{QuadInt::one(ring), QuadInt::zero(ring), QuadInt::zero(ring)};
    GeneratorTriple g2{QuadInt::integer(ring, 2), -(c * 2), QuadInt::one(ring)};
    std::vector<GeneratorTriple> out{normalize_generator(g1), normalize_generator(g2)};
    std::sort(out.begin(), out.end(), [](const GeneratorTriple& a, const GeneratorTriple& b) {
        int cv = QuadInt::cmp(a.x, b.x);
        if (cv != 0)
            return cv < 0;
        cv = QuadInt::cmp(a.y, b.y);
        if (cv != 0)
            return cv < 0;
        return QuadInt::cmp(a.z, b.z) < 0;
    });
    return out;
}

void sort_generators(std::vector<GeneratorTriple>& gens) {
    std::sort(gens.begin(), gens.end(), [](const GeneratorTriple& a, const GeneratorTriple& b) {
        int cv = QuadInt::cmp(a.x, b.x);
        if (cv != 0)
            return cv < 0;
        cv = QuadInt::cmp(a.y, b.y);
        if (cv != 0)
            return cv < 0;
        return QuadInt::cmp(a.z, b.z) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// Fills mu_cases and the generator list for a case where only the trivial
// Pellian solutions survive; asserts the generators are exactly the two
// classes of the theorem.
void emit_trivial_closure(VerifyReport& rep) {
    RingSpec ring = rep.ring;
    QuarticParams params(rep.c);
    for (const MuEps& me : admissible_mu_eps(ring)) {
        MuCaseRecord mc{me.mu, me.eps, trivial_solution_set(ring, me.mu),
                        thue_solutions_large_c(ring, me.mu), {}};
        for (const auto& [p, q] : mc.thue)
            mc.generators.push_back(normalize_generator(generator_from_pq(p, q, params)));
        sort_generators(mc.generators);
        for (const auto& g : mc.generators)
            rep.generators.push_back(g);
        rep.mu_cases.push_back(std::move(mc));
    }
    sort_generators(rep.generators);
    if (rep.generators != expected_generators(rep.c))
        throw anomaly_error("closed case does not list exactly the two generator classes");
    rep.resolved = true;
}

// Exact certificates that |u_m| > 1 and |u'_n| > 1 for every index >= 1,
// valid whenever norm(2c+-1) > 1 and norm(2c+-2) > 4: the sequences are
// then strictly growing in absolute value from index 1 on.
bool rezero_growth_certificate(const QuadInt& c) {
    QuadInt u1 = c * 2 + 1, up1 = c * 2 - 1;
    QuadInt s1 = c * 2 + 2, s2 = c * 2 - 2;
    return u1.norm() > 1 && up1.norm() > 1 && s1.norm() > 4 && s2.norm() > 4;
}

template <typename F>
auto with_precision_retry(mpfr_prec_t start, mpfr_prec_t cap, F&& f) {
    precision_error last("precision exhausted");
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        try {
            return f(p);
        } catch (const precision_error& e) {
            last = e;
        }
    }
    throw last;
}

} // namespace

VerifyReport cmd_verify(RingSpec ring, const QuadInt& c, const VerifyOptions& opts) {
    if (c.ring() != ring)
        throw ring_mismatch_error("element was parsed for a different ring");
    VerifyReport rep{ring, c, Classification::Excluded_0_pm2, false, {}, {}, {}, {}, ""};

    // 1. excluded parameters
    for (long k : {0L, 2L, -2L}) {
        if (c == QuadInt::integer(ring, k)) {
            rep.classification = Classification::Excluded_0_pm2;
            rep.note = "f is reducible for c in {0, +-2}; no octic field";
            return rep;
        }
    }

    // 2. the exceptional finite set
    if (in_Sc(c)) {
        rep.classification = Classification::InSc;
        bool is_pm1 = (c == QuadInt::one(ring)) || (c == QuadInt::integer(ring, -1));
        if (is_pm1 && (ring.D() == 1 || ring.D() == 3)) {
            SpecialC1Report sp = special_case_c1(ring, c == QuadInt::one(ring) ? 1 : -1);
            QuarticParams params(c);
            for (const auto& mc : sp.mu_cases) {
                MuCaseRecord rec{mc.mu, mc.mu, {}, mc.thue_solutions, {}};
                for (const MuEps& me : admissible_mu_eps(ring))
                    if (me.mu == mc.mu)
                        rec.eps = me.eps;
                // reconstruct full triples from the (U, Z) lists where present
                for (const auto& uz : mc.uz_solutions) {
                    auto v2 = QuadInt::div_exact((c + 2) * uz[0] * uz[0] - mc.mu * 2, c);
                    if (!v2)
                        continue;
                    auto V = QuadInt::sqrt_exact(*v2);
                    if (!V)
                        continue;
                    rec.solutions.push_back({uz[0], *V, uz[1]});
                    if (!V->is_zero())
                        rec.solutions.push_back({uz[0], -*V, uz[1]});
                }
                for (const auto& [p, q] : rec.thue)
                    rec.generators.push_back(
                        normalize_generator(generator_from_pq(p, q, params)));
                sort_generators(rec.generators);
                rep.mu_cases.push_back(std::move(rec));
            }
            rep.generators = sp.generators;
            sort_generators(rep.generators);
            if (rep.generators != expected_generators(c))
                throw anomaly_error("c = +-1 generators differ from the theorem lists");
            rep.resolved = true;
            rep.note = "resolved by factorization of U^2 + Z^2 = 2 mu";
        } else {
            rep.note = "c in S_c: the Pellian classification admits extra solution classes; "
                       "not resolved here";
        }
        return rep;
    }

    auto [cn, swapped] = normalize_c(c);
    (void)swapped; // trivial solution sets and Thue lists are swap-invariant

    // 3. purely imaginary c: closed without Baker theory
    if (cn.re_sign() == 0) {
        if (!rezero_growth_certificate(cn))
            throw anomaly_error("Re(c) = 0 growth certificate failed");
        rep.classification = Classification::ReZero_Closed;
        rep.note = "Lambda may vanish, but u_m = +-u'_n has no solution with m, n > 0; "
                   "index-0 intersections give the trivial triples";
        emit_trivial_closure(rep);
        return rep;
    }

    // 4. large |c|: the congruence lower bound beats the approximation bound
    if (c.norm() >= kLargeCut * kLargeCut) {
        bool excluded = with_precision_retry(opts.prec_start, opts.prec_cap, [&](mpfr_prec_t p) {
            Real c_abs = Real::exact(c.norm(), p).sqrt();
            BennettReport br = resolve_large_c_report(c_abs);
            if (!br.excludes_nontrivial)
                throw anomaly_error("exclusion inequality failed for |c| >= 159108");
            rep.bennett = br;
            return true;
        });
        (void)excluded;
        rep.classification = Classification::LargeC_Bennett;
        emit_trivial_closure(rep);
        return rep;
    }

    // 5. reduction regime
    rep.classification = Classification::Reduced_And_Searched;
    if (lambda_nonzero(cn) != LambdaStatus::NonzeroCertified)
        throw anomaly_error("Re(c) > 0 yet Lambda = 0 not excluded"); // unreachable
    bool idx1 = with_precision_retry(opts.prec_start, opts.prec_cap,
                                     [&](mpfr_prec_t p) { return exclude_index_one(cn, p); });
    if (!idx1)
        throw anomaly_error("index-1 exclusion failed to certify");
    BwBounds bw = with_precision_retry(opts.prec_start, opts.prec_cap,
                                       [&](mpfr_prec_t p) { return bw_global_bounds(p); });
    ReducePrecision rp;
    rp.start = std::max<mpfr_prec_t>(opts.prec_start, 512);
    rp.cap = opts.prec_cap;
    auto outcomes = reduce_for_c(cn, bw.m_max, bw.n_max, rp);
    mpz_class S = std::max(outcomes.first.final_bound, outcomes.second.final_bound);
    if (!S.fits_slong_p())
        throw precision_error("reduction left an oversized bound");
    auto hits = finish_small_indices(cn, S.get_si(), S.get_si());
    rep.reduction = outcomes;
    if (!hits.empty())
        throw anomaly_error("nontrivial sequence intersection found: would-be counterexample");
    rep.note = "reduced to max index " + S.get_str() + "; exhaustive search empty";
    emit_trivial_closure(rep);
    return rep;
}

ordered_json verify_to_json(const VerifyReport& rep) {
    ordered_json mu_cases = ordered_json::array();
    for (const auto& mc : rep.mu_cases) {
        ordered_json sols = ordered_json::array();
        for (const auto& t : mc.solutions)
            sols.push_back(ordered_json::array({t[0].str(), t[1].str(), t[2].str()}));
        ordered_json thue = ordered_json::array();
        for (const auto& [p, q] : mc.thue)
            thue.push_back(ordered_json::array({p.str(), q.str()}));
        ordered_json gens = ordered_json::array();
        for (const auto& g : mc.generators)
            gens.push_back(generator_to_json(g));
        mu_cases.push_back(ordered_json{{"mu", mc.mu.str()},
                                        {"eps", mc.eps.str()},
                                        {"solutions", sols},
                                        {"thue", thue},
                                        {"generators", gens}});
    }
    ordered_json gens = ordered_json::array();
    for (const auto& g : rep.generators)
        gens.push_back(generator_to_json(g));
    ordered_json j{{"schema", kSchemaVersion},
                   {"cmd", "verify"},
                   {"ring", ring_to_json(rep.ring)},
                   {"c", rep.c.str()},
                   {"classification", classification_name(rep.classification)},
                   {"resolved", rep.resolved},
                   {"mu_cases", mu_cases},
                   {"generators", gens},
                   {"note", rep.note}};
    if (rep.bennett)
        j["bennett"] = bennett_to_json(*rep.bennett);
    if (rep.reduction)
        j["reduction"] = ordered_json::array(
            {reduction_to_json(rep.reduction->first), reduction_to_json(rep.reduction->second)});
    return j;
}

namespace {

bool equal_triples(std::vector<std::array<QuadInt, 3>> a, std::vector<std::array<QuadInt, 3>> b) {
    auto key = [](const std::array<QuadInt, 3>& t) {
        return t[0].str() + "|" + t[1].str() + "|" + t[2].str();
    };
    std::vector<std::string> ka, kb;
    for (const auto& t : a)
        ka.push_back(key(t));
    for (const auto& t : b)
        kb.push_back(key(t));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

bool equal_pairs(std::vector<std::pair<QuadInt, QuadInt>> a,
                 std::vector<std::pair<QuadInt, QuadInt>> b) {
    auto key = [](const std::pair<QuadInt, QuadInt>& t) {
        return t.first.str() + "|" + t.second.str();
    };
    std::vector<std::string> ka, kb;
    for (const auto& t : a)
        ka.push_back(key(t));
    for (const auto& t : b)
        kb.push_back(key(t));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

} // namespace

ScanReport cmd_scan(RingSpec ring, const mpq_class& radius, long m_max, const mpq_class& H,
                    unsigned workers) {
    if (m_max > 64)
        throw domain_error("scan index cap is 64");
    ScanReport rep{ring, radius, m_max, H, 0, 0, {}};
    std::vector<QuadInt> disk = enumerate_disk(ring, radius);

    std::vector<std::vector<std::string>> worker_anomalies(disk.size());
    std::atomic<size_t> next{0};
    std::atomic<long> checked{0}, skipped{0};

    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= disk.size())
                return;
            const QuadInt& c = disk[i];
            bool excluded = false;
            for (long k : {0L, 2L, -2L})
                if (c == QuadInt::integer(ring, k))
                    excluded = true;
            if (excluded)
                continue;
            if (in_Sc(c)) {
                skipped.fetch_add(1);
                continue;
            }
            checked.fetch_add(1);
            QuarticParams params(c);
            for (const MuEps& me : admissible_mu_eps(ring)) {
                auto bs = brute_system(c, me.mu, H);
                if (!equal_triples(bs, trivial_solution_set(ring, me.mu)))
                    worker_anomalies[i].push_back("brute_system mismatch at c = " + c.str() +
                                                  ", mu = " + me.mu.str());
                auto bt = brute_thue(c, me.mu, H);
                if (!equal_pairs(bt, thue_solutions_large_c(ring, me.mu)))
                    worker_anomalies[i].push_back("brute_thue mismatch at c = " + c.str() +
                                                  ", mu = " + me.mu.str());
                for (const auto& [p, q] : bt) {
                    GeneratorTriple g = normalize_generator(generator_from_pq(p, q, params));
                    auto exp = expected_generators(c);
                    if (std::find(exp.begin(), exp.end(), g) == exp.end())
                        worker_anomalies[i].push_back("generator outside the two orbits at c = " +
                                                      c.str());
                }
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned nworkers = std::max(1u, workers);
    for (unsigned w = 0; w < nworkers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    rep.c_checked = checked.load();
    rep.sc_skipped = skipped.load();
    for (auto& v : worker_anomalies)
        for (auto& s : v)
            rep.anomalies.push_back(std::move(s));

    // intersection emptiness over the disk
    for (long m = 1; m <= m_max; ++m) {
        for (long n = 1; n <= m_max; ++n) {
            for (int sign : {1, -1}) {
                for (const QuadInt& hit : intersection_roots(m, n, sign, ring, radius)) {
                    bool allowed = false;
                    for (long k : {0L, 1L, -1L, 2L, -2L})
                        if (hit == QuadInt::integer(ring, k))
                            allowed = true;
                    if (!allowed)
                        rep.anomalies.push_back("intersection at c = " + hit.str() + " for (m, n, s) = (" +
                                                std::to_string(m) + ", " + std::to_string(n) +
                                                ", " + std::to_string(sign) + ")");
                }
            }
        }
    }
    return rep;
}

ordered_json scan_to_json(const ScanReport& rep) {
    ordered_json anomalies = ordered_json::array();
    for (const auto& a : rep.anomalies)
        anomalies.push_back(a);
    return ordered_json{{"schema", kSchemaVersion},
                        {"cmd", "scan"},
                        {"ring", ring_to_json(rep.ring)},
                        {"radius", rep.radius.get_str()},
                        {"m_max", rep.m_max},
                        {"H", rep.H.get_str()},
                        {"c_checked", rep.c_checked},
                        {"sc_skipped", rep.sc_skipped},
                        {"anomalies", anomalies}};
}

ThresholdsReport cmd_thresholds(mpfr_prec_t prec) {
    ThresholdsReport rep;
    Real two = Real::exact(2L, prec);
    BennettReport b1 = bennett_params(Real::exact(155351L, prec));
    BennettReport b2 = bennett_params(Real::exact(155352L, prec));
    rep.f_155351 = two - b1.lambda;
    rep.f_155352 = two - b2.lambda;
    rep.sign_change_ok = rep.f_155351.certainly_negative() && rep.f_155352.certainly_positive();

    rep.exclusion_at_159108 = resolve_large_c(Real::exact(159108L, prec));
    rep.exclusion_below_159108 = !resolve_large_c(Real::exact(159107L, prec));
    for (long t : {159108L, 159109L, 159200L, 1000000L, 10000000L})
        rep.samples.emplace_back(t, resolve_large_c(Real::exact(t, prec)));

    BwBounds bw = bw_global_bounds(prec);
    rep.bw_m_max = bw.m_max;
    rep.bw_n_max = bw.n_max;
    rep.bw_constant = bw.bw_constant;
    return rep;
}

ordered_json thresholds_to_json(const ThresholdsReport& rep) {
    ordered_json samples = ordered_json::array();
    for (const auto& [t, ok] : rep.samples)
        samples.push_back(ordered_json{{"c_abs", t}, {"excludes", ok}});
    return ordered_json{{"schema", kSchemaVersion},
                        {"cmd", "thresholds"},
                        {"f_155351", ball_to_json(rep.f_155351)},
                        {"f_155352", ball_to_json(rep.f_155352)},
                        {"sign_change_ok", rep.sign_change_ok},
                        {"exclusion_at_159108", rep.exclusion_at_159108},
                        {"exclusion_fails_at_159107", rep.exclusion_below_159108},
                        {"samples", samples},
                        {"bw_m_max", rep.bw_m_max.get_str()},
                        {"bw_n_max", rep.bw_n_max.get_str()},
                        {"bw_constant", ball_to_json(rep.bw_constant)}};
}

} // namespace relpib
