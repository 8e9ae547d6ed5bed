#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "relpib/absindex.hpp"
#include "relpib/oracle.hpp"
#include "relpib/verify.hpp"

namespace {

using namespace relpib;

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInput = 4;

mpfr_prec_t default_prec() {
    if (const char* env = std::getenv("RELPIB_PREC")) {
        long v = std::atol(env);
        if (v >= 64 && v <= 1 << 20)
            return static_cast<mpfr_prec_t>(v);
    }
    return 256;
}

mpq_class parse_rational(const std::string& s) {
    // accepts "10", "3/2" and decimals like "1.5"
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw parse_error("bad rational: " + s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

int run_verify(long D, const std::string& c_str, mpfr_prec_t prec) {
    RingSpec ring(D);
    QuadInt c = QuadInt::parse(ring, c_str);
    VerifyOptions opts;
    opts.prec_start = prec;
    VerifyReport rep = cmd_verify(ring, c, opts);
    std::cout << verify_to_json(rep).dump() << "\n";
    std::cerr << "verify: D = " << D << ", c = " << c.str() << " -> "
              << classification_name(rep.classification)
              << (rep.resolved ? " (resolved)" : " (not resolved)") << "\n";
    for (const auto& g : rep.generators)
        std::cerr << "  generator: " << g.x.str() << " * xi + " << g.y.str() << " * xi^2 + "
                  << g.z.str() << " * xi^3\n";
    return kExitOk;
}

int run_scan(long D, const std::string& radius, long m_max, const std::string& H,
             unsigned workers) {
    RingSpec ring(D);
    ScanReport rep = cmd_scan(ring, parse_rational(radius), m_max, parse_rational(H), workers);
    std::cout << scan_to_json(rep).dump() << "\n";
    std::cerr << "scan: checked " << rep.c_checked << " parameters, skipped " << rep.sc_skipped
              << " in S_c, anomalies: " << rep.anomalies.size() << "\n";
    return rep.anomalies.empty() ? kExitOk : kExitAnomaly;
}

int run_thresholds(mpfr_prec_t prec) {
    ThresholdsReport rep = cmd_thresholds(prec);
    std::cout << thresholds_to_json(rep).dump() << "\n";
    std::cerr << "thresholds: sign change " << (rep.sign_change_ok ? "ok" : "FAILED")
              << ", exclusion at 159108 " << (rep.exclusion_at_159108 ? "ok" : "FAILED") << "\n";
    bool ok = rep.sign_change_ok && rep.exclusion_at_159108 && rep.exclusion_below_159108;
    return ok ? kExitOk : kExitAnomaly;
}

struct Job {
    long line_no;
    long D;
    std::string element;
};

int run_reduce(const std::string& jobfile, unsigned workers, mpfr_prec_t prec,
               const std::string& checkpoint) {
    std::ifstream in(jobfile);
    if (!in)
        throw parse_error("cannot open job file: " + jobfile);
    std::vector<Job> jobs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = line.substr(0, line.find('#'));
        std::istringstream is(t);
        long D;
        std::string elem;
        if (!(is >> D))
            continue; // blank or comment
        if (!(is >> elem))
            throw parse_error("job line " + std::to_string(line_no) +
                              ": expected \"D element\"");
        jobs.push_back(Job{line_no, D, elem});
    }

    // resume state: JSONL of {"index", "record"}
    std::set<size_t> done;
    std::vector<std::string> cached(jobs.size());
    if (!checkpoint.empty()) {
        std::ifstream st(checkpoint);
        std::string l;
        while (st && std::getline(st, l)) {
            if (l.empty())
                continue;
            auto j = ordered_json::parse(l, nullptr, false);
            if (j.is_discarded() || !j.contains("index"))
                continue;
            size_t idx = j["index"].get<size_t>();
            if (idx < jobs.size()) {
                done.insert(idx);
                cached[idx] = j["record"].dump();
            }
        }
    }

    std::vector<std::string> results(jobs.size());
    std::vector<int> status(jobs.size(), kExitOk);
    std::atomic<size_t> next{0};
    std::mutex ck_mutex;
    std::ofstream ck;
    if (!checkpoint.empty())
        ck.open(checkpoint, std::ios::app);
    std::atomic<long> since_flush{0};

    BwBounds bw = bw_global_bounds(prec);
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size())
                return;
            if (done.count(i)) {
                results[i] = cached[i];
                continue;
            }
            const Job& job = jobs[i];
            try {
                RingSpec ring(job.D);
                QuadInt c = QuadInt::parse(ring, job.element);
                ReducePrecision rp;
                rp.start = std::max<mpfr_prec_t>(prec, 512);
                auto outcomes = reduce_for_c(c, bw.m_max, bw.n_max, rp);
                mpz_class S = std::max(outcomes.first.final_bound, outcomes.second.final_bound);
                auto hits = finish_small_indices(c, S.get_si(), S.get_si());
                ordered_json rec{
                    {"schema", kSchemaVersion},
                    {"cmd", "reduce"},
                    {"D", job.D},
                    {"c", c.str()},
                    {"reduction",
                     ordered_json::array({reduction_to_json(outcomes.first),
                                          reduction_to_json(outcomes.second)})},
                    {"intersections", hits.size()}};
                results[i] = rec.dump();
                if (!hits.empty())
                    status[i] = kExitAnomaly;
            } catch (const precision_error& e) {
                results[i] = ordered_json{{"schema", kSchemaVersion},
                                          {"cmd", "reduce"},
                                          {"line", job.line_no},
                                          {"error", e.what()}}
                                 .dump();
                status[i] = kExitPrecision;
            } catch (const error& e) {
                results[i] = ordered_json{{"schema", kSchemaVersion},
                                          {"cmd", "reduce"},
                                          {"line", job.line_no},
                                          {"error", e.what()}}
                                 .dump();
                status[i] = kExitInput;
            }
            if (ck.is_open()) {
                std::lock_guard<std::mutex> lk(ck_mutex);
                ck << ordered_json{{"index", i}, {"record", ordered_json::parse(results[i])}}
                          .dump()
                   << "\n";
                if (since_flush.fetch_add(1) % 100 == 99)
                    ck.flush();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, workers); ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (ck.is_open())
        ck.flush();

    int rc = kExitOk;
    for (size_t i = 0; i < jobs.size(); ++i) {
        std::cout << results[i] << "\n";
        rc = std::max(rc, status[i]);
    }
    std::cerr << "reduce: " << jobs.size() << " jobs finished\n";
    return rc;
}

int run_absindex(long D, long pmax, long qmax, long bmax) {
    RingSpec ring(D);
    std::vector<QuadInt> eps_list = {QuadInt::integer(ring, 1), QuadInt::integer(ring, -1)};
    if (D == 1) {
        eps_list.push_back(unit_value(ring, UnitRoot::I));
        eps_list.push_back(unit_value(ring, UnitRoot::MinusI));
    }
    long failures = 0, count = 0;
    for (long p = -pmax; p <= pmax; ++p) {
        for (long q = -qmax; q <= qmax; ++q) {
            // skip c in {0, +-2}
            if (q == 0 && (p == 0 || p == 2 || p == -2))
                continue;
            for (long b = -bmax; b <= bmax; ++b) {
                for (const QuadInt& eps : eps_list) {
                    for (Alpha0 a0 : {Alpha0::Xi, Alpha0::SecondGen}) {
                        AbsIndexVerdict v = j_alpha_divisibility(D, p, q, b, eps, a0);
                        std::cout << absindex_to_json(v).dump() << "\n";
                        ++count;
                        if (!v.divisible_4096D2 || !v.divisible_256)
                            ++failures;
                    }
                }
            }
        }
    }
    std::cerr << "absindex: " << count << " tuples, " << failures << " divisibility failures\n";
    return failures == 0 ? kExitOk : kExitAnomaly;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative power integral bases for the quartic family "
                 "t^4 - 2c t^3 + 2 t^2 + 2c t + 1 over imaginary quadratic fields"};
    app.require_subcommand(1);
    mpfr_prec_t prec = default_prec();

    long D = 1;
    std::string c_str, radius = "10", H = "6", jobfile, checkpoint;
    long m_max = 12, pmax = 3, qmax = 3, bmax = 3, prec_arg = 0;
    unsigned workers = 1;

    auto* verify = app.add_subcommand("verify", "classify one parameter and list generators");
    verify->add_option("--D", D, "squarefree positive D of Q(sqrt(-D))")->required();
    verify->add_option("--c", c_str, "parameter in element syntax a+b*w")->required();
    verify->add_option("--prec", prec_arg, "working precision in bits");

    auto* scan = app.add_subcommand("scan", "oracle sweep over a disk of parameters");
    scan->add_option("--D", D)->required();
    scan->add_option("--radius", radius, "disk radius (rational)");
    scan->add_option("--mmax", m_max, "intersection index cap");
    scan->add_option("--H", H, "brute-force coordinate bound (rational)");
    scan->add_option("--workers", workers, "worker threads");

    auto* thresholds = app.add_subcommand("thresholds", "recompute the decision constants");
    thresholds->add_option("--prec", prec_arg, "working precision in bits");

    auto* reduce = app.add_subcommand("reduce", "batch reduction from a job file");
    reduce->add_option("--jobs", jobfile, "job file: lines of \"D element\"")->required();
    reduce->add_option("--workers", workers, "worker threads");
    reduce->add_option("--prec", prec_arg, "working precision in bits");
    reduce->add_option("--checkpoint", checkpoint, "resumable state file");

    auto* absidx = app.add_subcommand("absindex", "absolute-index divisibility sweep");
    absidx->add_option("--D", D)->required();
    absidx->add_option("--pmax", pmax);
    absidx->add_option("--qmax", qmax);
    absidx->add_option("--bmax", bmax);

    CLI11_PARSE(app, argc, argv);
    if (prec_arg >= 64)
        prec = static_cast<mpfr_prec_t>(prec_arg);

    try {
        if (verify->parsed())
            return run_verify(D, c_str, prec);
        if (scan->parsed())
            return run_scan(D, radius, m_max, H, workers);
        if (thresholds->parsed())
            return run_thresholds(prec);
        if (reduce->parsed())
            return run_reduce(jobfile, workers, prec, checkpoint);
        if (absidx->parsed())
            return run_absindex(D, pmax, qmax, bmax);
    } catch (const precision_error& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const anomaly_error& e) {
        std::cerr << "mathematical anomaly: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
