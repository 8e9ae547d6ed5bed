#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relpib/bennett.hpp"
#include "relpib/forms.hpp"
#include "relpib/reduce.hpp"
#include "relpib/report.hpp"
#include "relpib/ring.hpp"

namespace relpib {

enum class Classification {
    Excluded_0_pm2,
    InSc,
    ReZero_Closed,
    LargeC_Bennett,
    Reduced_And_Searched,
};

const char* classification_name(Classification c);

struct MuCaseRecord {
    QuadInt mu;
    QuadInt eps;
    std::vector<std::array<QuadInt, 3>> solutions;        // (U, V, Z)
    std::vector<std::pair<QuadInt, QuadInt>> thue;        // (p, q)
    std::vector<GeneratorTriple> generators;              // normalized
};

struct VerifyReport {
    RingSpec ring;
    QuadInt c;
    Classification classification;
    bool resolved = false; // a complete generator list was certified
    std::vector<MuCaseRecord> mu_cases;
    std::optional<BennettReport> bennett;
    std::optional<std::pair<ReductionOutcome, ReductionOutcome>> reduction;
    std::vector<GeneratorTriple> generators;
    std::string note;
};

struct VerifyOptions {
    mpfr_prec_t prec_start = 128;
    mpfr_prec_t prec_cap = 16384;
};

// The single-c pipeline.  Dispatch order: Excluded -> InSc -> ReZero ->
// LargeC -> Reduce; when a path closes the case the report carries exactly
// the two unit-orbit generator classes.
VerifyReport cmd_verify(RingSpec ring, const QuadInt& c, const VerifyOptions& opts = {});

ordered_json verify_to_json(const VerifyReport& rep);

struct ScanReport {
    RingSpec ring;
    mpq_class radius;
    long m_max;
    mpq_class H;
    long c_checked = 0;
    long sc_skipped = 0;
    std::vector<std::string> anomalies;
};

// Oracle sweep over the disk: brute_system against the trivial set,
// brute_thue against the theorem lists, intersection emptiness.  Any
// mismatch lands in `anomalies`.
ScanReport cmd_scan(RingSpec ring, const mpq_class& radius, long m_max, const mpq_class& H,
                    unsigned workers = 1);

ordered_json scan_to_json(const ScanReport& rep);

struct ThresholdsReport {
    Real f_155351, f_155352;
    bool sign_change_ok = false;
    bool exclusion_at_159108 = false;
    bool exclusion_below_159108 = false; // certified false at 159107
    std::vector<std::pair<long, bool>> samples;
    mpz_class bw_m_max, bw_n_max;
    Real bw_constant;
};

// Recomputes and certifies the paper's decision constants.
ThresholdsReport cmd_thresholds(mpfr_prec_t prec);

ordered_json thresholds_to_json(const ThresholdsReport& rep);

} // namespace relpib
