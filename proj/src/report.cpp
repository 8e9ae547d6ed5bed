#include "relpib/report.hpp"

namespace relpib {

ordered_json ball_to_json(const Real& b) {
    return ordered_json{{"mid_dec", b.mid_str()},
                        {"rad_dec", b.rad_str()},
                        {"prec_bits", static_cast<long>(b.prec())}};
}

ordered_json ring_to_json(const RingSpec& ring) {
    return ordered_json{{"D", ring.D()},
                        {"lattice", ring.lattice() == Lattice::Full ? "full" : "half"}};
}

ordered_json generator_to_json(const GeneratorTriple& g) {
    return ordered_json{{"x", g.x.str()}, {"y", g.y.str()}, {"z", g.z.str()}};
}

ordered_json bennett_to_json(const BennettReport& rep) {
    ordered_json j{{"c_abs", ball_to_json(rep.c_abs)},
                   {"theorem_applicable", rep.theorem_applicable},
                   {"l", ball_to_json(rep.l)},
                   {"L", ball_to_json(rep.L)},
                   {"p", ball_to_json(rep.p_small)},
                   {"P", ball_to_json(rep.P_big)}};
    if (rep.theorem_applicable) {
        j["lambda"] = ball_to_json(rep.lambda);
        j["C_inv"] = ball_to_json(rep.C_inv);
        j["two_minus_lambda_positive"] = rep.two_minus_lambda_positive;
    }
    if (rep.excludes_nontrivial) {
        j["upper_log_U"] = ball_to_json(rep.upper_log_U);
        j["lower_log_U"] = ball_to_json(rep.lower_log_U);
    }
    j["excludes_nontrivial"] = rep.excludes_nontrivial;
    return j;
}

ordered_json reduction_to_json(const ReductionOutcome& out) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : out.steps)
        steps.push_back(ordered_json{{"q", s.q.get_str()},
                                     {"eps_hat", ball_to_json(s.eps_hat)},
                                     {"new_bound", s.new_bound.get_str()}});
    const char* status = "PrecisionExhausted";
    if (out.status == ReduceStatus::Reduced)
        status = "Reduced";
    else if (out.status == ReduceStatus::EpsilonNonpositive)
        status = "EpsilonNonpositive";
    return ordered_json{{"c", out.c.str()},
                        {"instance", out.instance == ReduceInstance::BoundM ? "m" : "n"},
                        {"steps", steps},
                        {"final_bound", out.final_bound.get_str()},
                        {"status", status}};
}

ordered_json absindex_to_json(const AbsIndexVerdict& v) {
    return ordered_json{{"D", v.D},
                        {"p", v.p},
                        {"q", v.q},
                        {"b", v.b},
                        {"eps", v.eps.str()},
                        {"alpha0", v.alpha0 == Alpha0::Xi ? "xi" : "second_gen"},
                        {"R", v.R.get_str()},
                        {"divisible_4096D2", v.divisible_4096D2},
                        {"J", v.J.get_str()},
                        {"divisible_256", v.divisible_256}};
}

} // namespace relpib
