#pragma once

#include <stdexcept>
#include <string>

namespace relpib {

// Base of all library failures, so drivers can map them to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings Z_M.
struct ring_mismatch_error : error {
    using error::error;
};

// Congruence modulus is zero.
struct invalid_modulus_error : error {
    using error::error;
};

// Argument outside the mathematical domain of the operation (bad D,
// c in {0,+-2}, |c| <= 2 where a formula needs more, ...).
struct domain_error : error {
    using error::error;
};

// Malformed textual input (element syntax, job files).
struct parse_error : error {
    using error::error;
};

// A sign, comparison or enclosure could not be certified at the working
// precision.  Callers retry with more bits; past the hard cap this
// propagates to the user.
struct precision_error : error {
    using error::error;
};

// A theorem's hypotheses are not met for these inputs (c in S_c, wrong
// D mod 4, L <= 1, ...).
struct inapplicable_error : error {
    using error::error;
};

// Input claimed to be a solution fails the exact check.
struct not_a_solution_error : error {
    using error::error;
};

// An exact mathematical contract failed: a would-be counterexample.
// Never expected; surfaces as exit code 2.
struct anomaly_error : error {
    using error::error;
};

} // namespace relpib
