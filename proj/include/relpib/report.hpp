#pragma once

#include "json.hpp" // vendored nlohmann/json

#include "relpib/absindex.hpp"
#include "relpib/bennett.hpp"
#include "relpib/forms.hpp"
#include "relpib/reduce.hpp"

namespace relpib {

using ordered_json = nlohmann::ordered_json;

// Schema version of every JSON record this library emits.
inline constexpr int kSchemaVersion = 1;

ordered_json ball_to_json(const Real& b);
ordered_json ring_to_json(const RingSpec& ring);
ordered_json generator_to_json(const GeneratorTriple& g);
ordered_json bennett_to_json(const BennettReport& rep);
ordered_json reduction_to_json(const ReductionOutcome& out);
ordered_json absindex_to_json(const AbsIndexVerdict& v);

} // namespace relpib
