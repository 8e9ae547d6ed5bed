#pragma once

#include <random>

#include "relpib/ring.hpp"

namespace relpib::testing {

// Uniform random ring element with half-coordinates bounded by `span`.
inline QuadInt random_element(RingSpec ring, std::mt19937_64& rng, long span = 20) {
    std::uniform_int_distribution<long> d(-span, span);
    for (;;) {
        long x = d(rng), y = d(rng);
        if (ring.lattice() == Lattice::Full) {
            if ((x - y) % 2 != 0)
                continue;
        } else {
            x *= 2;
            y *= 2;
        }
        return QuadInt(ring, x, y);
    }
}

inline QuadInt random_param_c(RingSpec ring, std::mt19937_64& rng, long span = 10) {
    for (;;) {
        QuadInt c = random_element(ring, rng, span);
        if (c.is_zero())
            continue;
        if (c == QuadInt::integer(ring, 2) || c == QuadInt::integer(ring, -2))
            continue;
        return c;
    }
}

} // namespace relpib::testing
