#pragma once

#include "hurwitz/instance.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct BruteForceOptions {
    // Upper bound on (#transpositions)^w composite states.
    unsigned long long work_bound = 100'000'000ULL;
    int threads = 0;  // 0 = hardware concurrency
};

// (1/d!) times the number of ordered w-tuples of transpositions whose
// product has cycle type mu; the generated group must act transitively
// iff connected. Throws FeasibilityError past the work bound.
Rat brute_force_hurwitz(const HurwitzInstance& inst, bool connected,
                        const BruteForceOptions& opts = {});

// True when the instance fits under the work bound.
bool brute_force_feasible(const HurwitzInstance& inst,
                          const BruteForceOptions& opts = {});

}  // namespace hurwitz
