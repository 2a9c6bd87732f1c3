#pragma once

#include <stdexcept>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// A target (genus, ramification profile) with the derived degree and the
// forced number of simple branch points w = 2g - 2 + n + d.
struct HurwitzInstance {
    int genus = 0;
    Partition profile;
    int degree = 0;
    int branch_count = 0;

    HurwitzInstance(int g, Partition mu) : genus(g), profile(std::move(mu)) {
        if (g < 0) throw std::invalid_argument("genus must be non-negative");
        if (profile.empty()) throw std::invalid_argument("profile must be nonempty");
        degree = profile.size();
        branch_count = 2 * g - 2 + profile.length() + degree;
        if (branch_count < 0) throw std::invalid_argument("negative branch count");
    }
};

}  // namespace hurwitz
