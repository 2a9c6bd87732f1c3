#include "doctest.h"

#include "hurwitz/brute_force.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

Perm transposition_perm(int d, int a, int b) {
    Perm t = identity_perm(d);
    std::swap(t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]);
    return t;
}

}  // namespace

TEST_CASE("cycle types") {
    CHECK(cycle_type(identity_perm(4)) == Partition({1, 1, 1, 1}));
    Perm five{1, 2, 3, 4, 0};  // (1 2 3 4 5)
    CHECK(cycle_type(five) == Partition({5}));
    // (1 4) * (1 2 3 4 5) cuts the cycle into a 3-cycle and a 2-cycle.
    Perm cut = compose(transposition_perm(5, 0, 3), five);
    CHECK(cycle_type(cut) == Partition({3, 2}));
    // Multiplying again by (1 4) joins them back.
    CHECK(cycle_type(compose(transposition_perm(5, 0, 3), cut)) == Partition({5}));
}

TEST_CASE("class representatives have the right type") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& mu : partitions_of(d)) CHECK(cycle_type(class_representative(mu)) == mu);
}

TEST_CASE("transitivity") {
    CHECK(is_transitive({transposition_perm(3, 0, 1), transposition_perm(3, 0, 2)}, 3));
    CHECK_FALSE(is_transitive({transposition_perm(3, 0, 1), transposition_perm(3, 0, 1)}, 3));
    CHECK(is_transitive({}, 1));
    CHECK_FALSE(is_transitive({}, 2));
}

TEST_CASE("brute force reproduces the small values") {
    CHECK(brute_force_hurwitz(HurwitzInstance(0, Partition({2, 1})), true) == Rat(4));
    CHECK(brute_force_hurwitz(HurwitzInstance(1, Partition({2, 1})), true) == Rat(40));
    CHECK(brute_force_hurwitz(HurwitzInstance(0, Partition({2})), true) == Rat(1, 2));
    CHECK(brute_force_hurwitz(HurwitzInstance(1, Partition({2, 1})), false) == Rat(81, 2));
}

TEST_CASE("connected count never exceeds disconnected") {
    for (int d = 2; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 1; ++g) {
                HurwitzInstance inst(g, mu);
                Rat conn = brute_force_hurwitz(inst, true);
                Rat disc = brute_force_hurwitz(inst, false);
                CHECK(conn <= disc);
            }
        }
    }
}

TEST_CASE("single-part profiles: connected equals disconnected") {
    for (int d = 2; d <= 5; ++d) {
        for (int g = 0; g <= 1; ++g) {
            HurwitzInstance inst(g, Partition({d}));
            if (!brute_force_feasible(inst)) continue;
            CHECK(brute_force_hurwitz(inst, true) == brute_force_hurwitz(inst, false));
        }
    }
}

TEST_CASE("work bound raises an explicit failure") {
    HurwitzInstance big(4, Partition({3, 2, 1, 1, 1}));  // d = 8, w = 19
    CHECK_FALSE(brute_force_feasible(big));
    CHECK_THROWS_AS(brute_force_hurwitz(big, true), FeasibilityError);
}

TEST_CASE("degree-1 edge cases") {
    CHECK(brute_force_hurwitz(HurwitzInstance(0, Partition({1})), true) == Rat(1));
    CHECK(brute_force_hurwitz(HurwitzInstance(1, Partition({1})), true) == Rat(0));
}
