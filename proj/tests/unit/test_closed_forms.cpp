#include "doctest.h"

#include "hurwitz/backends.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

// Oracle: count factorizations of a fixed d-cycle into d-1 transpositions
// by direct enumeration.
long long count_minimal_factorizations(int d) {
    Perm target = class_representative(Partition({d}));
    const auto ts = transpositions(d);
    long long count = 0;
    std::vector<int> choice(static_cast<size_t>(d - 1), 0);
    while (true) {
        Perm acc = identity_perm(d);
        for (int i : choice) {
            Perm t = identity_perm(d);
            std::swap(t[static_cast<size_t>(ts[static_cast<size_t>(i)].first)],
                      t[static_cast<size_t>(ts[static_cast<size_t>(i)].second)]);
            acc = compose(acc, t);
        }
        if (acc == target) ++count;
        int pos = static_cast<int>(choice.size()) - 1;
        while (pos >= 0 && choice[static_cast<size_t>(pos)] + 1 == static_cast<int>(ts.size())) {
            choice[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++choice[static_cast<size_t>(pos)];
    }
    return count;
}

Rat arnold_factorization_count(int m1, int m2) {
    Rat v = Rat(ipow(Int(m1), static_cast<unsigned long>(m1))) *
            Rat(ipow(Int(m2), static_cast<unsigned long>(m2)));
    v *= Rat(factorial(static_cast<unsigned>(m1 + m2 - 1)));
    v /= Rat(factorial(static_cast<unsigned>(m1 - 1)));
    v /= Rat(factorial(static_cast<unsigned>(m2 - 1)));
    return v;
}

}  // namespace

TEST_CASE("genus-0 psi correlators") {
    CHECK(psi_correlator_genus0({0, 0, 0}) == Rat(1));
    CHECK(psi_correlator_genus0({1, 0, 0, 0}) == Rat(1));
    CHECK(psi_correlator_genus0({2, 0, 0}) == Rat(0));
    CHECK(psi_correlator_genus0({0, 1, 0, 0}) == Rat(1));
    CHECK(psi_correlator_genus0({1, 1, 0, 0, 0}) == Rat(2));  // 2!/1!1!
    CHECK_THROWS_AS(psi_correlator_genus0({0, 0}), std::invalid_argument);
}

TEST_CASE("ELSV specializations") {
    CHECK(elsv_genus0(Partition({1})) == Rat(1));
    for (int d = 1; d <= 12; ++d) {
        Rat expect = d >= 3 ? Rat(ipow(Int(d), static_cast<unsigned long>(d - 3)))
                            : make_rat(Int(1), ipow(Int(d), static_cast<unsigned long>(3 - d)));
        CHECK(elsv_genus0(Partition({d})) == expect);
    }
    CHECK(elsv_genus0(Partition({2})) == Rat(1, 2));
}

TEST_CASE("ELSV equals the closed Hurwitz formula for d <= 10") {
    for (int d = 1; d <= 10; ++d)
        for (const auto& mu : partitions_of(d)) CHECK(elsv_genus0(mu) == hurwitz_genus0(mu));
}

TEST_CASE("hurwitz_genus0 known cases") {
    CHECK(hurwitz_genus0(Partition({2, 1})) == Rat(4));
    CHECK(hurwitz_genus0(Partition({2})) == Rat(1, 2));
    for (int d = 1; d <= 8; ++d) {
        Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
        Rat expect = make_rat(factorial(static_cast<unsigned>(2 * d - 2)),
                              factorial(static_cast<unsigned>(d)));
        expect *= d >= 3 ? Rat(ipow(Int(d), static_cast<unsigned long>(d - 3)))
                         : make_rat(Int(1), ipow(Int(d), static_cast<unsigned long>(3 - d)));
        CHECK(hurwitz_genus0(ones) == expect);
    }
}

TEST_CASE("two-part profiles match the factorization count over the centralizer") {
    for (int d = 2; d <= 7; ++d) {
        for (const auto& mu : partitions_of(d)) {
            if (mu.length() != 2) continue;
            Rat per_sigma = arnold_factorization_count(mu.part(0), mu.part(1));
            CHECK(hurwitz_genus0(mu) == per_sigma / Rat(centralizer_order(mu)));
        }
    }
}

TEST_CASE("Denes counts") {
    CHECK(denes_count(1) == 1);
    CHECK(denes_count(2) == 1);
    CHECK(denes_count(3) == 3);
    CHECK(denes_count(5) == 125);
    for (int d = 2; d <= 5; ++d) {
        CHECK(denes_count(d) == Int(static_cast<long>(count_minimal_factorizations(d))));
        // One fixed d-cycle versus the (d-1)!-normalized Hurwitz value.
        CHECK(Rat(denes_count(d)) == Rat(d) * hurwitz_genus0(Partition({d})));
    }
}

TEST_CASE("small-degree formulas at small genus") {
    CHECK(hurwitz_small_degree(0, SmallDegreeFormula::Degree2) == Rat(1, 2));
    CHECK(hurwitz_small_degree(5, SmallDegreeFormula::Degree2) == Rat(1, 2));
    CHECK(hurwitz_small_degree(0, SmallDegreeFormula::Degree3TwoOne) == Rat(4));
    CHECK(hurwitz_small_degree(1, SmallDegreeFormula::Degree3TwoOne) == Rat(40));
    CHECK(hurwitz_small_degree(2, SmallDegreeFormula::Degree3TwoOne) == Rat(364));
    CHECK(hurwitz_small_degree(0, SmallDegreeFormula::Degree3Three) == Rat(1));
    CHECK(hurwitz_small_degree(2, SmallDegreeFormula::Degree3Three) == Rat(81));
    CHECK(hurwitz_small_degree(0, SmallDegreeFormula::Degree4TwoOneOne) == Rat(120));
    CHECK(hurwitz_small_degree(0, SmallDegreeFormula::Degree5) == Rat(8400));
    CHECK(hurwitz_small_degree(1, SmallDegreeFormula::Degree5) == Rat(1189440));
}

TEST_CASE("small-degree formulas match the character backend for g <= 3") {
    for (int g = 0; g <= 3; ++g) {
        CHECK(hurwitz_small_degree(g, SmallDegreeFormula::Degree2) ==
              character_connected(HurwitzInstance(g, Partition({2}))));
        CHECK(hurwitz_small_degree(g, SmallDegreeFormula::Degree3TwoOne) ==
              character_connected(HurwitzInstance(g, Partition({2, 1}))));
        CHECK(hurwitz_small_degree(g, SmallDegreeFormula::Degree3Three) ==
              character_connected(HurwitzInstance(g, Partition({3}))));
        CHECK(hurwitz_small_degree(g, SmallDegreeFormula::Degree4TwoOneOne) ==
              character_connected(HurwitzInstance(g, Partition({2, 1, 1}))));
    }
}

TEST_CASE("degree-5 expression resolves to the repeated column pair") {
    FormulaResolution res = resolve_formula_profile(SmallDegreeFormula::Degree5, 2);
    REQUIRE(res.matches.size() == 2);
    CHECK(res.matches[0] == Partition({2, 1, 1, 1}));
    CHECK(res.matches[1] == Partition({1, 1, 1, 1, 1}));
    CHECK(res.report().find("MATCH") != std::string::npos);
}
