#include "doctest.h"

#include <algorithm>

#include "hurwitz/brute_force.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

// All permutations of S_d by image tables.
std::vector<Perm> all_perms(int d) {
    Perm p = identity_perm(d);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("multiplying the unit gives the transposition class sum") {
    Partition e({1, 1, 1});
    ClassVector v = multiply_by_C2(ClassVector::basis(e));
    CHECK(v.coefficient(Partition({2, 1})) == Rat(1));
    CHECK(v.coefficient(e) == Rat(0));
    CHECK(v.coefficient(Partition({3})) == Rat(0));
}

TEST_CASE("C_(3) C_2^4 expands to 54 C_e + 54 C_(3)") {
    ClassVector v = ClassVector::basis(Partition({3}));
    for (int i = 0; i < 4; ++i) v = multiply_by_C2(v);
    CHECK(v.coefficient(Partition({1, 1, 1})) == Rat(54));
    CHECK(v.coefficient(Partition({3})) == Rat(54));
    CHECK(v.coefficient(Partition({2, 1})) == Rat(0));
    // Mass check: |C_(3)| * 3^4 elements in total.
    CHECK(v.mass() == Rat(162));
}

TEST_CASE("class algebra Hurwitz values") {
    CHECK(class_algebra_hurwitz(HurwitzInstance(1, Partition({3}))) == Rat(9));
    CHECK(class_algebra_hurwitz(HurwitzInstance(1, Partition({2, 1}))) == Rat(81, 2));
    for (int d = 1; d <= 4; ++d) {
        Partition ones(std::vector<int>(static_cast<size_t>(d), 1));
        CHECK(class_algebra_disconnected(ones, 0) ==
              make_rat(Int(1), factorial(static_cast<unsigned>(d))));
    }
}

TEST_CASE("multiply_by_C2 is linear and preserves mass up to |C_2|") {
    ClassVector u = ClassVector::basis(Partition({2, 2}));
    ClassVector v = ClassVector::basis(Partition({3, 1}));
    ClassVector combo(4);
    combo += u;
    combo *= Rat(3, 7);
    ClassVector v_scaled = v;
    v_scaled *= Rat(-2);
    combo += v_scaled;

    ClassVector lhs = multiply_by_C2(combo);
    ClassVector mu = multiply_by_C2(u);
    mu *= Rat(3, 7);
    ClassVector mv = multiply_by_C2(v);
    mv *= Rat(-2);
    ClassVector rhs(4);
    rhs += mu;
    rhs += mv;
    CHECK(lhs == rhs);

    CHECK(multiply_by_C2(u).mass() == Rat(6) * u.mass());  // |C_2| = 6 in S_4
}

TEST_CASE("transition counts: double-counting symmetry for d <= 8") {
    for (int d = 2; d <= 8; ++d) {
        const auto& parts = partitions_of(d);
        const auto& table = c2_transition_table(d);
        for (size_t a = 0; a < parts.size(); ++a) {
            for (size_t b = 0; b < parts.size(); ++b) {
                CHECK(class_size(parts[a]) * Int(static_cast<long>(table[a][b])) ==
                      class_size(parts[b]) * Int(static_cast<long>(table[b][a])));
            }
        }
    }
}

TEST_CASE("transition counts match full-class enumeration for d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        const auto& parts = partitions_of(d);
        const auto& table = c2_transition_table(d);
        const auto ts = transpositions(d);
        std::vector<std::vector<long long>> full(parts.size(),
                                                 std::vector<long long>(parts.size(), 0));
        for (const Perm& p : all_perms(d)) {
            int from = partition_index(cycle_type(p));
            for (const auto& [a, b] : ts) {
                Perm q = p;
                for (auto& x : q) {
                    if (x == a) x = b;
                    else if (x == b) x = a;
                }
                ++full[static_cast<size_t>(from)][static_cast<size_t>(partition_index(cycle_type(q)))];
            }
        }
        // full[mu][nu] counts pairs (sigma in C_mu, t); per representative
        // this is |C_mu| * T(mu -> nu).
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = 0; b < parts.size(); ++b)
                CHECK(Int(static_cast<long>(full[a][b])) ==
                      class_size(parts[a]) * Int(static_cast<long>(table[a][b])));
    }
}

TEST_CASE("parity obstruction zeroes mismatched w") {
    for (int d = 2; d <= 5; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int w = 0; w <= 6; ++w) {
                if (((d - mu.length()) - w) % 2 != 0)
                    CHECK(class_algebra_disconnected(mu, w) == Rat(0));
            }
        }
    }
}

TEST_CASE("class algebra equals the character diagonalization for d <= 6") {
    for (int d = 1; d <= 6; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 3; ++g) {
                HurwitzInstance inst(g, mu);
                CHECK(class_algebra_hurwitz(inst) == character_hurwitz(inst));
            }
        }
    }
}

TEST_CASE("class algebra equals brute force without transitivity") {
    for (int d = 2; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 2; ++g) {
                HurwitzInstance inst(g, mu);
                if (inst.branch_count > 8 || !brute_force_feasible(inst)) continue;
                CHECK(class_algebra_hurwitz(inst) == brute_force_hurwitz(inst, false));
            }
        }
    }
}
