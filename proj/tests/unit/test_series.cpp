#include "doctest.h"

#include "hurwitz/brute_force.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/series.hpp"

using namespace hurwitz;

namespace {

Rat class_disc(const Partition& mu, int w) { return class_algebra_disconnected(mu, w); }

TruncatedSeries disconnected_series(int p_cap, int t_cap, bool with_one) {
    return assemble_series_raw(class_disc, p_cap, t_cap, with_one);
}

}  // namespace

TEST_CASE("assembled connected series coefficients") {
    TruncatedSeries h = assemble_series(
        [](int g, const Partition& mu) {
            return connected_from_disconnected(HurwitzInstance(g, mu), class_disc);
        },
        3, 5);
    CHECK(h.coefficient(Partition({2, 1}), 5) == Rat(1, 3));  // 40/5!
    CHECK(h.coefficient(Partition({1}), 0) == Rat(1));
    CHECK(h.coefficient(Partition(), 0) == Rat(0));
}

TEST_CASE("disconnected series has the two-sheet constant term") {
    TruncatedSeries hstar = disconnected_series(2, 2, false);
    CHECK(hstar.coefficient(Partition({1, 1}), 0) == Rat(1, 2));
}

TEST_CASE("exp and log") {
    TruncatedSeries zero(3, 3);
    TruncatedSeries one = series_exp(zero);
    CHECK(one.coefficient(Partition(), 0) == Rat(1));
    CHECK(one.terms().size() == 1);

    TruncatedSeries hstar = disconnected_series(4, 6, true);
    TruncatedSeries h = series_log(hstar);
    CHECK(series_exp(h) == hstar);
    CHECK(series_log(series_exp(h)) == h);
    CHECK(series_exp(h).coefficient(Partition({2, 1}), 5) == Rat(27, 80));  // 81/(2*120)

    CHECK_THROWS_AS(series_exp(one), std::invalid_argument);
    CHECK_THROWS_AS(series_log(h), std::invalid_argument);
}

TEST_CASE("connected extraction through the logarithm") {
    CHECK(connected_from_disconnected(HurwitzInstance(1, Partition({2, 1})), class_disc) ==
          Rat(40));
    CHECK(connected_from_disconnected(HurwitzInstance(0, Partition({2})), class_disc) ==
          Rat(1, 2));
    for (int g = 0; g <= 2; ++g) {
        HurwitzInstance inst(g, Partition({3}));
        CHECK(connected_from_disconnected(inst, class_disc) == class_algebra_hurwitz(inst));
    }
}

TEST_CASE("log extraction matches transitive brute force") {
    for (int d = 2; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0; g <= 2; ++g) {
                HurwitzInstance inst(g, mu);
                if (inst.branch_count > 8) continue;
                CHECK(connected_from_disconnected(inst, class_disc) ==
                      brute_force_hurwitz(inst, true));
            }
        }
    }
}

TEST_CASE("cut-and-join residuals vanish") {
    TruncatedSeries zero(3, 3);
    CHECK(cut_join_residual_disconnected(zero).is_zero());
    CHECK(cut_join_residual_connected(zero).is_zero());

    TruncatedSeries hstar = disconnected_series(4, 6, true);
    CHECK(cut_join_residual_disconnected(hstar).is_zero());
    CHECK(cut_join_residual_connected(series_log(hstar)).is_zero());
}

TEST_CASE("residual caps drop one t degree") {
    TruncatedSeries hstar = disconnected_series(3, 4, true);
    TruncatedSeries r = cut_join_residual_disconnected(hstar);
    CHECK(r.t_cap() == 3);
    CHECK(r.p_cap() == 3);
}

TEST_CASE("series dump format") {
    TruncatedSeries s(3, 5);
    s.add_term(Partition({2, 1}), 5, Rat(1, 3));
    s.add_term(Partition({1}), 0, Rat(1));
    std::string d = s.dump();
    CHECK(d == "1,0,0;0;1\n1,1,0;5;1/3\n");
    CHECK(s.dump() == d);
}

TEST_CASE("assembly is linear in the backend values") {
    // Explicit return types: gmp expression templates must not escape.
    auto f = [](int g, const Partition& mu) -> Rat { return Rat(g + mu.size()); };
    auto g = [](int gg, const Partition& mu) -> Rat { return Rat(2 * gg - mu.length()); };
    auto combo = [&](int gg, const Partition& mu) -> Rat {
        return Rat(3) * f(gg, mu) + Rat(-1, 2) * g(gg, mu);
    };
    TruncatedSeries lhs = assemble_series(combo, 3, 4);
    TruncatedSeries fa = assemble_series(f, 3, 4);
    fa *= Rat(3);
    TruncatedSeries ga = assemble_series(g, 3, 4);
    ga *= Rat(-1, 2);
    fa += ga;
    CHECK(lhs == fa);
}

TEST_CASE("series equality ignores unstored zeros") {
    TruncatedSeries a(2, 2), b(2, 2);
    a.add_term(Partition({1}), 1, Rat(1));
    a.add_term(Partition({1}), 1, Rat(-1));
    CHECK(a == b);
    CHECK(a.is_zero());
}
