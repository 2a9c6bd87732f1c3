#include "doctest.h"

#include <algorithm>
#include <set>

#include "hurwitz/partition.hpp"

using namespace hurwitz;

namespace {

// Independent oracle: weakly decreasing sequences summing to d, found by
// filtering all compositions.
void compositions(int remaining, std::vector<int>& acc, std::set<std::vector<int>>& out) {
    if (remaining == 0) {
        if (std::is_sorted(acc.rbegin(), acc.rend())) out.insert(acc);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        acc.push_back(p);
        compositions(remaining - p, acc, out);
        acc.pop_back();
    }
}

// Independent oracle: count standard Young tableaux by placing 1..d.
long long count_syt(std::vector<int> shape, std::vector<int> fill) {
    long long total = 0;
    bool complete = true;
    for (size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] == shape[r]) continue;
        complete = false;
        if (r == 0 || fill[r] < fill[r - 1]) {
            ++fill[r];
            total += count_syt(shape, fill);
            --fill[r];
        }
    }
    return complete ? 1 : total;
}

}  // namespace

TEST_CASE("partitions_of enumerates in canonical order") {
    const auto& p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});

    const auto& p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("partitions_of(10) matches the composition-filter oracle") {
    std::set<std::vector<int>> oracle;
    std::vector<int> acc;
    compositions(10, acc, oracle);
    CHECK(oracle.size() == 42);
    const auto& ours = partitions_of(10);
    REQUIRE(ours.size() == 42);
    std::set<std::vector<int>> got;
    for (const auto& mu : ours) got.insert(mu.parts());
    CHECK(got == oracle);
}

TEST_CASE("partition invariants and indexing up to d = 12") {
    for (int d = 0; d <= 12; ++d) {
        const auto& all = partitions_of(d);
        std::set<std::vector<int>> seen;
        for (int i = 0; i < static_cast<int>(all.size()); ++i) {
            const auto& mu = all[static_cast<size_t>(i)];
            CHECK(mu.size() == d);
            CHECK(std::is_sorted(mu.parts().rbegin(), mu.parts().rend()));
            for (int p : mu.parts()) CHECK(p >= 1);
            CHECK(partition_index(mu) == i);
            seen.insert(mu.parts());
        }
        CHECK(seen.size() == all.size());
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(canonical_before(all[i], all[i + 1]));
    }
}

TEST_CASE("aut_order") {
    CHECK(aut_order(Partition({2, 1, 1})) == 2);
    CHECK(aut_order(Partition({7})) == 1);
    CHECK(aut_order(Partition({1, 1, 1})) == 6);
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({1, 1, 1, 1, 1}).conjugate() == Partition({5}));
    for (int d = 0; d <= 12; ++d)
        for (const auto& mu : partitions_of(d)) CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("hook data and dimensions") {
    HookData h = hook_data(Partition({3, 1}));
    CHECK(h.dimension == 3);
    REQUIRE(h.hooks.size() == 2);
    CHECK(h.hooks[0] == std::vector<int>{4, 2, 1});
    CHECK(h.hooks[1] == std::vector<int>{1});

    CHECK(hook_data(Partition({6})).dimension == 1);
    CHECK(hook_data(Partition({2, 2})).dimension == 2);
    CHECK(hook_data(Partition()).dimension == 1);

    // Dimension equals the standard-tableau count.
    for (int d = 1; d <= 6; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            std::vector<int> fill(static_cast<size_t>(lambda.length()), 0);
            CHECK(hook_data(lambda).dimension ==
                  Int(static_cast<long>(count_syt(lambda.parts(), fill))));
        }
    }
    // Regular representation: sum of squared dimensions is d!.
    for (int d = 1; d <= 12; ++d) {
        Int sum = 0;
        for (const auto& lambda : partitions_of(d)) {
            Int f = hook_data(lambda).dimension;
            sum += f * f;
        }
        CHECK(sum == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("class sizes") {
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
    CHECK(class_size(Partition({3})) == 2);
    for (int d = 1; d <= 12; ++d) {
        Int sum = 0;
        for (const auto& mu : partitions_of(d)) sum += class_size(mu);
        CHECK(sum == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("class sizes match direct enumeration of S_d for d <= 7") {
    for (int d = 1; d <= 7; ++d) {
        std::vector<long> counts(partitions_of(d).size(), 0);
        std::vector<int> p(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) p[static_cast<size_t>(i)] = i;
        do {
            std::vector<bool> seen(static_cast<size_t>(d), false);
            std::vector<int> lens;
            for (int i = 0; i < d; ++i) {
                if (seen[static_cast<size_t>(i)]) continue;
                int len = 0, j = i;
                while (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = true;
                    j = p[static_cast<size_t>(j)];
                    ++len;
                }
                lens.push_back(len);
            }
            ++counts[static_cast<size_t>(partition_index(Partition(lens)))];
        } while (std::next_permutation(p.begin(), p.end()));
        const auto& parts = partitions_of(d);
        for (size_t i = 0; i < parts.size(); ++i)
            CHECK(class_size(parts[i]) == Int(counts[i]));
    }
}

TEST_CASE("content sums") {
    CHECK(content_sum(Partition({3})) == 3);
    CHECK(content_sum(Partition({1, 1})) == -1);
    for (int d = 0; d <= 10; ++d)
        for (const auto& mu : partitions_of(d))
            CHECK(content_sum(mu) == -content_sum(mu.conjugate()));
}

TEST_CASE("partition text") {
    CHECK(parse_partition("2,1,1") == Partition({2, 1, 1}));
    CHECK(parse_partition("2,1^2") == Partition({2, 1, 1}));
    CHECK(parse_partition("1^4") == Partition({1, 1, 1, 1}));
    CHECK(format_partition(Partition({2, 1, 1})) == "2,1,1");
    CHECK_THROWS_AS(parse_partition("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}
