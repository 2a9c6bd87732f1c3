#include "hurwitz/brute_force.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

struct Dsu {
    std::vector<int> parent, size;
    int comps;
    std::vector<std::pair<int, int>> undo;  // (child root, old size of new root)

    explicit Dsu(int d) : parent(static_cast<size_t>(d)), size(static_cast<size_t>(d), 1), comps(d) {
        for (int i = 0; i < d; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) const {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    // Returns true if a merge happened; merges are undone in LIFO order.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        undo.emplace_back(b, size[static_cast<size_t>(a)]);
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        --comps;
        return true;
    }
    void rollback(size_t mark) {
        while (undo.size() > mark) {
            auto [child, old_size] = undo.back();
            undo.pop_back();
            int root = parent[static_cast<size_t>(child)];
            size[static_cast<size_t>(root)] = old_size;
            parent[static_cast<size_t>(child)] = child;
            ++comps;
        }
    }
};

struct Search {
    int d;
    int w;
    int target_len;
    const Partition* mu;
    bool connected;
    std::vector<std::pair<int, int>> ts;
    Perm acc;
    int cycles;
    Dsu dsu;
    unsigned long long count = 0;

    Search(const HurwitzInstance& inst, bool conn)
        : d(inst.degree),
          w(inst.branch_count),
          target_len(inst.profile.length()),
          mu(&inst.profile),
          connected(conn),
          ts(transpositions(inst.degree)),
          acc(identity_perm(inst.degree)),
          cycles(inst.degree),
          dsu(inst.degree) {}

    bool same_cycle(int a, int b) const {
        int j = acc[static_cast<size_t>(a)];
        while (j != a) {
            if (j == b) return true;
            j = acc[static_cast<size_t>(j)];
        }
        return false;
    }

    void dfs(int depth) {
        int remaining = w - depth;
        int excess = cycles - target_len;
        if (std::abs(excess) > remaining || ((excess - remaining) & 1)) return;
        if (connected && dsu.comps - 1 > remaining) return;
        if (remaining == 0) {
            if (cycle_type(acc) == *mu) ++count;
            return;
        }
        for (const auto& [a, b] : ts) {
            bool cut = same_cycle(a, b);
            std::swap(acc[static_cast<size_t>(a)], acc[static_cast<size_t>(b)]);
            cycles += cut ? 1 : -1;
            size_t mark = dsu.undo.size();
            if (connected) dsu.unite(a, b);
            dfs(depth + 1);
            if (connected) dsu.rollback(mark);
            cycles -= cut ? 1 : -1;
            std::swap(acc[static_cast<size_t>(a)], acc[static_cast<size_t>(b)]);
        }
    }

    // Same as dfs but splits the first level across workers by stride.
    void dfs_strided(int offset, int stride) {
        for (size_t i = static_cast<size_t>(offset); i < ts.size(); i += static_cast<size_t>(stride)) {
            auto [a, b] = ts[i];
            bool cut = same_cycle(a, b);
            std::swap(acc[static_cast<size_t>(a)], acc[static_cast<size_t>(b)]);
            cycles += cut ? 1 : -1;
            size_t mark = dsu.undo.size();
            if (connected) dsu.unite(a, b);
            dfs(1);
            if (connected) dsu.rollback(mark);
            cycles -= cut ? 1 : -1;
            std::swap(acc[static_cast<size_t>(a)], acc[static_cast<size_t>(b)]);
        }
    }
};

}  // namespace

bool brute_force_feasible(const HurwitzInstance& inst, const BruteForceOptions& opts) {
    int t = inst.degree * (inst.degree - 1) / 2;
    if (inst.branch_count == 0) return true;
    if (t == 0) return true;  // zero tuples, nothing to enumerate
    double work = static_cast<double>(inst.branch_count) * std::log(static_cast<double>(t));
    return work <= std::log(static_cast<double>(opts.work_bound)) + 1e-9;
}

Rat brute_force_hurwitz(const HurwitzInstance& inst, bool connected,
                        const BruteForceOptions& opts) {
    if (!brute_force_feasible(inst, opts))
        throw FeasibilityError("instance too large for brute force: " +
                               std::to_string(inst.degree * (inst.degree - 1) / 2) + "^" +
                               std::to_string(inst.branch_count) + " states");

    const int w = inst.branch_count;
    unsigned long long total = 0;
    if (w == 0) {
        Search s(inst, connected);
        s.dfs(0);
        total = s.count;
    } else {
        int threads = opts.threads > 0 ? opts.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
        int t = inst.degree * (inst.degree - 1) / 2;
        threads = std::min(threads, std::max(1, t));
        std::vector<unsigned long long> counts(static_cast<size_t>(threads), 0);
        std::vector<std::thread> pool;
        for (int m = 0; m < threads; ++m) {
            pool.emplace_back([&, m]() {
                Search s(inst, connected);
                s.dfs_strided(m, threads);
                counts[static_cast<size_t>(m)] = s.count;
            });
        }
        for (auto& th : pool) th.join();
        for (auto c : counts) total += c;
    }
    return make_rat(Int(static_cast<unsigned long>(total)),
                    factorial(static_cast<unsigned>(inst.degree)));
}

}  // namespace hurwitz
