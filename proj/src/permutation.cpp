#include "hurwitz/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace hurwitz {

Perm identity_perm(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

Perm class_representative(const Partition& mu) {
    Perm p(static_cast<size_t>(mu.size()));
    int base = 0;
    for (int i = 0; i < mu.length(); ++i) {
        int len = mu.part(i);
        for (int k = 0; k < len; ++k) p[static_cast<size_t>(base + k)] = base + (k + 1) % len;
        base += len;
    }
    return p;
}

std::vector<std::pair<int, int>> transpositions(int d) {
    std::vector<std::pair<int, int>> ts;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) ts.emplace_back(a, b);
    return ts;
}

bool is_transitive(const std::vector<Perm>& ts, int d) {
    if (d <= 1) return true;
    std::vector<int> parent(static_cast<size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    int comps = d;
    for (const Perm& t : ts) {
        if (static_cast<int>(t.size()) != d) throw std::invalid_argument("is_transitive: size mismatch");
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find(t[static_cast<size_t>(i)]);
            if (a != b) {
                parent[static_cast<size_t>(a)] = b;
                --comps;
            }
        }
    }
    return comps == 1;
}

}  // namespace hurwitz
